#pragma once
// Benchmark catalogue: initial conditions, exact solutions where closed
// forms exist, per-problem domains/boundaries/CFL conventions, and
// cell-average initialization by per-cell Gauss quadrature (piecewise at
// discontinuities).

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weno/grid.hpp"
#include "weno/time_integration.hpp"

namespace weno {

enum class ProblemId {
  Sine1D,         // u_t + u_x = 0, u0 = sin(pi x)
  HighOrderCP,    // u0 = exp(-(x-9)^5 cos^9(pi (x-9))), high-order critical points
  Slp,            // Gaussian / square wave / triangle / semi-ellipse composite
  Step,           // two constant states
  ShuOsher,       // 1D Euler shock / entropy-wave interaction
  TitarevToro,    // severe Shu-Osher variant
  DensityWave2D1, // 2D Euler density wave
  DensityWave2D2, // density wave with critical points
  ShockVortex,    // 2D Euler shock-vortex interaction
};

struct ProblemInfo {
  ProblemId id;
  std::string name;
  int dim = 1;       // 1 or 2
  bool euler = false;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  BoundaryKind bc = BoundaryKind::Periodic;
  CflRule default_cfl;
  double default_t_final = 0.0;
  double gamma = 1.4;
  bool has_exact = false;
};

const ProblemInfo& problem_info(ProblemId id);
std::optional<ProblemId> problem_from_name(const std::string& name);

// ---- point evaluation (position must lie inside the domain) ---------------

double scalar_initial(ProblemId id, double x);
double scalar_exact(ProblemId id, double x, double t);  // unit advection speed

struct Prim1D { double rho, u, p; };
Prim1D euler_initial_1d(ProblemId id, double x);

struct Prim2D { double rho, u, v, p; };
Prim2D euler_initial_2d(ProblemId id, double x, double y);
double density_exact_2d(ProblemId id, double x, double y, double t);

// ---- cell-average initialization and exact fields --------------------------

Field1D init_field_1d(ProblemId id, const Grid1D& g);
Field2D init_field_2d(ProblemId id, const Grid2D& g);

// Exact cell averages at time t (problems with closed-form solutions only).
std::vector<double> exact_scalar_averages(ProblemId id, const Grid1D& g, double t);
std::vector<double> exact_density_averages(ProblemId id, const Grid2D& g, double t);

// Average of f over [a, b] by 5-point Gauss quadrature, splitting at the
// given breakpoints. Exposed for tests.
double average_over(double a, double b, const std::function<double(double)>& f,
                    const std::vector<double>& breakpoints = {});

}  // namespace weno
