#pragma once
// Semi-discrete right-hand side for 1D scalar advection and 1D Euler:
// ghost fill, global Lax-Friedrichs flux splitting, local characteristic
// decomposition, WENO interface reconstruction of the split fluxes.

#include <span>

#include "weno/grid.hpp"
#include "weno/order_preserving.hpp"
#include "weno/scheme.hpp"

namespace weno {

enum class Equation1D { Advection, Euler };

struct Rhs1DConfig {
  Grid1D grid;
  BoundaryKind bc = BoundaryKind::Periodic;
  Equation1D eq = Equation1D::Advection;
  double advection_speed = 1.0;
  double gamma = 1.4;
  SchemeSpec scheme;
  int workers = 1;

  // When set, the upwind-side reconstruction at every interface is recorded,
  // one row per characteristic field, stamped with trace_time.
  TraceSink* trace = nullptr;
  double trace_time = 0.0;
};

// f+- = (f +- alpha u) / 2; alpha must be positive.
void lf_split(std::span<const double> f, std::span<const double> u, double alpha,
              std::span<double> f_plus, std::span<double> f_minus);

// Advection: |speed|. Euler: max over cells of |u| + c.
double max_wave_speed(const Rhs1DConfig& cfg, const Field1D& state);

// Fills the state's ghost layers, then writes -(fhat_{j+1/2} - fhat_{j-1/2})/dx
// into the interior of tend. Interior of state is untouched.
void rhs_1d(const Rhs1DConfig& cfg, Field1D& state, Field1D& tend);

}  // namespace weno
