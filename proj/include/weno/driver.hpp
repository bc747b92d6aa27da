#pragma once
// Solve loops (time stepping with final-step clamping and checkpointing),
// error evaluation against closed forms, reference-solution caching, and
// single-run orchestration from a RunConfig.

#include <functional>
#include <string>
#include <vector>

#include "weno/config.hpp"
#include "weno/csv.hpp"
#include "weno/order_preserving.hpp"
#include "weno/rhs1d.hpp"
#include "weno/rhs2d.hpp"

namespace weno {

struct Solve1DResult {
  Grid1D grid;
  Field1D state;
  double t = 0.0;
};

struct Solve2DResult {
  Grid2D grid;
  Field2D state;
  double t = 0.0;
};

// Advances the problem's cell-average initialization to t_final with SSP-RK3.
// The optional checkpoint callback fires exactly at each listed time (time
// steps are clamped to land on them) and at t_final.
Solve1DResult solve_1d(ProblemId id, const SchemeSpec& scheme, int n, const CflRule& cfl,
                       double t_final, std::optional<BoundaryKind> bc_override = {},
                       int workers = 1,
                       const std::vector<double>& checkpoints = {},
                       const std::function<void(double, const Field1D&)>& on_checkpoint = {});

Solve2DResult solve_2d(ProblemId id, const SchemeSpec& scheme, int nx, int ny,
                       const CflRule& cfl, double t_final,
                       std::optional<BoundaryKind> bc_override = {}, int workers = 1,
                       const std::vector<double>& checkpoints = {},
                       const std::function<void(double, const Field2D&)>& on_checkpoint = {});

// One extra rhs evaluation of the final state with trace recording enabled.
void trace_final_mapping(ProblemId id, const SchemeSpec& scheme, const Solve1DResult& res,
                         std::optional<BoundaryKind> bc_override, TraceSink& sink);

// (L1, Linf) of the scalar solution / the 2D density against exact averages.
std::pair<double, double> scalar_solution_error(ProblemId id, const Solve1DResult& res);
std::pair<double, double> density_solution_error(ProblemId id, const Solve2DResult& res);

// L1 distance of the density to a fine-grid reference restricted to this
// grid's cell centers by linear interpolation.
double density_distance_to_reference(const Solve1DResult& res,
                                     const std::vector<std::array<double, 2>>& ref_xrho);

// WENO-JS reference run (density profile), cached as CSV under cache_dir,
// keyed by problem/N/t.
std::vector<std::array<double, 2>> reference_density_profile(ProblemId id, int n, double t,
                                                             const std::string& cache_dir,
                                                             int workers);

// Runs one configured experiment; returns the files written.
std::vector<std::string> run_single(const RunConfig& cfg, const std::string& out_dir);

}  // namespace weno
