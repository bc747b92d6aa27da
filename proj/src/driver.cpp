#include "weno/driver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weno/euler.hpp"
#include "weno/metrics.hpp"
#include "weno/util.hpp"

namespace fs = std::filesystem;

namespace weno {

namespace {

// Merge checkpoints and t_final into an increasing list of stop times.
std::vector<double> stop_times(double t_final, const std::vector<double>& checkpoints) {
  std::vector<double> ts;
  for (double t : checkpoints)
    if (t > 0.0 && t < t_final) ts.push_back(t);
  ts.push_back(t_final);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

Solve1DResult solve_1d(ProblemId id, const SchemeSpec& scheme, int n, const CflRule& cfl,
                       double t_final, std::optional<BoundaryKind> bc_override, int workers,
                       const std::vector<double>& checkpoints,
                       const std::function<void(double, const Field1D&)>& on_checkpoint) {
  const auto& info = problem_info(id);
  if (info.dim != 1) throw std::invalid_argument("solve_1d: not a 1D problem");

  Rhs1DConfig cfg;
  cfg.grid = Grid1D(info.x0, info.x1, n);
  cfg.bc = bc_override.value_or(info.bc);
  cfg.eq = info.euler ? Equation1D::Euler : Equation1D::Advection;
  cfg.gamma = info.gamma;
  cfg.scheme = scheme;
  cfg.workers = workers;

  Solve1DResult res;
  res.grid = cfg.grid;
  res.state = init_field_1d(id, cfg.grid);
  res.t = 0.0;

  RkWorkspace<Field1D> ws;
  auto rhs = [&cfg](Field1D& s, Field1D& tend) { rhs_1d(cfg, s, tend); };

  for (double target : stop_times(t_final, checkpoints)) {
    while (res.t < target) {
      const double alpha = max_wave_speed(cfg, res.state);
      double dt = dt_from_cfl(cfl, cfg.grid.dx(), alpha);
      bool last = false;
      if (dt >= target - res.t) {
        dt = target - res.t;
        last = true;
      }
      ssp_rk3_step(res.state, dt, rhs, ws);
      res.t = last ? target : res.t + dt;
    }
    if (on_checkpoint) on_checkpoint(target, res.state);
  }
  return res;
}

Solve2DResult solve_2d(ProblemId id, const SchemeSpec& scheme, int nx, int ny,
                       const CflRule& cfl, double t_final,
                       std::optional<BoundaryKind> bc_override, int workers,
                       const std::vector<double>& checkpoints,
                       const std::function<void(double, const Field2D&)>& on_checkpoint) {
  const auto& info = problem_info(id);
  if (info.dim != 2) throw std::invalid_argument("solve_2d: not a 2D problem");

  Rhs2DConfig cfg;
  cfg.grid = Grid2D(info.x0, info.x1, info.y0, info.y1, nx, ny);
  cfg.bc = bc_override.value_or(info.bc);
  cfg.gamma = info.gamma;
  cfg.scheme = scheme;
  cfg.workers = workers;

  Solve2DResult res;
  res.grid = cfg.grid;
  res.state = init_field_2d(id, cfg.grid);
  res.t = 0.0;

  RkWorkspace<Field2D> ws;
  auto rhs = [&cfg](Field2D& s, Field2D& tend) { rhs_2d(cfg, s, tend); };

  for (double target : stop_times(t_final, checkpoints)) {
    while (res.t < target) {
      const double ax = max_wave_speed_x(cfg, res.state);
      const double ay = max_wave_speed_y(cfg, res.state);
      double dt = dt_from_cfl(cfl, cfg.grid.dx(), cfg.grid.dy(), ax, ay);
      bool last = false;
      if (dt >= target - res.t) {
        dt = target - res.t;
        last = true;
      }
      ssp_rk3_step(res.state, dt, rhs, ws);
      res.t = last ? target : res.t + dt;
    }
    if (on_checkpoint) on_checkpoint(target, res.state);
  }
  return res;
}

void trace_final_mapping(ProblemId id, const SchemeSpec& scheme, const Solve1DResult& res,
                         std::optional<BoundaryKind> bc_override, TraceSink& sink) {
  const auto& info = problem_info(id);
  Rhs1DConfig cfg;
  cfg.grid = res.grid;
  cfg.bc = bc_override.value_or(info.bc);
  cfg.eq = info.euler ? Equation1D::Euler : Equation1D::Advection;
  cfg.gamma = info.gamma;
  cfg.scheme = scheme;
  cfg.workers = 1;
  cfg.trace = &sink;
  cfg.trace_time = res.t;
  Field1D state = res.state;
  Field1D tend = res.state;
  rhs_1d(cfg, state, tend);
}

std::pair<double, double> scalar_solution_error(ProblemId id, const Solve1DResult& res) {
  const auto exact = exact_scalar_averages(id, res.grid, res.t);
  std::vector<double> num(res.grid.n);
  for (int i = 0; i < res.grid.n; ++i) num[i] = res.state.at(0, i);
  return error_norms(num, exact, res.grid.dx());
}

std::pair<double, double> density_solution_error(ProblemId id, const Solve2DResult& res) {
  const auto exact = exact_density_averages(id, res.grid, res.t);
  std::vector<double> num(exact.size());
  for (int j = 0; j < res.grid.ny; ++j)
    for (int i = 0; i < res.grid.nx; ++i)
      num[static_cast<size_t>(j) * res.grid.nx + i] = res.state.at(0, i, j);
  return error_norms(num, exact, res.grid.dx() * res.grid.dy());
}

double density_distance_to_reference(const Solve1DResult& res,
                                     const std::vector<std::array<double, 2>>& ref) {
  if (ref.size() < 2) throw std::invalid_argument("reference profile too short");
  double l1 = 0.0;
  size_t k = 0;
  for (int i = 0; i < res.grid.n; ++i) {
    const double x = res.grid.center(i);
    while (k + 2 < ref.size() && ref[k + 1][0] < x) ++k;
    const double x0 = ref[k][0], x1 = ref[k + 1][0];
    const double w = std::clamp((x - x0) / (x1 - x0), 0.0, 1.0);
    const double r = (1.0 - w) * ref[k][1] + w * ref[k + 1][1];
    l1 += std::fabs(res.state.at(0, i) - r);
  }
  return l1 * res.grid.dx();
}

std::vector<std::array<double, 2>> reference_density_profile(ProblemId id, int n, double t,
                                                             const std::string& cache_dir,
                                                             int workers) {
  const auto& info = problem_info(id);
  std::ostringstream key;
  key << "ref-" << info.name << "-n" << n << "-t" << format_full(t) << ".csv";
  const fs::path path = fs::path(cache_dir) / key.str();

  std::vector<std::array<double, 2>> out;
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      const size_t comma = line.find(',');
      if (comma == std::string::npos) continue;
      out.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    if (static_cast<int>(out.size()) == n) return out;
    out.clear();  // stale cache, regenerate
  }

  const SchemeSpec js = make_scheme(MapFamily::Identity, false);
  const auto res = solve_1d(id, js, n, info.default_cfl, t, {}, workers);
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back({res.grid.center(i), res.state.at(0, i)});

  fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write reference cache: " + path.string());
  f << "x,rho\n";
  for (const auto& row : out) f << format_full(row[0]) << ',' << format_full(row[1]) << '\n';
  return out;
}

std::vector<std::string> run_single(const RunConfig& cfg, const std::string& out_dir) {
  const auto& info = problem_info(cfg.problem);
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  auto out_path = [&](const std::string& name) { return (fs::path(out_dir) / name).string(); };

  if (info.dim == 1) {
    const auto res = solve_1d(cfg.problem, cfg.scheme, cfg.nx, cfg.cfl, cfg.t_final,
                              cfg.boundary_override, cfg.workers);
    if (cfg.outputs.snapshot || (!cfg.outputs.errors && !cfg.outputs.trace)) {
      const std::string p = out_path("snapshot.csv");
      emit_field_csv(res.grid, res.state, info.gamma, p, cfg.full_precision);
      written.push_back(p);
    }
    if (cfg.outputs.errors) {
      const auto [l1, linf] = scalar_solution_error(cfg.problem, res);
      ErrorReport rep;
      rep.rows.push_back({scheme_name(cfg.scheme), double(cfg.nx), l1, linf, {}, {}, {}, {}});
      const std::string p = out_path("errors.csv");
      emit_error_report_csv(rep, p, cfg.full_precision);
      written.push_back(p);
    }
    if (cfg.outputs.trace) {
      TraceSink sink;
      trace_final_mapping(cfg.problem, cfg.scheme, res, cfg.boundary_override, sink);
      const std::string p = out_path("trace.csv");
      sink.write_csv(p);
      written.push_back(p);
    }
    return written;
  }

  const auto res = solve_2d(cfg.problem, cfg.scheme, cfg.nx, cfg.ny, cfg.cfl, cfg.t_final,
                            cfg.boundary_override, cfg.workers);
  if (cfg.outputs.snapshot ||
      (!cfg.outputs.errors && cfg.outputs.slices.empty() && !cfg.outputs.trace)) {
    const std::string p = out_path("snapshot.csv");
    emit_field_csv(res.grid, res.state, info.gamma, p, cfg.full_precision);
    written.push_back(p);
  }
  if (cfg.outputs.errors) {
    const auto [l1, linf] = density_solution_error(cfg.problem, res);
    ErrorReport rep;
    rep.rows.push_back({scheme_name(cfg.scheme), double(cfg.nx), l1, linf, {}, {}, {}, {}});
    const std::string p = out_path("errors.csv");
    emit_error_report_csv(rep, p, cfg.full_precision);
    written.push_back(p);
  }
  for (const auto& sl : cfg.outputs.slices) {
    std::ostringstream name;
    name << "slice-" << (sl.axis == 1 ? 'y' : 'x') << format_full(sl.coord) << ".csv";
    const std::string p = out_path(name.str());
    emit_slice_csv(res.grid, res.state, sl.axis, sl.coord, p, cfg.full_precision);
    written.push_back(p);
  }
  return written;
}

}  // namespace weno
