#include "weno/presets.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "weno/driver.hpp"
#include "weno/util.hpp"

namespace fs = std::filesystem;

namespace weno {

namespace {

const std::vector<MapFamily> kMappedFamilies = {MapFamily::M,     MapFamily::PM,
                                                MapFamily::IM,    MapFamily::PPM5,
                                                MapFamily::RM260, MapFamily::ACM};

std::vector<SchemeSpec> all_schemes() {
  std::vector<SchemeSpec> v;
  v.push_back(make_scheme(MapFamily::Identity, false, true));  // ilw
  v.push_back(make_scheme(MapFamily::Identity, false));        // js
  for (MapFamily f : kMappedFamilies) {
    v.push_back(make_scheme(f, false));
    v.push_back(make_scheme(f, true));
  }
  return v;
}

std::vector<SchemeSpec> desk_schemes() {
  return {make_scheme(MapFamily::Identity, false, true), make_scheme(MapFamily::Identity, false),
          make_scheme(MapFamily::M, false), make_scheme(MapFamily::M, true)};
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// Long-run scalar advection: one solve per scheme with error checkpoints,
// increased errors vs the ILW baseline.
std::vector<std::string> scalar_error_table(const std::string& preset, ProblemId problem, int n,
                                            const std::vector<double>& times,
                                            const std::vector<SchemeSpec>& schemes,
                                            const std::string& out_dir, int workers) {
  const auto& info = problem_info(problem);
  const double t_final = times.back();

  std::map<double, std::pair<double, double>> ilw_errors;
  ErrorReport report;
  auto run_scheme = [&](const SchemeSpec& scheme, bool is_baseline) {
    solve_1d(problem, scheme, n, info.default_cfl, t_final, {}, workers, times,
             [&](double t, const Field1D& state) {
               Solve1DResult snap{Grid1D(info.x0, info.x1, n), state, t};
               const auto [l1, linf] = scalar_solution_error(problem, snap);
               if (is_baseline) ilw_errors[t] = {l1, linf};
               ErrorRow row;
               row.scheme = scheme_name(scheme);
               row.n = t;
               row.l1 = l1;
               row.linf = linf;
               if (!is_baseline && ilw_errors.count(t)) {
                 row.chi1 = increased_errors(l1, ilw_errors[t].first);
                 row.chi_inf = increased_errors(linf, ilw_errors[t].second);
               }
               report.rows.push_back(row);
             });
  };

  bool have_ilw = false;
  for (const auto& s : schemes)
    if (s.ideal) {
      run_scheme(s, true);
      have_ilw = true;
      break;
    }
  if (!have_ilw) run_scheme(make_scheme(MapFamily::Identity, false, true), true);
  for (const auto& s : schemes)
    if (!s.ideal) run_scheme(s, false);

  const std::string path = join(out_dir, preset + "-errors.csv");
  emit_error_report_csv(report, path, false, /*label_is_time=*/true);
  return {path};
}

// Grid-refinement table for problems with closed-form solutions.
std::vector<std::string> convergence_table(const std::string& preset, ProblemId problem,
                                           const std::vector<int>& grids, double t_final,
                                           const std::vector<SchemeSpec>& schemes,
                                           const std::string& out_dir, int workers) {
  const auto& info = problem_info(problem);
  ErrorReport report;
  for (const auto& scheme : schemes) {
    double prev_l1 = 0, prev_linf = 0;
    int prev_n = 0;
    for (int n : grids) {
      double l1, linf;
      if (info.dim == 1) {
        const auto res = solve_1d(problem, scheme, n, info.default_cfl, t_final, {}, workers);
        std::tie(l1, linf) = scalar_solution_error(problem, res);
      } else {
        const auto res = solve_2d(problem, scheme, n, n, info.default_cfl, t_final, {}, workers);
        std::tie(l1, linf) = density_solution_error(problem, res);
      }
      ErrorRow row;
      row.scheme = scheme_name(scheme);
      row.n = n;
      row.l1 = l1;
      row.linf = linf;
      if (prev_n > 0) {
        row.l1_order = convergence_order(prev_l1, l1, prev_n, n);
        row.linf_order = convergence_order(prev_linf, linf, prev_n, n);
      }
      report.rows.push_back(row);
      prev_l1 = l1;
      prev_linf = linf;
      prev_n = n;
    }
  }
  const std::string path = join(out_dir, preset + "-errors.csv");
  emit_error_report_csv(report, path);
  return {path};
}

// Step problem at desk scale: profiles plus overshoot against [0, 1].
std::vector<std::string> step_overshoot_table(const std::string& preset, int n, double t_final,
                                              const std::vector<SchemeSpec>& schemes,
                                              const std::string& out_dir, int workers) {
  const auto& info = problem_info(ProblemId::Step);
  std::vector<std::string> written;
  std::ostringstream table;
  table << "scheme,n,t,overshoot\n";
  for (const auto& scheme : schemes) {
    const auto res =
        solve_1d(ProblemId::Step, scheme, n, info.default_cfl, t_final, {}, workers);
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = res.state.at(0, i);
    table << scheme_name(scheme) << ',' << n << ',' << format_full(t_final) << ','
          << format_sci6(overshoot_metric(u, 0.0, 1.0)) << '\n';
    const std::string snap = join(out_dir, preset + "-" + scheme_name(scheme) + ".csv");
    emit_field_csv(res.grid, res.state, info.gamma, snap);
    written.push_back(snap);
  }
  const std::string path = join(out_dir, preset + "-overshoot.csv");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << table.str();
  written.push_back(path);
  return written;
}

// 1D Euler profiles against a cached fine-grid WENO-JS reference.
std::vector<std::string> euler_profiles(const std::string& preset, ProblemId problem, int n,
                                        int ref_n, double t_final,
                                        const std::vector<SchemeSpec>& schemes,
                                        const std::string& out_dir, int workers) {
  const auto& info = problem_info(problem);
  std::vector<std::string> written;
  const auto ref =
      reference_density_profile(problem, ref_n, t_final, join(out_dir, "cache"), workers);

  std::ostringstream dist;
  dist << "scheme,n,l1_vs_reference\n";
  for (const auto& scheme : schemes) {
    const auto res = solve_1d(problem, scheme, n, info.default_cfl, t_final, {}, workers);
    const std::string snap = join(out_dir, preset + "-" + scheme_name(scheme) + ".csv");
    emit_field_csv(res.grid, res.state, info.gamma, snap);
    written.push_back(snap);
    dist << scheme_name(scheme) << ',' << n << ','
         << format_sci6(density_distance_to_reference(res, ref)) << '\n';
  }
  std::ofstream rf(join(out_dir, preset + "-reference.csv"));
  rf << "x,rho\n";
  for (const auto& row : ref) rf << format_full(row[0]) << ',' << format_full(row[1]) << '\n';
  written.push_back(join(out_dir, preset + "-reference.csv"));

  const std::string dpath = join(out_dir, preset + "-distance.csv");
  std::ofstream df(dpath);
  if (!df) throw std::runtime_error("cannot open " + dpath);
  df << dist.str();
  written.push_back(dpath);
  return written;
}

// Scalar runs that also dump the final-time mapping trace per scheme.
std::vector<std::string> traced_profiles(const std::string& preset, ProblemId problem, int n,
                                         double t_final, const std::vector<SchemeSpec>& schemes,
                                         const std::string& out_dir, int workers,
                                         bool want_trace) {
  const auto& info = problem_info(problem);
  std::vector<std::string> written;
  for (const auto& scheme : schemes) {
    const auto res = solve_1d(problem, scheme, n, info.default_cfl, t_final, {}, workers);
    const std::string snap = join(out_dir, preset + "-" + scheme_name(scheme) + ".csv");
    emit_field_csv(res.grid, res.state, info.gamma, snap);
    written.push_back(snap);
    if (want_trace && !scheme.ideal) {
      TraceSink sink;
      trace_final_mapping(problem, scheme, res, {}, sink);
      const std::string tpath =
          join(out_dir, preset + "-" + scheme_name(scheme) + "-trace.csv");
      sink.write_csv(tpath);
      written.push_back(tpath);
    }
  }
  return written;
}

std::vector<std::string> shock_vortex_run(const std::string& preset, int n,
                                          const std::vector<SchemeSpec>& schemes,
                                          const std::string& out_dir, int workers) {
  const auto& info = problem_info(ProblemId::ShockVortex);
  std::vector<std::string> written;
  for (const auto& scheme : schemes) {
    const std::string tag = preset + "-" + scheme_name(scheme);
    solve_2d(ProblemId::ShockVortex, scheme, n, n, info.default_cfl, 0.60, {}, workers,
             {0.35},
             [&](double t, const Field2D& state) {
               const Grid2D g(info.x0, info.x1, info.y0, info.y1, n, n);
               const bool first = t < 0.5;
               const std::vector<double> coords =
                   first ? std::vector<double>{0.65, 0.75} : std::vector<double>{0.25, 0.30};
               for (double c : coords) {
                 std::ostringstream name;
                 name << tag << "-t" << format_full(t) << "-slice-y" << format_full(c)
                      << ".csv";
                 const std::string p = join(out_dir, name.str());
                 emit_slice_csv(g, state, 1, c, p);
                 written.push_back(p);
               }
             });
  }
  return written;
}

using Runner = std::function<std::vector<std::string>(const std::string& out, int workers,
                                                      bool trace)>;

struct Preset {
  PresetInfo info;
  Runner run;
};

const std::vector<Preset>& registry() {
  static const std::vector<Preset> presets = [] {
    std::vector<Preset> v;
    auto add = [&v](const std::string& name, const std::string& desc, Runner r) {
      v.push_back({{name, desc}, std::move(r)});
    };

    add("longrun-n300-t15", "long-run advection with high-order critical points, N=300, t=15",
        [](const std::string& out, int w, bool) {
          return scalar_error_table("longrun-n300-t15", ProblemId::HighOrderCP, 300, {15.0},
                                    all_schemes(), out, w);
        });
    add("longrun-n300", "same study to t=1200 with checkpoints (slow)",
        [](const std::string& out, int w, bool) {
          return scalar_error_table("longrun-n300", ProblemId::HighOrderCP, 300,
                                    {15, 60, 150, 300, 600, 900, 1200}, all_schemes(), out, w);
        });
    add("longrun-desk", "desk variant: N=300, t=15, ILW/JS/M/LOP-M",
        [](const std::string& out, int w, bool) {
          return scalar_error_table("longrun-desk", ProblemId::HighOrderCP, 300, {15.0},
                                    desk_schemes(), out, w);
        });
    add("step-t2000", "step-wave convergence table at t=2000, N=200/400/800 (very slow)",
        [](const std::string& out, int w, bool) {
          return convergence_table("step-t2000", ProblemId::Step, {200, 400, 800}, 2000.0,
                                   all_schemes(), out, w);
        });
    add("step-desk", "step wave at N=400, t=50: profiles and overshoot",
        [](const std::string& out, int w, bool) {
          std::vector<SchemeSpec> schemes = {make_scheme(MapFamily::Identity, false),
                                             make_scheme(MapFamily::PM, false)};
          for (MapFamily f : kMappedFamilies) schemes.push_back(make_scheme(f, true));
          return step_overshoot_table("step-desk", 400, 50.0, schemes, out, w);
        });
    add("slp-n800-t2", "composite-wave profiles and mapping traces, N=800, t=2",
        [](const std::string& out, int w, bool) {
          std::vector<SchemeSpec> schemes;
          for (MapFamily f : kMappedFamilies) {
            schemes.push_back(make_scheme(f, false));
            schemes.push_back(make_scheme(f, true));
          }
          return traced_profiles("slp-n800-t2", ProblemId::Slp, 800, 2.0, schemes, out, w,
                                 true);
        });
    add("sine-trace", "smooth advection mapping traces, N=200, t=2",
        [](const std::string& out, int w, bool) {
          std::vector<SchemeSpec> schemes = {
              make_scheme(MapFamily::M, false), make_scheme(MapFamily::M, true),
              make_scheme(MapFamily::RM260, false), make_scheme(MapFamily::RM260, true)};
          return traced_profiles("sine-trace", ProblemId::Sine1D, 200, 2.0, schemes, out, w,
                                 true);
        });
    add("shu-osher", "shock / entropy-wave interaction, N=300 vs N=10000 reference",
        [](const std::string& out, int w, bool) {
          return euler_profiles("shu-osher", ProblemId::ShuOsher, 300, 10000, 1.8,
                                all_schemes(), out, w);
        });
    add("shu-osher-desk", "desk variant: N=200 vs N=2000 reference",
        [](const std::string& out, int w, bool) {
          return euler_profiles("shu-osher-desk", ProblemId::ShuOsher, 200, 2000, 1.8,
                                desk_schemes(), out, w);
        });
    add("titarev-toro", "severe oscillatory variant, N=1500 vs N=10000 reference (slow)",
        [](const std::string& out, int w, bool) {
          return euler_profiles("titarev-toro", ProblemId::TitarevToro, 1500, 10000, 5.0,
                                all_schemes(), out, w);
        });
    add("titarev-toro-desk", "desk variant: N=500 vs N=2000 reference",
        [](const std::string& out, int w, bool) {
          return euler_profiles("titarev-toro-desk", ProblemId::TitarevToro, 500, 2000, 5.0,
                                desk_schemes(), out, w);
        });
    add("accuracy2d-1", "2D density-wave accuracy table, grids 40..100 (slow)",
        [](const std::string& out, int w, bool) {
          return convergence_table("accuracy2d-1", ProblemId::DensityWave2D1,
                                   {40, 60, 80, 100}, 2.0, all_schemes(), out, w);
        });
    add("accuracy2d-1-desk", "desk variant: grids 40/60, ILW/JS/M/LOP-M",
        [](const std::string& out, int w, bool) {
          return convergence_table("accuracy2d-1-desk", ProblemId::DensityWave2D1, {40, 60},
                                   2.0, desk_schemes(), out, w);
        });
    add("accuracy2d-2", "2D density wave with critical points, grids 40..100 (slow)",
        [](const std::string& out, int w, bool) {
          return convergence_table("accuracy2d-2", ProblemId::DensityWave2D2,
                                   {40, 60, 80, 100}, 2.0, all_schemes(), out, w);
        });
    add("accuracy2d-2-desk", "desk variant: grids 40/60, ILW/JS/M/LOP-M",
        [](const std::string& out, int w, bool) {
          return convergence_table("accuracy2d-2-desk", ProblemId::DensityWave2D2, {40, 60},
                                   2.0, desk_schemes(), out, w);
        });
    add("shock-vortex", "shock-vortex interaction, 800x800, slices at t=0.35/0.60 (very slow)",
        [](const std::string& out, int w, bool) {
          std::vector<SchemeSpec> schemes;
          for (MapFamily f : kMappedFamilies) {
            schemes.push_back(make_scheme(f, false));
            schemes.push_back(make_scheme(f, true));
          }
          return shock_vortex_run("shock-vortex", 800, schemes, out, w);
        });
    add("shock-vortex-desk", "desk variant: 200x200, JS/M/LOP-M/PM6/LOP-PM6",
        [](const std::string& out, int w, bool) {
          std::vector<SchemeSpec> schemes = {
              make_scheme(MapFamily::Identity, false), make_scheme(MapFamily::M, false),
              make_scheme(MapFamily::M, true), make_scheme(MapFamily::PM, false),
              make_scheme(MapFamily::PM, true)};
          return shock_vortex_run("shock-vortex-desk", 200, schemes, out, w);
        });
    return v;
  }();
  return presets;
}

}  // namespace

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> infos = [] {
    std::vector<PresetInfo> v;
    for (const auto& p : registry()) v.push_back(p.info);
    return v;
  }();
  return infos;
}

bool is_preset(const std::string& name) {
  for (const auto& p : registry())
    if (p.info.name == name) return true;
  return false;
}

std::vector<std::string> run_preset(const std::string& name, const std::string& out_dir,
                                    int workers, bool trace) {
  fs::create_directories(out_dir);
  for (const auto& p : registry())
    if (p.info.name == name) return p.run(out_dir, workers, trace);
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace weno
