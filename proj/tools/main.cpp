// weno: experiment CLI.
//
//   weno run <preset | --config path> [--out dir] [--workers n] [--trace]
//
// Exit codes: 0 success, 2 configuration/parse error, 3 solver divergence.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weno/driver.hpp"
#include "weno/presets.hpp"
#include "weno/util.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fifth-order WENO solver experiments"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a preset or a config file");
  std::string preset, config_path, out_dir = "out";
  int workers = 1;
  bool trace = false;
  run->add_option("preset", preset, "preset name (see README for the list)");
  run->add_option("--config", config_path, "path to a key = value config file");
  run->add_option("--out", out_dir, "output directory")->capture_default_str();
  run->add_option("--workers", workers, "worker threads for the solver")
      ->capture_default_str();
  run->add_flag("--trace", trace, "also emit mapping-trace CSVs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (preset.empty() == config_path.empty())
      throw weno::ConfigError("pass exactly one of <preset> or --config");
    std::vector<std::string> files;
    if (!preset.empty()) {
      if (!weno::is_preset(preset)) {
        std::ostringstream msg;
        msg << "unknown preset '" << preset << "'; available:";
        for (const auto& p : weno::preset_list()) msg << ' ' << p.name;
        throw weno::ConfigError(msg.str());
      }
      files = weno::run_preset(preset, out_dir, workers, trace);
    } else {
      std::ifstream in(config_path);
      if (!in) throw weno::ConfigError("cannot open config file: " + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      weno::RunConfig cfg = weno::parse_config(buf.str());
      if (workers > 1) cfg.workers = workers;
      if (trace) cfg.outputs.trace = true;
      files = weno::run_single(cfg, out_dir);
    }
    for (const auto& f : files) std::cout << f << '\n';
    return 0;
  } catch (const weno::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const weno::DivergenceError& e) {
    std::cerr << "solver divergence: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
