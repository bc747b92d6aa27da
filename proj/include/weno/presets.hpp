#pragma once
// Named experiment presets. Each bundles the grids, CFL rule, output time,
// and scheme set of one benchmark table or figure, plus desk-scaled variants
// that finish quickly.

#include <string>
#include <vector>

namespace weno {

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& preset_list();
bool is_preset(const std::string& name);

// Runs a preset, writing CSV artifacts into out_dir; returns the files
// written. trace additionally emits mapping-trace CSVs where meaningful.
std::vector<std::string> run_preset(const std::string& name, const std::string& out_dir,
                                    int workers, bool trace);

}  // namespace weno
