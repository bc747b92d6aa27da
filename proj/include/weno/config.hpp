#pragma once
// Run configuration: key = value text format, one pair per line, '#'
// comments. Unknown keys are rejected; violations report the line number.

#include <optional>
#include <string>
#include <vector>

#include "weno/grid.hpp"
#include "weno/problems.hpp"
#include "weno/scheme.hpp"
#include "weno/time_integration.hpp"

namespace weno {

struct SliceSpec {
  int axis = 1;        // 0: slice along x = coord (rows of y); 1: along y = coord
  double coord = 0.0;

  bool operator==(const SliceSpec&) const = default;
};

struct RunOutputs {
  bool errors = false;
  bool snapshot = false;
  bool trace = false;
  std::vector<SliceSpec> slices;

  bool operator==(const RunOutputs&) const = default;
};

struct RunConfig {
  ProblemId problem = ProblemId::Sine1D;
  SchemeSpec scheme;
  int nx = 0, ny = 0;  // ny unused for 1D problems
  CflRule cfl;
  double t_final = 0.0;
  std::optional<BoundaryKind> boundary_override;
  RunOutputs outputs;
  int workers = 1;
  bool full_precision = false;

  bool operator==(const RunConfig&) const = default;
};

// Throws ConfigError (with line number) on unknown keys, malformed values,
// or violated invariants.
RunConfig parse_config(const std::string& text);

// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& c);

}  // namespace weno
