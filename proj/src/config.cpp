#include "weno/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "weno/util.hpp"

namespace weno {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double parse_number(const std::string& v, int line) {
  // accept plain floats and simple fractions a/b
  const size_t slash = v.find('/');
  try {
    size_t used = 0;
    if (slash != std::string::npos) {
      const double a = std::stod(v.substr(0, slash));
      const double b = std::stod(v.substr(slash + 1), &used);
      if (b == 0.0) throw std::invalid_argument("division by zero");
      return a / b;
    }
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("malformed number '" + v + "'", line);
  }
}

long parse_int(const std::string& v, int line) {
  try {
    size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("malformed integer '" + v + "'", line);
  }
}

bool parse_bool(const std::string& v, int line) {
  const std::string s = lower(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("malformed boolean '" + v + "'", line);
}

MapFamily parse_family(const std::string& v, int line) {
  const std::string s = lower(v);
  if (s == "js" || s == "identity") return MapFamily::Identity;
  if (s == "m") return MapFamily::M;
  if (s == "pm" || s == "pm6") return MapFamily::PM;
  if (s == "im") return MapFamily::IM;
  if (s == "ppm5") return MapFamily::PPM5;
  if (s == "rm260") return MapFamily::RM260;
  if (s == "acm") return MapFamily::ACM;
  throw ConfigError("unknown scheme '" + v + "'", line);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  bool have_problem = false, have_scheme = false, have_n = false, have_t = false;
  bool have_cfl = false, is_ilw = false;
  int nx = 0, ny = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const size_t eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    const std::string key = lower(trim(s.substr(0, eq)));
    const std::string val = trim(s.substr(eq + 1));
    if (val.empty()) throw ConfigError("empty value for '" + key + "'", line);

    if (key == "problem") {
      const auto id = problem_from_name(lower(val));
      if (!id) throw ConfigError("unknown problem '" + val + "'", line);
      c.problem = *id;
      have_problem = true;
    } else if (key == "scheme") {
      const std::string v = lower(val);
      if (v == "ilw") {
        is_ilw = true;
        c.scheme.ideal = true;
        c.scheme.kind.family = MapFamily::Identity;
      } else {
        c.scheme.kind.family = parse_family(v, line);  // params may come on other lines
      }
      have_scheme = true;
    } else if (key == "lop") {
      c.scheme.lop = parse_bool(val, line);
    } else if (key == "strict_op") {
      c.scheme.op.strict = parse_bool(val, line);
    } else if (key == "eps" || key == "epsilon") {
      c.scheme.epsilon = parse_number(val, line);
      if (!(c.scheme.epsilon > 0.0)) throw ConfigError("epsilon must be positive", line);
    } else if (key == "pm_k") {
      c.scheme.kind.pm_k = static_cast<int>(parse_int(val, line));
    } else if (key == "im_k") {
      c.scheme.kind.im_k = static_cast<int>(parse_int(val, line));
    } else if (key == "im_a") {
      c.scheme.kind.im_a = parse_number(val, line);
    } else if (key == "acm_a") {
      c.scheme.kind.acm_a = parse_number(val, line);
    } else if (key == "acm_k") {
      c.scheme.kind.acm_k = static_cast<int>(parse_int(val, line));
    } else if (key == "acm_delta") {
      c.scheme.kind.acm_delta = parse_number(val, line);
    } else if (key == "acm_cfs_factor") {
      c.scheme.kind.acm_cfs_factor = parse_number(val, line);
    } else if (key == "n") {
      nx = ny = static_cast<int>(parse_int(val, line));
      have_n = true;
    } else if (key == "nx") {
      nx = static_cast<int>(parse_int(val, line));
      have_n = true;
    } else if (key == "ny") {
      ny = static_cast<int>(parse_int(val, line));
      have_n = true;
    } else if (key == "cfl") {
      const std::string v = lower(val);
      if (v.rfind("h^", 0) == 0) {
        c.cfl = CflRule::mesh_power(parse_number(v.substr(2), line));
      } else {
        c.cfl = CflRule::fixed(parse_number(v, line));
        if (!(c.cfl.value > 0.0 && c.cfl.value <= 1.0))
          throw ConfigError("cfl must lie in (0,1]", line);
      }
      have_cfl = true;
    } else if (key == "t_final") {
      c.t_final = parse_number(val, line);
      if (!(c.t_final >= 0.0)) throw ConfigError("t_final must be >= 0", line);
      have_t = true;
    } else if (key == "boundary") {
      const std::string v = lower(val);
      if (v == "periodic") c.boundary_override = BoundaryKind::Periodic;
      else if (v == "transmissive") c.boundary_override = BoundaryKind::Transmissive;
      else throw ConfigError("unknown boundary '" + val + "'", line);
    } else if (key == "output") {
      std::istringstream items(val);
      std::string item;
      while (std::getline(items, item, ',')) {
        const std::string v = lower(trim(item));
        if (v == "errors") c.outputs.errors = true;
        else if (v == "snapshot") c.outputs.snapshot = true;
        else if (v == "trace") c.outputs.trace = true;
        else if (v == "slice") c.outputs.slices.push_back({});
        else throw ConfigError("unknown output '" + item + "'", line);
      }
    } else if (key == "slice_axis") {
      if (c.outputs.slices.empty()) c.outputs.slices.push_back({});
      const std::string v = lower(val);
      if (v == "x") c.outputs.slices.back().axis = 0;
      else if (v == "y") c.outputs.slices.back().axis = 1;
      else throw ConfigError("slice_axis must be x or y", line);
    } else if (key == "slice_coord") {
      if (c.outputs.slices.empty()) c.outputs.slices.push_back({});
      c.outputs.slices.back().coord = parse_number(val, line);
    } else if (key == "workers") {
      c.workers = static_cast<int>(parse_int(val, line));
      if (c.workers < 1) throw ConfigError("workers must be >= 1", line);
    } else if (key == "full_precision") {
      c.full_precision = parse_bool(val, line);
    } else {
      throw ConfigError("unknown key '" + key + "'", line);
    }
  }

  if (!have_problem) throw ConfigError("missing required key 'problem'");
  if (!have_scheme) throw ConfigError("missing required key 'scheme'");
  if (!have_n) throw ConfigError("missing required key 'n' (or nx/ny)");
  if (!have_t) throw ConfigError("missing required key 't_final'");

  const auto& info = problem_info(c.problem);
  if (!have_cfl) c.cfl = info.default_cfl;
  if (nx == 0) nx = ny;
  if (ny == 0) ny = nx;
  if (nx < 6 || (info.dim == 2 && ny < 6))
    throw ConfigError("grid size must be at least 6 cells per axis");
  c.nx = nx;
  c.ny = info.dim == 2 ? ny : 0;

  if (is_ilw && c.scheme.lop) throw ConfigError("lop does not apply to scheme=ilw");
  try {
    c.scheme.kind.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (!c.outputs.slices.empty()) {
    if (info.dim != 2) throw ConfigError("slice output needs a 2D problem");
    for (const auto& sl : c.outputs.slices) {
      const double lo = sl.axis == 1 ? info.y0 : info.x0;
      const double hi = sl.axis == 1 ? info.y1 : info.x1;
      if (!(sl.coord >= lo && sl.coord <= hi))
        throw ConfigError("slice coordinate outside the domain");
    }
  }
  if (c.outputs.errors && !info.has_exact)
    throw ConfigError("errors output needs a problem with a closed-form solution");
  if (c.outputs.trace && info.dim != 1)
    throw ConfigError("trace output is available for 1D problems only");
  return c;
}

std::string render_config(const RunConfig& c) {
  const auto& info = problem_info(c.problem);
  std::ostringstream out;
  out << "problem = " << info.name << "\n";
  out << "scheme = "
      << (c.scheme.ideal ? std::string("ilw") : family_name(c.scheme.kind.family)) << "\n";
  if (!c.scheme.ideal) {
    out << "lop = " << (c.scheme.lop ? "true" : "false") << "\n";
    if (c.scheme.op.strict) out << "strict_op = true\n";
    const MappingKind def;
    if (c.scheme.kind.family == MapFamily::PM && c.scheme.kind.pm_k != def.pm_k)
      out << "pm_k = " << c.scheme.kind.pm_k << "\n";
    if (c.scheme.kind.family == MapFamily::IM) {
      out << "im_k = " << c.scheme.kind.im_k << "\n";
      out << "im_a = " << format_full(c.scheme.kind.im_a) << "\n";
    }
    if (c.scheme.kind.family == MapFamily::ACM) {
      out << "acm_a = " << format_full(c.scheme.kind.acm_a) << "\n";
      out << "acm_k = " << c.scheme.kind.acm_k << "\n";
      out << "acm_delta = " << format_full(c.scheme.kind.acm_delta) << "\n";
      out << "acm_cfs_factor = " << format_full(c.scheme.kind.acm_cfs_factor) << "\n";
    }
    if (c.scheme.epsilon != kDefaultEpsilon)
      out << "epsilon = " << format_full(c.scheme.epsilon) << "\n";
  }
  if (info.dim == 2 && c.ny != c.nx) {
    out << "nx = " << c.nx << "\n";
    out << "ny = " << c.ny << "\n";
  } else {
    out << "n = " << c.nx << "\n";
  }
  if (c.cfl.kind == CflRule::Kind::MeshPower)
    out << "cfl = h^" << format_full(c.cfl.value) << "\n";
  else
    out << "cfl = " << format_full(c.cfl.value) << "\n";
  out << "t_final = " << format_full(c.t_final) << "\n";
  if (c.boundary_override)
    out << "boundary = "
        << (*c.boundary_override == BoundaryKind::Periodic ? "periodic" : "transmissive") << "\n";
  std::vector<std::string> outs;
  if (c.outputs.errors) outs.push_back("errors");
  if (c.outputs.snapshot) outs.push_back("snapshot");
  if (c.outputs.trace) outs.push_back("trace");
  if (!outs.empty()) {
    out << "output = ";
    for (size_t i = 0; i < outs.size(); ++i) out << (i ? "," : "") << outs[i];
    out << "\n";
  }
  for (const auto& sl : c.outputs.slices) {
    out << "output = slice\n";
    out << "slice_axis = " << (sl.axis == 1 ? "y" : "x") << "\n";
    out << "slice_coord = " << format_full(sl.coord) << "\n";
  }
  if (c.workers != 1) out << "workers = " << c.workers << "\n";
  if (c.full_precision) out << "full_precision = true\n";
  return out.str();
}

}  // namespace weno
