#include "weno/order_preserving.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "weno/util.hpp"

namespace weno {

namespace {

inline bool tied(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// One ordered pair of the classification loop.
inline bool pair_preserves_order(double wa, double wb, double ga, double gb,
                                 const OpOptions& opts) {
  if (tied(wa, wb, opts.tie_tol)) return tied(ga, gb, opts.tie_tol);
  const double kappa = (wa - wb) * (ga - gb);
  if (opts.strict) return kappa > 0.0;
  return kappa >= 0.0 || tied(ga, gb, opts.tie_tol);
}

}  // namespace

double post_index(int a, int b, const MappingKind& kind, const WeightTriple& omega_js,
                  const std::array<double, 3>& d) {
  if (a < 0 || a > 2 || b < 0 || b > 2)
    throw std::out_of_range("post_index: substencil index out of range");
  const double ga = map_weight(kind, d[a], omega_js[a]);
  const double gb = map_weight(kind, d[b], omega_js[b]);
  return (omega_js[a] - omega_js[b]) * (ga - gb);
}

StencilClassification classify_stencil(const MappingKind& kind, const WeightTriple& omega_js,
                                       const std::array<double, 3>& d, const OpOptions& opts) {
  double g[3];
  for (int s = 0; s < 3; ++s) g[s] = map_weight(kind, d[s], omega_js[s]);
  for (int s1 = 0; s1 <= 1; ++s1) {
    for (int s2 = s1 + 1; s2 <= 2; ++s2) {
      if (!pair_preserves_order(omega_js[s1], omega_js[s2], g[s1], g[s2], opts))
        return {false, s1, s2};
    }
  }
  return {true, -1, -1};
}

std::array<double, 3> lop_unnormalized(const MappingKind& kind, const WeightTriple& omega_js,
                                       const WeightTriple& alpha_js,
                                       const std::array<double, 3>& d, const OpOptions& opts) {
  if (classify_stencil(kind, omega_js, d, opts).is_op) {
    return {map_weight(kind, d[0], omega_js[0]), map_weight(kind, d[1], omega_js[1]),
            map_weight(kind, d[2], omega_js[2])};
  }
  return {alpha_js[0], alpha_js[1], alpha_js[2]};
}

WeightTriple lop_weights(const MappingKind& kind, const WeightTriple& omega_js,
                         const WeightTriple& alpha_js, const std::array<double, 3>& d,
                         const OpOptions& opts) {
  const auto a = lop_unnormalized(kind, omega_js, alpha_js, d, opts);
  const double sum = a[0] + a[1] + a[2];
  if (!(sum > 0.0) || !std::isfinite(sum))
    throw std::invalid_argument("lop_weights: unnormalized weights do not sum to a positive value");
  WeightTriple w;
  for (int s = 0; s < 3; ++s) w[s] = a[s] / sum;
  w.normalized = true;
  return w;
}

void TraceSink::record(const MappingTraceRecord& r) {
  std::lock_guard<std::mutex> lock(mu_);
  records_.push_back(r);
}

void TraceSink::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  records_.clear();
}

std::vector<MappingTraceRecord> TraceSink::sorted_records() const {
  std::vector<MappingTraceRecord> out;
  {
    std::lock_guard<std::mutex> lock(mu_);
    out = records_;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.cell != b.cell) return a.cell < b.cell;
    return a.field < b.field;
  });
  return out;
}

void TraceSink::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);
  out << "time,cell,field,omega0_js,omega1_js,omega2_js,w0,w1,w2,op_flag\n";
  for (const auto& r : sorted_records()) {
    out << format_full(r.time) << ',' << r.cell << ',' << r.field;
    for (int s = 0; s < 3; ++s) out << ',' << format_full(r.omega_js[s]);
    for (int s = 0; s < 3; ++s) out << ',' << format_full(r.final_weight[s]);
    out << ',' << (r.op_flag ? 1 : 0) << '\n';
  }
  if (!out.good()) throw std::runtime_error("trace write failed: " + path);
}

}  // namespace weno
