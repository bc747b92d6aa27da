#pragma once
// Posteriori order-preserving (OP) weight adapter: classify each global
// stencil by whether the mapping preserves the ordering of the JS weights
// across substencils, keep the mapped weights where it does, and fall back
// to the plain JS weights where it does not.

#include <array>
#include <mutex>
#include <string>
#include <vector>

#include "weno/mapping.hpp"
#include "weno/reconstruction.hpp"

namespace weno {

struct StencilClassification {
  bool is_op = true;
  int fail_a = -1, fail_b = -1;  // first failing pair when !is_op
};

struct OpOptions {
  // |w_a - w_b| <= tie_tol * max(1, |w_a|, |w_b|) counts as a tie.
  double tie_tol = 1e-14;
  // strict = true demands postINDEX > 0 outside ties; the default also
  // accepts postINDEX = 0 (equal mapped values with distinct inputs).
  bool strict = false;

  bool operator==(const OpOptions&) const = default;
};

// (w_a - w_b) * (g_a(w_a) - g_b(w_b)); negative means the pair inverts.
double post_index(int a, int b, const MappingKind& kind, const WeightTriple& omega_js,
                  const std::array<double, 3>& d);

StencilClassification classify_stencil(const MappingKind& kind, const WeightTriple& omega_js,
                                       const std::array<double, 3>& d,
                                       const OpOptions& opts = {});

// OP stencil: the mapped values g_s(w_s); otherwise the JS alphas verbatim.
std::array<double, 3> lop_unnormalized(const MappingKind& kind, const WeightTriple& omega_js,
                                       const WeightTriple& alpha_js,
                                       const std::array<double, 3>& d,
                                       const OpOptions& opts = {});

// Normalized adapted weights. On the fallback branch this reproduces
// omega_js (same normalization arithmetic).
WeightTriple lop_weights(const MappingKind& kind, const WeightTriple& omega_js,
                         const WeightTriple& alpha_js, const std::array<double, 3>& d,
                         const OpOptions& opts = {});

// ---- mapping trace --------------------------------------------------------

struct MappingTraceRecord {
  double time = 0.0;
  long cell = 0;  // interface index
  int field = 0;  // characteristic field (0 for scalar problems)
  WeightTriple omega_js;
  WeightTriple final_weight;
  bool op_flag = true;
};

// Collects weight-mapping records and writes them as CSV sorted by
// (time, cell, field). Appends are serialized, so workers may share a sink.
class TraceSink {
 public:
  void record(const MappingTraceRecord& r);
  void clear();
  std::vector<MappingTraceRecord> sorted_records() const;

  // Header: time,cell,field,omega0_js,omega1_js,omega2_js,w0,w1,w2,op_flag
  void write_csv(const std::string& path) const;  // throws on I/O failure

 private:
  mutable std::mutex mu_;
  std::vector<MappingTraceRecord> records_;
};

}  // namespace weno
