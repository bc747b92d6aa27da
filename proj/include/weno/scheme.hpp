#pragma once
// Scheme selection and the fused per-window weight pipeline the solvers run:
// smoothness indicators -> JS weights -> optional mapping -> optional
// order-preserving fallback, evaluated at an arbitrary reconstruction point.

#include <array>
#include <string>

#include "weno/order_preserving.hpp"
#include "weno/reconstruction.hpp"

namespace weno {

struct SchemeSpec {
  MappingKind kind;     // Identity = WENO-JS
  bool lop = false;     // posteriori order-preserving fallback
  bool ideal = false;   // linear weights only (WENO5-ILW); kind/lop ignored
  double epsilon = kDefaultEpsilon;
  OpOptions op;

  bool operator==(const SchemeSpec&) const = default;
};

SchemeSpec make_scheme(MapFamily family, bool lop, bool ideal = false);
std::string scheme_name(const SchemeSpec& s);  // "ilw", "js", "m", "lop-m", ...

// Filled for traced reconstructions (interface point only).
struct WindowTrace {
  WeightTriple omega_js;
  WeightTriple final_weight;
  bool op_flag = true;
};

// Reconstructs the value of the windowed quantity at the evaluation point.
// The window must be finite; solvers enforce that at field granularity.
double reconstruct_window(const SchemeSpec& scheme, const EvalPoint& pt, const double* w5,
                          WindowTrace* trace = nullptr);

inline double reconstruct_window(const SchemeSpec& scheme, const EvalPoint& pt,
                                 const CellWindow& w, WindowTrace* trace = nullptr) {
  return reconstruct_window(scheme, pt, w.data(), trace);
}

}  // namespace weno
