#pragma once
// Fifth-order (r = 3) WENO reconstruction kernels on 5-cell windows.
//
// A window holds the cell averages (u_{j-2}, ..., u_{j+2}) of a uniform grid,
// left to right. The upwind-biased interface value lives at x_{j+1/2}, i.e.
// at offset +1/2 from the center cell midpoint. The 2D face-quadrature solver
// also reconstructs at other in-cell offsets; those share the substencils but
// carry offset-dependent coefficients and linear weights (negative at the
// cell center, where the classical positive/negative splitting applies).

#include <array>

namespace weno {

using CellWindow = std::array<double, 5>;

inline constexpr double kDefaultEpsilon = 1e-40;
inline constexpr std::array<double, 3> kIdealWeights = {0.1, 0.6, 0.3};

struct WeightTriple {
  double w[3] = {0, 0, 0};
  bool normalized = false;

  double operator[](int s) const { return w[s]; }
  double& operator[](int s) { return w[s]; }
  double sum() const { return w[0] + w[1] + w[2]; }
};

struct SmoothnessTriple {
  double b[3] = {0, 0, 0};
  double operator[](int s) const { return b[s]; }
};

struct SchemeParams {
  std::array<double, 3> ideal_weights = kIdealWeights;
  double epsilon = kDefaultEpsilon;  // placed as d_s / (epsilon + beta_s)^2
};

// Throws std::invalid_argument on NaN/Inf entries.
void require_finite_window(const CellWindow& w);

// Third-order candidate interface values of the three substencils.
std::array<double, 3> substencil_values(const CellWindow& w);

// Jiang-Shu smoothness indicators (13/12 and 1/4 coefficients).
SmoothnessTriple smoothness_indicators(const CellWindow& w);

struct JsWeights {
  WeightTriple alpha;  // unnormalized, d_s / (eps + beta_s)^2
  WeightTriple omega;  // normalized
};
JsWeights js_weights(const SmoothnessTriple& b, const SchemeParams& p = {});

// Convex combination sum_s omega_s u_s. omega must be normalized.
double reconstruct_convex(const WeightTriple& omega, const std::array<double, 3>& u);

// Fifth-order linear reconstruction: ideal weights, smoothness ignored.
double reconstruct_ideal(const CellWindow& w, const SchemeParams& p = {});

// ---- reconstruction at a general in-cell offset ---------------------------
//
// xi is measured from the center cell midpoint in cell widths; xi = +1/2 is
// the upwind interface. Linear weights away from the interface may be
// negative; such points carry split tables for nonlinear use.
struct EvalPoint {
  double xi = 0.5;
  double coeff[3][3] = {};  // substencil point-value coefficients
  double gamma[3] = {};     // linear weights, sum to 1
  bool split = false;
  double dplus[3] = {}, dminus[3] = {};  // normalized split weights
  double sigma_plus = 0.0, sigma_minus = 0.0;
};

EvalPoint make_eval_point(double xi);
const EvalPoint& interface_point();                    // xi = +1/2, exact literals
const std::array<EvalPoint, 3>& face_gauss_points();   // 3-point Gauss nodes

// Averaging weights of the 3-point Gauss rule on a unit face (sum to 1).
inline constexpr std::array<double, 3> kFaceGaussWeights = {5.0 / 18.0, 8.0 / 18.0,
                                                            5.0 / 18.0};

std::array<double, 3> substencil_values_at(const EvalPoint& p, const CellWindow& w);

}  // namespace weno
