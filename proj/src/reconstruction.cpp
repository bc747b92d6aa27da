#include "weno/reconstruction.hpp"

#include <cmath>
#include <stdexcept>

#include "weno/util.hpp"

namespace weno {

void require_finite_window(const CellWindow& w) {
  for (double v : w)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite cell average in window");
}

std::array<double, 3> substencil_values(const CellWindow& w) {
  require_finite_window(w);
  return {
      (1.0 / 3.0) * w[0] - (7.0 / 6.0) * w[1] + (11.0 / 6.0) * w[2],
      -(1.0 / 6.0) * w[1] + (5.0 / 6.0) * w[2] + (1.0 / 3.0) * w[3],
      (1.0 / 3.0) * w[2] + (5.0 / 6.0) * w[3] - (1.0 / 6.0) * w[4],
  };
}

SmoothnessTriple smoothness_indicators(const CellWindow& w) {
  require_finite_window(w);
  const double c1 = 13.0 / 12.0, c2 = 1.0 / 4.0;
  SmoothnessTriple b;
  double d2, d1;
  d2 = w[0] - 2.0 * w[1] + w[2];
  d1 = w[0] - 4.0 * w[1] + 3.0 * w[2];
  b.b[0] = c1 * d2 * d2 + c2 * d1 * d1;
  d2 = w[1] - 2.0 * w[2] + w[3];
  d1 = w[1] - w[3];
  b.b[1] = c1 * d2 * d2 + c2 * d1 * d1;
  d2 = w[2] - 2.0 * w[3] + w[4];
  d1 = 3.0 * w[2] - 4.0 * w[3] + w[4];
  b.b[2] = c1 * d2 * d2 + c2 * d1 * d1;
  return b;
}

JsWeights js_weights(const SmoothnessTriple& b, const SchemeParams& p) {
  if (!(p.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  for (int s = 0; s < 3; ++s)
    if (!(b[s] >= 0.0) || !std::isfinite(b[s]))
      throw std::invalid_argument("smoothness indicators must be finite and nonnegative");

  JsWeights r;
  for (int s = 0; s < 3; ++s) {
    const double den = p.epsilon + b[s];
    r.alpha[s] = p.ideal_weights[s] / (den * den);
  }
  const double sum = r.alpha.sum();
  if (!(sum > 0.0) || !std::isfinite(sum))
    throw std::invalid_argument("weight normalization failed (beta out of range)");
  for (int s = 0; s < 3; ++s) r.omega[s] = r.alpha[s] / sum;
  r.alpha.normalized = false;
  r.omega.normalized = true;
  return r;
}

double reconstruct_convex(const WeightTriple& omega, const std::array<double, 3>& u) {
  if (!omega.normalized) throw std::invalid_argument("reconstruct_convex needs normalized weights");
  return omega[0] * u[0] + omega[1] * u[1] + omega[2] * u[2];
}

double reconstruct_ideal(const CellWindow& w, const SchemeParams& p) {
  const auto u = substencil_values(w);
  WeightTriple d;
  d.w[0] = p.ideal_weights[0];
  d.w[1] = p.ideal_weights[1];
  d.w[2] = p.ideal_weights[2];
  d.normalized = true;
  return reconstruct_convex(d, u);
}

namespace {

// Substencil point-value coefficients at offset xi (substencil s covers the
// window entries s..s+2).
void substencil_coeffs(double xi, double c[3][3]) {
  const double x2 = xi * xi;
  c[0][0] = 0.5 * x2 + 0.5 * xi - 1.0 / 24.0;
  c[0][1] = -x2 - 2.0 * xi + 1.0 / 12.0;
  c[0][2] = 0.5 * x2 + 1.5 * xi + 23.0 / 24.0;
  c[1][0] = 0.5 * x2 - 0.5 * xi - 1.0 / 24.0;
  c[1][1] = 13.0 / 12.0 - x2;
  c[1][2] = 0.5 * x2 + 0.5 * xi - 1.0 / 24.0;
  c[2][0] = 0.5 * x2 - 1.5 * xi + 23.0 / 24.0;
  c[2][1] = -x2 + 2.0 * xi + 1.0 / 12.0;
  c[2][2] = 0.5 * x2 - 0.5 * xi - 1.0 / 24.0;
}

void linear_weights(double xi, double g[3]) {
  const double x2 = xi * xi, x3 = x2 * xi, x4 = x2 * x2, x6 = x4 * x2;
  const double qp = 12.0 * x2 + 12.0 * xi - 1.0;
  const double qm = 12.0 * x2 - 12.0 * xi - 1.0;
  g[0] = (80.0 * x4 - 160.0 * x3 - 120.0 * x2 + 200.0 * xi + 9.0) / (80.0 * qp);
  g[1] = -(960.0 * x6 - 5360.0 * x4 + 4548.0 * x2 - 49.0) / (40.0 * qm * qp);
  g[2] = (80.0 * x4 + 160.0 * x3 - 120.0 * x2 - 200.0 * xi + 9.0) / (80.0 * qm);
}

}  // namespace

EvalPoint make_eval_point(double xi) {
  EvalPoint p;
  p.xi = xi;
  substencil_coeffs(xi, p.coeff);
  linear_weights(xi, p.gamma);
  p.split = p.gamma[0] < 0.0 || p.gamma[1] < 0.0 || p.gamma[2] < 0.0;
  if (p.split) {
    double gp[3], gm[3], sp = 0.0, sm = 0.0;
    for (int s = 0; s < 3; ++s) {
      gp[s] = 0.5 * (p.gamma[s] + 3.0 * std::fabs(p.gamma[s]));
      gm[s] = gp[s] - p.gamma[s];
      sp += gp[s];
      sm += gm[s];
    }
    p.sigma_plus = sp;
    p.sigma_minus = sm;
    for (int s = 0; s < 3; ++s) {
      p.dplus[s] = gp[s] / sp;
      p.dminus[s] = gm[s] / sm;
    }
  }
  return p;
}

const EvalPoint& interface_point() {
  static const EvalPoint p = [] {
    EvalPoint q;
    q.xi = 0.5;
    const double c[3][3] = {{1.0 / 3.0, -7.0 / 6.0, 11.0 / 6.0},
                            {-1.0 / 6.0, 5.0 / 6.0, 1.0 / 3.0},
                            {1.0 / 3.0, 5.0 / 6.0, -1.0 / 6.0}};
    for (int s = 0; s < 3; ++s)
      for (int m = 0; m < 3; ++m) q.coeff[s][m] = c[s][m];
    q.gamma[0] = 0.1;
    q.gamma[1] = 0.6;
    q.gamma[2] = 0.3;
    q.split = false;
    return q;
  }();
  return p;
}

const std::array<EvalPoint, 3>& face_gauss_points() {
  static const std::array<EvalPoint, 3> pts = [] {
    const double g = std::sqrt(15.0) / 10.0;  // sqrt(3/5)/2
    return std::array<EvalPoint, 3>{make_eval_point(-g), make_eval_point(0.0),
                                    make_eval_point(g)};
  }();
  return pts;
}

std::array<double, 3> substencil_values_at(const EvalPoint& p, const CellWindow& w) {
  std::array<double, 3> u;
  for (int s = 0; s < 3; ++s)
    u[s] = p.coeff[s][0] * w[s] + p.coeff[s][1] * w[s + 1] + p.coeff[s][2] * w[s + 2];
  return u;
}

}  // namespace weno
