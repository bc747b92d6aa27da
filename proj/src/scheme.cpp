#include "weno/scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace weno {

SchemeSpec make_scheme(MapFamily family, bool lop, bool ideal) {
  SchemeSpec s;
  s.kind = make_kind(family);
  s.lop = lop;
  s.ideal = ideal;
  return s;
}

std::string scheme_name(const SchemeSpec& s) {
  if (s.ideal) return "ilw";
  std::string base = family_name(s.kind.family);
  if (s.kind.family == MapFamily::PM) base = "pm" + std::to_string(s.kind.pm_k);
  return s.lop ? "lop-" + base : base;
}

namespace {

// Nonlinear weights for one ideal-weight triple d (a point's gamma or one of
// its split groups), combined with the substencil values.
double weighted_value(const SchemeSpec& scheme, const double beta[3], const double d[3],
                      double eps, const std::array<double, 3>& u, WindowTrace* trace) {
  double alpha[3], sum = 0.0;
  for (int s = 0; s < 3; ++s) {
    const double den = eps + beta[s];
    alpha[s] = d[s] / (den * den);
    sum += alpha[s];
  }
  double omega[3];
  for (int s = 0; s < 3; ++s) omega[s] = alpha[s] / sum;

  double final_w[3];
  bool op_flag = true;
  if (scheme.kind.family == MapFamily::Identity) {
    // the identity map preserves every ordering, so the adapted weights are
    // the JS weights themselves
    for (int s = 0; s < 3; ++s) final_w[s] = omega[s];
  } else {
    double mapped[3], msum = 0.0;
    for (int s = 0; s < 3; ++s) {
      mapped[s] = map_weight(scheme.kind, d[s], omega[s]);
      msum += mapped[s];
    }
    if (scheme.lop) {
      WeightTriple wt;
      wt.w[0] = omega[0];
      wt.w[1] = omega[1];
      wt.w[2] = omega[2];
      wt.normalized = true;
      const std::array<double, 3> dd = {d[0], d[1], d[2]};
      op_flag = classify_stencil(scheme.kind, wt, dd, scheme.op).is_op;
      if (!op_flag) {
        for (int s = 0; s < 3; ++s) final_w[s] = omega[s];  // alpha / sum(alpha)
      } else {
        for (int s = 0; s < 3; ++s) final_w[s] = mapped[s] / msum;
      }
    } else {
      for (int s = 0; s < 3; ++s) final_w[s] = mapped[s] / msum;
    }
  }

  if (trace) {
    for (int s = 0; s < 3; ++s) {
      trace->omega_js[s] = omega[s];
      trace->final_weight[s] = final_w[s];
    }
    trace->omega_js.normalized = true;
    trace->final_weight.normalized = true;
    trace->op_flag = op_flag;
  }
  return final_w[0] * u[0] + final_w[1] * u[1] + final_w[2] * u[2];
}

}  // namespace

double reconstruct_window(const SchemeSpec& scheme, const EvalPoint& pt, const double* w5,
                          WindowTrace* trace) {
  std::array<double, 3> u;
  for (int s = 0; s < 3; ++s)
    u[s] = pt.coeff[s][0] * w5[s] + pt.coeff[s][1] * w5[s + 1] + pt.coeff[s][2] * w5[s + 2];

  if (scheme.ideal)
    return pt.gamma[0] * u[0] + pt.gamma[1] * u[1] + pt.gamma[2] * u[2];

  double beta[3];
  {
    const double c1 = 13.0 / 12.0, c2 = 1.0 / 4.0;
    double d2, d1;
    d2 = w5[0] - 2.0 * w5[1] + w5[2];
    d1 = w5[0] - 4.0 * w5[1] + 3.0 * w5[2];
    beta[0] = c1 * d2 * d2 + c2 * d1 * d1;
    d2 = w5[1] - 2.0 * w5[2] + w5[3];
    d1 = w5[1] - w5[3];
    beta[1] = c1 * d2 * d2 + c2 * d1 * d1;
    d2 = w5[2] - 2.0 * w5[3] + w5[4];
    d1 = 3.0 * w5[2] - 4.0 * w5[3] + w5[4];
    beta[2] = c1 * d2 * d2 + c2 * d1 * d1;
  }

  if (!pt.split)
    return weighted_value(scheme, beta, pt.gamma, scheme.epsilon, u, trace);

  const double vp = weighted_value(scheme, beta, pt.dplus, scheme.epsilon, u, nullptr);
  const double vm = weighted_value(scheme, beta, pt.dminus, scheme.epsilon, u, nullptr);
  return pt.sigma_plus * vp - pt.sigma_minus * vm;
}

}  // namespace weno
