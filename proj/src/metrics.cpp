#include "weno/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weno {

std::pair<double, double> error_norms(std::span<const double> numerical,
                                      std::span<const double> exact, double h) {
  if (numerical.size() != exact.size())
    throw std::invalid_argument("error_norms: shape mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("error_norms: h must be positive");
  double l1 = 0.0, linf = 0.0;
  for (size_t i = 0; i < numerical.size(); ++i) {
    const double d = std::fabs(numerical[i] - exact[i]);
    l1 += d;
    linf = std::max(linf, d);
  }
  return {h * l1, linf};
}

double convergence_order(double e_coarse, double e_fine, double n_coarse, double n_fine) {
  if (!(e_coarse > 0.0 && e_fine > 0.0 && n_coarse > 0.0 && n_fine > 0.0))
    throw std::invalid_argument("convergence_order: inputs must be positive");
  return std::log(e_coarse / e_fine) / std::log(n_fine / n_coarse);
}

double increased_errors(double l_y, double l_ilw) {
  if (!(l_ilw > 0.0)) throw std::invalid_argument("increased_errors: zero baseline");
  return (l_y - l_ilw) / l_ilw * 100.0;
}

double overshoot_metric(std::span<const double> field, double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper))
    throw std::invalid_argument("overshoot_metric: bounds must be finite");
  double mx = -std::numeric_limits<double>::infinity();
  double mn = std::numeric_limits<double>::infinity();
  for (double v : field) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  if (field.empty()) return 0.0;
  return std::max({0.0, mx - upper, lower - mn});
}

}  // namespace weno
