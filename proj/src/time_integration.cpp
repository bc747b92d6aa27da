#include "weno/time_integration.hpp"

namespace weno {

double dt_from_cfl(const CflRule& rule, double dx, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("dt_from_cfl: wave speed must be positive");
  return rule.number(dx) * dx / alpha;
}

double dt_from_cfl(const CflRule& rule, double dx, double dy, double ax, double ay) {
  if (!(ax >= 0.0) || !(ay >= 0.0) || !(ax + ay > 0.0))
    throw std::invalid_argument("dt_from_cfl: wave speeds must be nonnegative, one positive");
  const double h = std::min(dx, dy);
  return rule.number(h) / (ax / dx + ay / dy);
}

}  // namespace weno
