#include "weno/mapping.hpp"

#include <cmath>
#include <stdexcept>

#include "weno/util.hpp"

namespace weno {

void MappingKind::validate() const {
  switch (family) {
    case MapFamily::Identity:
    case MapFamily::M:
    case MapFamily::PPM5:
    case MapFamily::RM260:
      return;
    case MapFamily::PM:
      if (pm_k <= 0 || pm_k % 2 != 0)
        throw std::invalid_argument("PM requires an even positive k");
      return;
    case MapFamily::IM:
      if (im_k <= 0 || im_k % 2 != 0)
        throw std::invalid_argument("IM requires an even positive k");
      if (!(im_a > 0.0)) throw std::invalid_argument("IM requires A > 0");
      return;
    case MapFamily::ACM:
      if (!(acm_a > 0.0)) throw std::invalid_argument("ACM requires A > 0");
      if (!(acm_delta > 0.0)) throw std::invalid_argument("ACM requires delta > 0");
      if (!(acm_cfs_factor >= 0.0 && acm_cfs_factor < 1.0))
        throw std::invalid_argument("ACM cfs_factor must lie in [0,1)");
      return;
  }
  throw std::invalid_argument("unknown mapping family");
}

MappingKind make_kind(MapFamily family) {
  MappingKind k;
  k.family = family;
  return k;
}

double sgm(double x, double delta, double A, int k) {
  if (!(delta > 0.0)) throw std::invalid_argument("sgm requires delta > 0");
  const double ax = std::fabs(x);
  if (ax >= delta) return x / ax;
  if (x == 0.0) return 0.0;
  return x / (ipow(A * (delta * delta - x * x), k + 3) + ax);
}

namespace {

double map_m(double d, double w) {
  return w * (d + d * d - 3.0 * d * w + w * w) / (d * d + (1.0 - 2.0 * d) * w);
}

double map_pm(int k, double d, double w) {
  double c1, c2;
  if (w <= d) {
    c1 = (k % 2 == 0 ? 1.0 : -1.0) * (k + 1) / ipow(d, k + 1);
    c2 = d / (k + 1);
  } else {
    c1 = -(k + 1) / ipow(1.0 - d, k + 1);
    c2 = (d - (k + 2)) / (k + 1);
  }
  return c1 * ipow(w - d, k + 1) * (w + c2) + d;
}

double map_im(int k, double A, double d, double w) {
  const double t = w - d;
  return d + ipow(t, k + 1) * A / (ipow(t, k) * A + w * (1.0 - w));
}

double map_ppm5(double d, double w) {
  if (w <= d) {
    const double a = w / d;
    return d * (1.0 + ipow(a - 1.0, 5));
  }
  const double b = 1.0 / (d - 1.0);
  return d + ipow(b, 4) * ipow(w - d, 5);
}

double map_rm260(double d, double w) {
  const double a0 = ipow(d, 6);
  const double a1 = -7.0 * ipow(d, 5);
  const double a2 = 21.0 * ipow(d, 4);
  const double a3 = ipow(1.0 - d, 6) - (a0 + a1 + a2);
  return d + ipow(w - d, 7) / (a0 + w * (a1 + w * (a2 + w * a3)));
}

double map_acm(const MappingKind& kind, double d, double w) {
  if (w <= d) {
    const double cfs = d * kind.acm_cfs_factor;
    return 0.5 * d * sgm(w - cfs, kind.acm_delta, kind.acm_a, kind.acm_k) + 0.5 * d;
  }
  const double cfs_up = 1.0 - (1.0 - d) * kind.acm_cfs_factor;
  return 0.5 * (1.0 - d) * sgm(w - cfs_up, kind.acm_delta, kind.acm_a, kind.acm_k) +
         0.5 * (1.0 + d);
}

}  // namespace

double map_weight(const MappingKind& kind, double d, double omega) {
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::domain_error("map_weight: omega outside [0,1]");
  switch (kind.family) {
    case MapFamily::Identity: return omega;
    case MapFamily::M:        return map_m(d, omega);
    case MapFamily::PM:       return map_pm(kind.pm_k, d, omega);
    case MapFamily::IM:       return map_im(kind.im_k, kind.im_a, d, omega);
    case MapFamily::PPM5:     return map_ppm5(d, omega);
    case MapFamily::RM260:    return map_rm260(d, omega);
    case MapFamily::ACM:      return map_acm(kind, d, omega);
  }
  throw std::invalid_argument("unknown mapping family");
}

std::string family_name(MapFamily f) {
  switch (f) {
    case MapFamily::Identity: return "js";
    case MapFamily::M:        return "m";
    case MapFamily::PM:       return "pm";
    case MapFamily::IM:       return "im";
    case MapFamily::PPM5:     return "ppm5";
    case MapFamily::RM260:    return "rm260";
    case MapFamily::ACM:      return "acm";
  }
  return "?";
}

}  // namespace weno
