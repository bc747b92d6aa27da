#pragma once
// Weight mapping functions of the mapped WENO family (WENO-M, PM, IM, PPM5,
// RM(260), ACM), each a monotone [0,1] -> [0,1] map with fixed point at the
// ideal weight d. Identity reproduces WENO-JS.

#include <string>

namespace weno {

enum class MapFamily { Identity, M, PM, IM, PPM5, RM260, ACM };

struct MappingKind {
  MapFamily family = MapFamily::Identity;
  // WENO-PM
  int pm_k = 6;  // even, positive
  // WENO-IM(k, A)
  int im_k = 2;  // even, positive
  double im_a = 0.1;
  // WENO-ACM
  double acm_a = 20.0;
  int acm_k = 2;
  double acm_delta = 1e-6;
  double acm_cfs_factor = 0.1;  // CFS = d * factor, upper CFS mirrored at 1

  void validate() const;  // throws std::invalid_argument on bad parameters
  bool operator==(const MappingKind&) const = default;
};

MappingKind make_kind(MapFamily family);

// Thresholded sign function of the ACM map.
double sgm(double x, double delta, double A, int k);

// g(omega) for the given family and ideal weight d. omega must lie in [0,1];
// values outside raise std::domain_error.
double map_weight(const MappingKind& kind, double d, double omega);

std::string family_name(MapFamily f);  // "js", "m", "pm6", ...

}  // namespace weno
