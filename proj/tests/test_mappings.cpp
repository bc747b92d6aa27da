#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "weno/mapping.hpp"

using namespace weno;

namespace {

std::vector<MappingKind> table_kinds() {
  return {make_kind(MapFamily::Identity), make_kind(MapFamily::M),
          make_kind(MapFamily::PM),       make_kind(MapFamily::IM),
          make_kind(MapFamily::PPM5),     make_kind(MapFamily::RM260),
          make_kind(MapFamily::ACM)};
}

// Flatness order above n means |g(d +- h) - d| decays like h^(n+1).
int flatness_order(MapFamily f) {
  switch (f) {
    case MapFamily::M: return 2;
    case MapFamily::PM: return 6;
    case MapFamily::IM: return 2;
    case MapFamily::PPM5: return 4;
    case MapFamily::RM260: return 3;  // closed form is flatter; assert the table minimum
    default: return 0;
  }
}

double deviation(const MappingKind& kind, double d, double h) {
  return std::max(std::fabs(map_weight(kind, d, d + h) - d),
                  std::fabs(map_weight(kind, d, d - h) - d));
}

const double kD[3] = {0.1, 0.6, 0.3};

}  // namespace

TEST_CASE("sgm branches") {
  CHECK(sgm(1.0, 1e-6, 20.0, 2) == doctest::Approx(1.0));
  CHECK(sgm(0.0, 1e-6, 20.0, 2) == 0.0);
  CHECK(sgm(-2e-6, 1e-6, 20.0, 2) == doctest::Approx(-1.0));
  CHECK(sgm(5e-7, 1e-6, 20.0, 2) > 0.0);
  CHECK_THROWS_AS(sgm(0.5, 0.0, 20.0, 2), std::invalid_argument);
}

TEST_CASE("WENO-M closed form") {
  const auto m = make_kind(MapFamily::M);
  CHECK(map_weight(m, 0.6, 0.6) == doctest::Approx(0.6).epsilon(1e-13));
  // 0.5*(0.1+0.01-0.15+0.25)/(0.01+0.8*0.5) = 21/82
  CHECK(map_weight(m, 0.1, 0.5) == doctest::Approx(21.0 / 82.0).epsilon(1e-14));
}

TEST_CASE("boundary and fixed-point conditions for every kind") {
  for (const auto& kind : table_kinds()) {
    for (double d : kD) {
      CHECK(map_weight(kind, d, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(map_weight(kind, d, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(map_weight(kind, d, d) == doctest::Approx(d).epsilon(1e-12));
    }
  }
}

TEST_CASE("maps are monotone and stay within [0,1]") {
  const int samples = 10000;
  for (const auto& kind : table_kinds()) {
    for (double d : kD) {
      double prev = map_weight(kind, d, 0.0);
      for (int i = 1; i <= samples; ++i) {
        const double w = static_cast<double>(i) / samples;
        const double g = map_weight(kind, d, w);
        CHECK(g >= prev - 1e-12);
        CHECK(g >= -1e-12);
        CHECK(g <= 1.0 + 1e-12);
        prev = g;
      }
    }
  }
}

TEST_CASE("maps behave at the face-quadrature ideal weights too") {
  // the 2D solver parameterizes the maps with the Gauss-node linear weights
  const double node_d[] = {0.2448438583169326, 0.6152671755725191, 0.1398889661105484,
                           9.0 / 214.0, 98.0 / 107.0, 9.0 / 67.0, 49.0 / 67.0};
  for (const auto& kind : table_kinds()) {
    for (double d : node_d) {
      CHECK(map_weight(kind, d, 0.0) == doctest::Approx(0.0).epsilon(1e-11));
      CHECK(map_weight(kind, d, 1.0) == doctest::Approx(1.0).epsilon(1e-11));
      CHECK(map_weight(kind, d, d) == doctest::Approx(d).epsilon(1e-11));
      double prev = map_weight(kind, d, 0.0);
      for (int i = 1; i <= 2000; ++i) {
        const double w = static_cast<double>(i) / 2000;
        const double g = map_weight(kind, d, w);
        CHECK(g >= prev - 1e-11);
        prev = g;
      }
    }
  }
}

TEST_CASE("flatness at the ideal weight matches the expected order") {
  for (const auto& kind : table_kinds()) {
    if (kind.family == MapFamily::Identity) continue;
    for (double d : kD) {
      if (kind.family == MapFamily::ACM) {
        // plateau around d: exactly flat at these steps
        CHECK(deviation(kind, d, 0.02) <= 1e-13);
        CHECK(deviation(kind, d, 0.04) <= 1e-13);
        continue;
      }
      const double dev1 = deviation(kind, d, 0.04);
      const double dev2 = deviation(kind, d, 0.02);
      if (dev1 <= 1e-13 && dev2 <= 1e-13) continue;  // flat beyond measurement
      const double slope = std::log(dev1 / dev2) / std::log(2.0);
      CHECK(slope >= flatness_order(kind.family) + 0.5);
    }
  }
}

TEST_CASE("identity map passes omega through") {
  const auto id = make_kind(MapFamily::Identity);
  for (double w : {0.0, 0.3, 0.777, 1.0}) CHECK(map_weight(id, 0.1, w) == w);
}

TEST_CASE("omega outside [0,1] is rejected") {
  for (const auto& kind : table_kinds()) {
    CHECK_THROWS_AS(map_weight(kind, 0.3, -0.01), std::domain_error);
    CHECK_THROWS_AS(map_weight(kind, 0.3, 1.01), std::domain_error);
  }
}

TEST_CASE("parameter validation") {
  auto pm = make_kind(MapFamily::PM);
  pm.pm_k = 5;
  CHECK_THROWS_AS(pm.validate(), std::invalid_argument);
  auto im = make_kind(MapFamily::IM);
  im.im_a = 0.0;
  CHECK_THROWS_AS(im.validate(), std::invalid_argument);
  im = make_kind(MapFamily::IM);
  im.im_k = 3;
  CHECK_THROWS_AS(im.validate(), std::invalid_argument);
  CHECK_NOTHROW(make_kind(MapFamily::IM).validate());
}
