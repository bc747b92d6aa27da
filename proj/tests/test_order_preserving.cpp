#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "weno/order_preserving.hpp"
#include "weno/scheme.hpp"

using namespace weno;

namespace {

WeightTriple triple(double a, double b, double c, bool normalized = true) {
  WeightTriple w;
  w.w[0] = a; w.w[1] = b; w.w[2] = c;
  w.normalized = normalized;
  return w;
}

const std::array<double, 3> kD = {0.1, 0.6, 0.3};

std::vector<MappingKind> table_kinds() {
  return {make_kind(MapFamily::Identity), make_kind(MapFamily::M),
          make_kind(MapFamily::PM),       make_kind(MapFamily::IM),
          make_kind(MapFamily::PPM5),     make_kind(MapFamily::RM260),
          make_kind(MapFamily::ACM)};
}

}  // namespace

TEST_CASE("post_index basics") {
  const auto m = make_kind(MapFamily::M);
  CHECK(post_index(1, 1, m, triple(0.2, 0.5, 0.3), kD) == 0.0);
  // weights at their own ideal values: fixed points make the product exact
  CHECK(post_index(0, 1, m, triple(0.1, 0.6, 0.3), kD) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(post_index(0, 3, m, triple(0.1, 0.6, 0.3), kD), std::out_of_range);
}

TEST_CASE("known order-inversion witness for WENO-M") {
  const auto m = make_kind(MapFamily::M);
  const auto w = triple(0.3, 0.25, 0.45);
  const double k = post_index(0, 1, m, w, kD);
  CHECK(k == doctest::Approx(-0.016485).epsilon(1e-3));
  CHECK(std::fabs(k - -0.0164846774193548) < 1e-12);

  const auto cls = classify_stencil(m, w, kD);
  CHECK_FALSE(cls.is_op);
  CHECK(cls.fail_a == 0);
  CHECK(cls.fail_b == 1);
}

TEST_CASE("stencils at the ideal weights are order-preserving") {
  for (const auto& kind : table_kinds()) {
    const auto cls = classify_stencil(kind, triple(0.1, 0.6, 0.3), kD);
    CHECK(cls.is_op);
  }
}

TEST_CASE("identity mapping classifies every stencil as order-preserving") {
  const auto id = make_kind(MapFamily::Identity);
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20 - i; ++j) {
      const double w0 = i / 20.0, w1 = j / 20.0;
      const auto cls = classify_stencil(id, triple(w0, w1, 1.0 - w0 - w1), kD);
      CHECK(cls.is_op);
    }
  }
}

TEST_CASE("adapted weights: order-preserving branch maps, fallback returns JS") {
  const auto m = make_kind(MapFamily::M);

  // at the ideal weights the mapped values are the fixed points
  const auto at_ideal =
      lop_unnormalized(m, triple(0.1, 0.6, 0.3), triple(1e40, 6e40, 3e40, false), kD);
  CHECK(at_ideal[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(at_ideal[1] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(at_ideal[2] == doctest::Approx(0.3).epsilon(1e-12));

  // inversion witness: the JS alphas come back verbatim
  const auto alpha = triple(3e40, 2.5e40, 4.5e40, false);
  const auto fb = lop_unnormalized(m, triple(0.3, 0.25, 0.45), alpha, kD);
  CHECK(fb[0] == alpha[0]);
  CHECK(fb[1] == alpha[1]);
  CHECK(fb[2] == alpha[2]);

  // identity kind: mapped values are the JS omegas themselves
  const auto id = make_kind(MapFamily::Identity);
  const auto idv = lop_unnormalized(id, triple(0.2, 0.5, 0.3), alpha, kD);
  CHECK(idv[0] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(idv[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(idv[2] == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("normalized adapted weights") {
  const auto m = make_kind(MapFamily::M);

  const auto w1 = lop_weights(m, triple(0.1, 0.6, 0.3), triple(1, 6, 3, false), kD);
  CHECK(w1[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(w1[1] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(w1[2] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(w1.normalized);

  // fallback branch reproduces the JS weights
  const auto wjs = triple(0.3, 0.25, 0.45);
  const auto w2 = lop_weights(m, wjs, triple(3, 2.5, 4.5, false), kD);
  for (int s = 0; s < 3; ++s) CHECK(w2[s] == doctest::Approx(wjs[s]).epsilon(1e-12));

  // order-preserving stencil away from the fixed points: g values, normalized
  // g(0.2;0.1) = 9/85, g(0.5;0.6) = 31/52, g(0.3;0.3) = 3/10 (exact rationals)
  const auto w3 = lop_weights(m, triple(0.2, 0.5, 0.3), triple(2, 5, 3, false), kD);
  const double g0 = 9.0 / 85.0, g1 = 31.0 / 52.0, g2 = 3.0 / 10.0;
  const double sum = g0 + g1 + g2;
  CHECK(w3[0] == doctest::Approx(g0 / sum).epsilon(1e-13));
  CHECK(w3[1] == doctest::Approx(g1 / sum).epsilon(1e-13));
  CHECK(w3[2] == doctest::Approx(g2 / sum).epsilon(1e-13));

  CHECK_THROWS_AS(lop_weights(make_kind(MapFamily::Identity), triple(0, 0, 0),
                              triple(0, 0, 0, false), kD),
                  std::invalid_argument);
}

TEST_CASE("simplex scan: final weights never invert a strict JS ordering") {
  const int n = 200;
  for (const auto& kind : table_kinds()) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n - i; ++j) {
        const double w0 = static_cast<double>(i) / n;
        const double w1 = static_cast<double>(j) / n;
        const double w2 = 1.0 - w0 - w1;
        const auto wjs = triple(w0, w1, std::max(w2, 0.0));
        const auto cls = classify_stencil(kind, wjs, kD);
        const auto fin = lop_weights(kind, wjs, triple(w0, w1, std::max(w2, 0.0), false), kD);
        if (!cls.is_op) {
          for (int s = 0; s < 3; ++s) CHECK(fin[s] == doctest::Approx(wjs[s]).epsilon(1e-13));
        }
        const double w[3] = {w0, w1, std::max(w2, 0.0)};
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            if (w[a] > w[b] + 1e-12) CHECK(fin[a] >= fin[b] - 1e-12);
          }
      }
    }
  }
}

TEST_CASE("strict membership flags exact plateau ties as inversions") {
  // ACM sends both 0.02 (d=0.6, below its lower switch 0.06) and 0.01
  // (d=0.3, below 0.03) to 0: distinct inputs, equal outputs. The default
  // rule accepts that as order-preserving, the strict rule rejects it.
  const auto acm = make_kind(MapFamily::ACM);
  const auto w = triple(0.97, 0.02, 0.01);
  CHECK(map_weight(acm, 0.6, 0.02) == 0.0);
  CHECK(map_weight(acm, 0.3, 0.01) == 0.0);
  OpOptions relaxed;
  OpOptions strict;
  strict.strict = true;
  CHECK(post_index(1, 2, acm, w, kD) == 0.0);
  CHECK(classify_stencil(acm, w, kD, relaxed).is_op);
  CHECK_FALSE(classify_stencil(acm, w, kD, strict).is_op);
}

TEST_CASE("fallback idempotence under the identity kind") {
  const auto id = make_kind(MapFamily::Identity);
  const auto w = triple(0.25, 0.35, 0.4);
  const auto once = lop_weights(id, w, triple(0.25, 0.35, 0.4, false), kD);
  const auto twice = lop_weights(id, once, triple(once[0], once[1], once[2], false), kD);
  for (int s = 0; s < 3; ++s) CHECK(once[s] == doctest::Approx(twice[s]).epsilon(1e-14));
}

TEST_CASE("trace sink collects, sorts, and writes records") {
  TraceSink sink;
  MappingTraceRecord r;
  r.omega_js = triple(0.1, 0.6, 0.3);
  r.final_weight = triple(0.1, 0.6, 0.3);
  r.op_flag = true;
  r.time = 2.0; r.cell = 5; sink.record(r);
  r.time = 1.0; r.cell = 9; sink.record(r);
  r.time = 1.0; r.cell = 2; sink.record(r);
  const auto sorted = sink.sorted_records();
  CHECK(sorted.size() == 3);
  CHECK(sorted[0].cell == 2);
  CHECK(sorted[1].cell == 9);
  CHECK(sorted[2].cell == 5);

  const auto path = std::filesystem::temp_directory_path() / "weno_trace_test.csv";
  sink.write_csv(path.string());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "time,cell,field,omega0_js,omega1_js,omega2_js,w0,w1,w2,op_flag");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
  std::filesystem::remove(path);

  sink.clear();
  CHECK(sink.sorted_records().empty());
}

TEST_CASE("smooth-region stencils keep the mapped weights") {
  // JS weights within 1e-3 of the ideal triple: classification holds and the
  // final weights equal the plain mapped weights
  for (const auto& kind : table_kinds()) {
    for (double shift : {-8e-4, -3e-4, 2e-4, 9e-4}) {
      const auto wjs = triple(0.1 + shift, 0.6 - shift, 0.3);
      const auto cls = classify_stencil(kind, wjs, kD);
      CHECK(cls.is_op);
      const auto fin = lop_weights(kind, wjs, triple(wjs[0], wjs[1], wjs[2], false), kD);
      double g[3], sum = 0.0;
      for (int s = 0; s < 3; ++s) {
        g[s] = map_weight(kind, kD[s], wjs[s]);
        sum += g[s];
      }
      for (int s = 0; s < 3; ++s) CHECK(fin[s] == doctest::Approx(g[s] / sum).epsilon(1e-12));
    }
  }
}
