#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weno/euler.hpp"
#include "weno/rhs2d.hpp"

using namespace weno;

namespace {

constexpr double kPi = 3.14159265358979323846;

Rhs2DConfig config(int nx, int ny, BoundaryKind bc = BoundaryKind::Periodic) {
  Rhs2DConfig cfg;
  cfg.grid = Grid2D(-1.0, 1.0, -1.0, 1.0, nx, ny);
  cfg.bc = bc;
  cfg.scheme = make_scheme(MapFamily::Identity, false, true);
  return cfg;
}

Field2D uniform_state(const Grid2D& g, double rho, double u, double v, double p,
                      double gamma) {
  Field2D f(g.nx, g.ny, 4);
  const auto U = cons2(rho, u, v, p, gamma);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
  return f;
}

double monomial_average(int k, double a, double b) {
  return (std::pow(b, k + 1) - std::pow(a, k + 1)) / ((k + 1) * (b - a));
}

}  // namespace

TEST_CASE("three-point Gauss rule integrates face polynomials of degree 5 exactly") {
  const auto& pts = face_gauss_points();
  for (int k = 0; k <= 5; ++k) {
    double integral = 0.0;
    for (int g = 0; g < 3; ++g) integral += kFaceGaussWeights[g] * std::pow(pts[g].xi, k);
    const double exact = monomial_average(k, -0.5, 0.5);
    CHECK(integral == doctest::Approx(exact).epsilon(1e-13));
  }
  // degree 6 must NOT integrate exactly (rule is order 6, not 7)
  double i6 = 0.0;
  for (int g = 0; g < 3; ++g) i6 += kFaceGaussWeights[g] * std::pow(pts[g].xi, 6);
  CHECK(std::fabs(i6 - monomial_average(6, -0.5, 0.5)) > 1e-5);
}

TEST_CASE("2D Roe basis inverts and diagonalizes") {
  const double gamma = 1.4;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rho_d(0.3, 2.0), vel_d(-1.5, 1.5), p_d(0.2, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto UL = cons2(rho_d(rng), vel_d(rng), vel_d(rng), p_d(rng), gamma);
    const auto UR = cons2(rho_d(rng), vel_d(rng), vel_d(rng), p_d(rng), gamma);
    const auto b = roe_basis_2d(UL.data(), UR.data(), gamma);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double lr = 0.0;
        for (int k = 0; k < 4; ++k) lr += b.L[i][k] * b.R[k][j];
        CHECK(std::fabs(lr - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    // A r_k = lambda_k r_k with a finite-difference Jacobian at the Roe state
    const double srl = std::sqrt(UL[0]), srr = std::sqrt(UR[0]);
    const double u = (srl * UL[1] / UL[0] + srr * UR[1] / UR[0]) / (srl + srr);
    const double v = (srl * UL[2] / UL[0] + srr * UR[2] / UR[0]) / (srl + srr);
    const double hl = (UL[3] + pressure2(UL.data(), gamma)) / UL[0];
    const double hr = (UR[3] + pressure2(UR.data(), gamma)) / UR[0];
    const double h = (srl * hl + srr * hr) / (srl + srr);
    const double c2 = (gamma - 1.0) * (h - 0.5 * (u * u + v * v));
    const double rho = srl * srr;
    const double p = rho * c2 / gamma;
    const auto U0 = cons2(rho, u, v, p, gamma);
    double A[4][4];
    const double eps = 1e-7;
    for (int j = 0; j < 4; ++j) {
      double Up[4], Um[4], Fp[4], Fm[4];
      for (int k = 0; k < 4; ++k) {
        Up[k] = U0[k] + (k == j ? eps : 0.0);
        Um[k] = U0[k] - (k == j ? eps : 0.0);
      }
      flux2(Up, gamma, Fp);
      flux2(Um, gamma, Fm);
      for (int i = 0; i < 4; ++i) A[i][j] = (Fp[i] - Fm[i]) / (2.0 * eps);
    }
    for (int k = 0; k < 4; ++k) {
      for (int i = 0; i < 4; ++i) {
        double Ar = 0.0;
        for (int j = 0; j < 4; ++j) Ar += A[i][j] * b.R[j][k];
        CHECK(std::fabs(Ar - b.lambda[k] * b.R[i][k]) < 2e-5);
      }
    }
  }
}

TEST_CASE("face Gauss states reproduce a constant field") {
  auto cfg = config(8, 8);
  cfg.scheme = make_scheme(MapFamily::M, true);
  const auto U = cons2(1.3, 0.4, -0.2, 2.0, cfg.gamma);
  Field2D f = uniform_state(cfg.grid, 1.3, 0.4, -0.2, 2.0, cfg.gamma);
  for (int axis = 0; axis < 2; ++axis) {
    FaceNodeStates ns;
    face_gauss_states(cfg, f, axis, ns);
    for (int fi = 0; fi <= 8; ++fi)
      for (int j = 0; j < 8; ++j)
        for (int g = 0; g < 3; ++g)
          for (int c = 0; c < 4; ++c) {
            CHECK(ns.L(fi, j, g)[c] == doctest::Approx(U[c]).epsilon(1e-12));
            CHECK(ns.R(fi, j, g)[c] == doctest::Approx(U[c]).epsilon(1e-12));
          }
  }
}

TEST_CASE("purely normal variation passes the tangential stage through") {
  // field varies only along x: x-face Gauss nodes all equal the face average
  auto cfg = config(12, 8);
  cfg.scheme = make_scheme(MapFamily::Identity, false);
  Field2D f(12, 8, 4);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 12; ++i) {
      const double rho = 1.0 + 0.3 * std::sin(kPi * cfg.grid.xc(i));
      const auto U = cons2(rho, 0.5, 0.0, 1.0, cfg.gamma);
      for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
    }
  FaceNodeStates ns;
  face_gauss_states(cfg, f, 0, ns);
  for (int fi = 0; fi <= 12; ++fi)
    for (int j = 0; j < 8; ++j)
      for (int c = 0; c < 4; ++c) {
        const double mid = ns.L(fi, j, 1)[c];
        CHECK(ns.L(fi, j, 0)[c] == doctest::Approx(mid).epsilon(1e-12));
        CHECK(ns.L(fi, j, 2)[c] == doctest::Approx(mid).epsilon(1e-12));
        // rows see identical data
        if (j > 0) CHECK(ns.L(fi, j, 1)[c] == doctest::Approx(ns.L(fi, 0, 1)[c]).epsilon(1e-13));
      }
}

TEST_CASE("ideal-weight node states are exact for bi-quartic density") {
  // rho(x, y) = (1 + x + x^2 + x^3/2 + x^4/4)(1 + y - y^2/2 + y^3/4 + y^4/8)/4
  // with constant velocity and pressure; conserved components are rho-linear
  auto poly = [](double t, const double* c) {
    return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * c[4])));
  };
  const double cx[5] = {1.0, 1.0, 1.0, 0.5, 0.25};
  const double cy[5] = {1.0, 1.0, -0.5, 0.25, 0.125};
  auto polyavg = [](const double* c, double a, double b) {
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += c[k] * monomial_average(k, a, b);
    return acc;
  };

  const int n = 10;
  Rhs2DConfig cfg;
  cfg.grid = Grid2D(0.0, 1.0, 0.0, 1.0, n, n);
  cfg.bc = BoundaryKind::Transmissive;  // irrelevant: interior faces checked only
  cfg.scheme = make_scheme(MapFamily::Identity, false, true);
  const double dx = cfg.grid.dx(), dy = cfg.grid.dy();

  // scale rho to stay positive on [0,1]^2 (it does: factors in [1, 3.75] x [0.86, 1.9])
  Field2D f(n, n, 4);
  for (int j = -3; j < n + 3; ++j)
    for (int i = -3; i < n + 3; ++i) {
      const double ax = cfg.grid.x0 + i * dx, bx = ax + dx;
      const double ay = cfg.grid.y0 + j * dy, by = ay + dy;
      const double rho = 0.25 * polyavg(cx, ax, bx) * polyavg(cy, ay, by);
      const auto U = cons2(rho, 0.3, 0.2, 1.0, cfg.gamma);
      // fill including ghosts by extending the polynomial (ghost data is part
      // of the exactness statement; boundary fill is bypassed below)
      f.data[f.idx(0, i, j)] = U[0];
      f.data[f.idx(1, i, j)] = U[1];
      f.data[f.idx(2, i, j)] = U[2];
      f.data[f.idx(3, i, j)] = U[3];
    }

  // call the pass internals through face_gauss_states on a copy whose ghosts
  // are already polynomial data: use periodic fill then overwrite? simplest:
  // rely on ghost data we just wrote and a boundary kind that keeps it
  // intact is not available, so check interior faces only (>= 3 cells in).
  FaceNodeStates ns;
  Rhs2DConfig probe = cfg;
  probe.bc = BoundaryKind::Transmissive;
  Field2D g = f;
  face_gauss_states(probe, g, 0, ns);

  const auto& pts = face_gauss_points();
  for (int fi = 3; fi <= n - 3; ++fi)
    for (int j = 3; j < n - 3; ++j) {
      const double xf = cfg.grid.x0 + fi * dx;
      const double ay = cfg.grid.y0 + j * dy;
      for (int gg = 0; gg < 3; ++gg) {
        const double yg = ay + (0.5 + pts[gg].xi) * dy;
        const double rho_exact = 0.25 * poly(xf, cx) * poly(yg, cy);
        CHECK(ns.L(fi, j, gg)[0] == doctest::Approx(rho_exact).epsilon(1e-10));
        CHECK(ns.R(fi, j, gg)[0] == doctest::Approx(rho_exact).epsilon(1e-10));
      }
    }
}

TEST_CASE("uniform state has zero tendency") {
  auto cfg = config(10, 10);
  for (auto scheme : {make_scheme(MapFamily::Identity, false, true),
                      make_scheme(MapFamily::Identity, false),
                      make_scheme(MapFamily::ACM, true)}) {
    cfg.scheme = scheme;
    Field2D f = uniform_state(cfg.grid, 1.0, 0.7, 0.3, 1.0, cfg.gamma);
    Field2D tend(10, 10, 4);
    rhs_2d(cfg, f, tend);
    for (int c = 0; c < 4; ++c)
      for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 10; ++i) CHECK(std::fabs(tend.at(c, i, j)) < 1e-11);
  }
}

TEST_CASE("periodic tendencies telescope to zero sums") {
  auto cfg = config(12, 12);
  cfg.scheme = make_scheme(MapFamily::M, true);
  Field2D f(12, 12, 4);
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 12; ++i) {
      const double rho = 1.0 + 0.2 * std::sin(kPi * (cfg.grid.xc(i) + cfg.grid.yc(j)));
      const auto U = cons2(rho, 0.7, 0.3, 1.0, cfg.gamma);
      for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
    }
  Field2D tend(12, 12, 4);
  rhs_2d(cfg, f, tend);
  for (int c = 0; c < 4; ++c) {
    double sum = 0.0, scale = 0.0;
    for (int j = 0; j < 12; ++j)
      for (int i = 0; i < 12; ++i) {
        sum += tend.at(c, i, j);
        scale += std::fabs(tend.at(c, i, j));
      }
    CHECK(std::fabs(sum) <= 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("density-wave tendency converges at fifth order") {
  // d(rho_avg)/dt exact = -(1/dxdy) contour flux of the exact solution; for
  // rho = 1 + 0.2 sin(pi(x+y-t)), u=0.7, v=0.3: d rho/dt = -0.2 pi cos(pi(x+y))
  // cell-average form integrates exactly
  double prev = 0.0;
  for (int level = 0; level < 2; ++level) {
    const int n = level == 0 ? 40 : 80;
    auto cfg = config(n, n);
    cfg.scheme = make_scheme(MapFamily::Identity, false, true);
    const double dx = cfg.grid.dx(), dy = cfg.grid.dy();
    Field2D f(n, n, 4);
    auto sin_avg_cell = [&](int i, int j) {
      // average of sin(pi(x+y)) over the cell: corner antiderivative
      const double ax = cfg.grid.x0 + i * dx, ay = cfg.grid.y0 + j * dy;
      const double s1 = std::sin(kPi * (ax + ay));
      const double s2 = std::sin(kPi * (ax + dx + ay));
      const double s3 = std::sin(kPi * (ax + ay + dy));
      const double s4 = std::sin(kPi * (ax + dx + ay + dy));
      return -(s4 - s3 - s2 + s1) / (kPi * kPi) / (dx * dy);
    };
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double rho = 1.0 + 0.2 * sin_avg_cell(i, j);
        const auto U = cons2(rho, 0.7, 0.3, 1.0, cfg.gamma);
        for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
      }
    Field2D tend(n, n, 4);
    rhs_2d(cfg, f, tend);
    double linf = 0.0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        // exact rate of change of the cell-averaged density at t=0:
        // d/dt avg = -(u+v) * 0.2 pi * avg cos(pi(x+y)), with the cosine
        // average from the corner antiderivative
        const double ax = cfg.grid.x0 + i * dx, ay = cfg.grid.y0 + j * dy;
        const double c1 = std::cos(kPi * (ax + ay));
        const double c2 = std::cos(kPi * (ax + dx + ay));
        const double c3 = std::cos(kPi * (ax + ay + dy));
        const double c4 = std::cos(kPi * (ax + dx + ay + dy));
        const double exact = 0.2 * (c4 - c3 - c2 + c1) / (kPi * dx * dy);
        linf = std::max(linf, std::fabs(tend.at(0, i, j) - exact));
      }
    if (level == 1) CHECK(std::log2(prev / linf) > 4.6);
    prev = linf;
  }
}

TEST_CASE("transposed field with swapped velocities gives the transposed tendency") {
  const int n = 10;
  auto cfg = config(n, n);
  cfg.scheme = make_scheme(MapFamily::PPM5, true);
  Field2D f(n, n, 4);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> pert(-0.05, 0.05);
  std::vector<double> bump(n * n);
  for (auto& b : bump) b = pert(rng);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double rho = 1.0 + 0.2 * std::sin(kPi * (cfg.grid.xc(i) + cfg.grid.yc(j))) +
                         bump[j * n + i];
      const auto U = cons2(rho, 0.7, 0.3, 1.0, cfg.gamma);
      for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
    }
  Field2D ft(n, n, 4);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      ft.at(0, j, i) = f.at(0, i, j);
      ft.at(1, j, i) = f.at(2, i, j);
      ft.at(2, j, i) = f.at(1, i, j);
      ft.at(3, j, i) = f.at(3, i, j);
    }
  Field2D t1(n, n, 4), t2(n, n, 4);
  rhs_2d(cfg, f, t1);
  rhs_2d(cfg, ft, t2);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      CHECK(t1.at(0, i, j) == doctest::Approx(t2.at(0, j, i)).epsilon(1e-12));
      CHECK(t1.at(1, i, j) == doctest::Approx(t2.at(2, j, i)).epsilon(1e-12));
      CHECK(t1.at(2, i, j) == doctest::Approx(t2.at(1, j, i)).epsilon(1e-12));
      CHECK(t1.at(3, i, j) == doctest::Approx(t2.at(3, j, i)).epsilon(1e-12));
    }
}

TEST_CASE("2D workers do not change the result") {
  const int n = 12;
  auto cfg = config(n, n);
  cfg.scheme = make_scheme(MapFamily::IM, true);
  Field2D f(n, n, 4);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double rho = 1.0 + 0.2 * std::sin(kPi * (cfg.grid.xc(i) - 0.3 * cfg.grid.yc(j)));
      const auto U = cons2(rho, 0.7, 0.3, 1.0, cfg.gamma);
      for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
    }
  Field2D t1(n, n, 4), t2(n, n, 4);
  cfg.workers = 1;
  rhs_2d(cfg, f, t1);
  cfg.workers = 2;
  rhs_2d(cfg, f, t2);
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) CHECK(t1.at(c, i, j) == t2.at(c, i, j));
}
