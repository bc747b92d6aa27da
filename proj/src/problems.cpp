#include "weno/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weno/euler.hpp"
#include "weno/util.hpp"

namespace weno {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 5-point Gauss-Legendre rule on [-1/2, 1/2], averaging weights (sum 1).
constexpr double kG5Node[5] = {-0.45308992296933199639881343915, -0.26923465505284154551815721035,
                               0.0, 0.26923465505284154551815721035,
                               0.45308992296933199639881343915};
constexpr double kG5Weight[5] = {0.11846344252809454375713202036, 0.23931433524968323402064575742,
                                 0.28444444444444444444444444444, 0.23931433524968323402064575742,
                                 0.11846344252809454375713202036};

const ProblemInfo kInfos[] = {
    {ProblemId::Sine1D, "sine", 1, false, -1.0, 1.0, 0, 1, BoundaryKind::Periodic,
     CflRule::fixed(0.1), 2.0, 1.4, true},
    {ProblemId::HighOrderCP, "high-order-cp", 1, false, 7.5, 10.5, 0, 1,
     BoundaryKind::Periodic, CflRule::mesh_power(2.0 / 3.0), 15.0, 1.4, true},
    {ProblemId::Slp, "slp", 1, false, -1.0, 1.0, 0, 1, BoundaryKind::Periodic,
     CflRule::fixed(0.1), 2.0, 1.4, true},
    {ProblemId::Step, "step", 1, false, -1.0, 1.0, 0, 1, BoundaryKind::Periodic,
     CflRule::fixed(0.1), 2000.0, 1.4, true},
    {ProblemId::ShuOsher, "shu-osher", 1, true, -5.0, 5.0, 0, 1,
     BoundaryKind::Transmissive, CflRule::fixed(0.1), 1.8, 1.4, false},
    {ProblemId::TitarevToro, "titarev-toro", 1, true, -5.0, 5.0, 0, 1,
     BoundaryKind::Transmissive, CflRule::fixed(0.4), 5.0, 1.4, false},
    {ProblemId::DensityWave2D1, "density-wave-2d-1", 2, true, -1.0, 1.0, -1.0, 1.0,
     BoundaryKind::Periodic, CflRule::mesh_power(2.0 / 3.0), 2.0, 1.4, true},
    {ProblemId::DensityWave2D2, "density-wave-2d-2", 2, true, -1.0, 1.0, -1.0, 1.0,
     BoundaryKind::Periodic, CflRule::mesh_power(2.0 / 3.0), 2.0, 1.4, true},
    {ProblemId::ShockVortex, "shock-vortex", 2, true, 0.0, 1.0, 0.0, 1.0,
     BoundaryKind::Transmissive, CflRule::fixed(0.5), 0.35, 1.4, false},
};

void check_inside(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi))
    throw std::invalid_argument(std::string(what) + " outside the problem domain");
}

double wrap_periodic(double x, double lo, double hi) {
  const double L = hi - lo;
  double y = std::fmod(x - lo, L);
  if (y < 0) y += L;
  return lo + y;
}

// SLP constants
constexpr double kSlpZ = -0.7;
constexpr double kSlpDelta = 0.005;
const double kSlpBeta = std::log(2.0) / (36.0 * kSlpDelta * kSlpDelta);
constexpr double kSlpA = 0.5;
constexpr double kSlpAlpha = 10.0;

double slp_gauss(double x, double z) { return std::exp(-kSlpBeta * (x - z) * (x - z)); }
double slp_ellipse(double x, double a) {
  const double t = 1.0 - kSlpAlpha * kSlpAlpha * (x - a) * (x - a);
  return std::sqrt(std::max(t, 0.0));
}

double slp_value(double x) {
  if (x >= -0.8 && x <= -0.6)
    return (slp_gauss(x, kSlpZ - kSlpDelta) + 4.0 * slp_gauss(x, kSlpZ) +
            slp_gauss(x, kSlpZ + kSlpDelta)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::fabs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6)
    return (slp_ellipse(x, kSlpA - kSlpDelta) + 4.0 * slp_ellipse(x, kSlpA) +
            slp_ellipse(x, kSlpA + kSlpDelta)) / 6.0;
  return 0.0;
}

double high_order_cp_value(double x) {
  const double s = x - 9.0;
  const double c = std::cos(kPi * s);
  return std::exp(-ipow(s, 5)) * ipow(c, 9);
}

double henrick_wave(double s) { return 1.0 + 0.2 * std::sin(kPi * s - std::sin(kPi * s) / kPi); }

// Breakpoints of the piecewise-defined scalar profiles, in initial coordinates.
std::vector<double> scalar_breakpoints(ProblemId id) {
  switch (id) {
    case ProblemId::Step: return {-1.0, 0.0, 1.0};
    case ProblemId::Slp:
      return {-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.6};
    default: return {};
  }
}

// Shock-vortex constants
constexpr double kSvEps = 0.3;
constexpr double kSvRc = 0.05;
constexpr double kSvAlpha = 0.204;
constexpr double kSvXc = 0.25;
constexpr double kSvYc = 0.5;
constexpr double kSvPr = 1.3;

Prim2D shock_vortex_prim(double x, double y, double gamma) {
  const double rho_l = 1.0, u_l = std::sqrt(gamma), p_l = 1.0;
  if (x < 0.5) {
    const double r2 =
        ((x - kSvXc) * (x - kSvXc) + (y - kSvYc) * (y - kSvYc)) / (kSvRc * kSvRc);
    const double e1 = std::exp(kSvAlpha * (1.0 - r2));
    const double dT =
        -(gamma - 1.0) * kSvEps * kSvEps * std::exp(2.0 * kSvAlpha * (1.0 - r2)) /
        (4.0 * kSvAlpha * gamma);
    const double drho = rho_l * rho_l / ((gamma - 1.0) * p_l) * dT;
    const double du = kSvEps * (y - kSvYc) / kSvRc * e1;
    const double dv = -kSvEps * (x - kSvXc) / kSvRc * e1;
    const double dp = gamma * rho_l * rho_l / ((gamma - 1.0) * rho_l) * dT;
    return {rho_l + drho, u_l + du, dv, p_l + dp};
  }
  const double rho_r =
      rho_l * (gamma - 1.0 + (gamma + 1.0) * kSvPr) / (gamma + 1.0 + (gamma - 1.0) * kSvPr);
  const double u_r = u_l * (1.0 - kSvPr) / std::sqrt(gamma - 1.0 + kSvPr * (gamma + 1.0));
  return {rho_r, u_r, 0.0, kSvPr};
}

}  // namespace

const ProblemInfo& problem_info(ProblemId id) {
  for (const auto& info : kInfos)
    if (info.id == id) return info;
  throw std::invalid_argument("unknown problem id");
}

std::optional<ProblemId> problem_from_name(const std::string& name) {
  for (const auto& info : kInfos)
    if (info.name == name) return info.id;
  return std::nullopt;
}

double scalar_initial(ProblemId id, double x) {
  const auto& info = problem_info(id);
  if (info.dim != 1 || info.euler)
    throw std::invalid_argument("scalar_initial: not a scalar problem");
  check_inside(x, info.x0, info.x1, "position");
  switch (id) {
    case ProblemId::Sine1D: return std::sin(kPi * x);
    case ProblemId::HighOrderCP: return high_order_cp_value(x);
    case ProblemId::Slp: return slp_value(x);
    case ProblemId::Step: return x <= 0.0 ? 1.0 : 0.0;
    default: break;
  }
  throw std::invalid_argument("scalar_initial: unreachable");
}

double scalar_exact(ProblemId id, double x, double t) {
  const auto& info = problem_info(id);
  check_inside(x, info.x0, info.x1, "position");
  const double xs = wrap_periodic(x - t, info.x0, info.x1);
  return scalar_initial(id, xs);
}

Prim1D euler_initial_1d(ProblemId id, double x) {
  const auto& info = problem_info(id);
  if (info.dim != 1 || !info.euler)
    throw std::invalid_argument("euler_initial_1d: not a 1D Euler problem");
  check_inside(x, info.x0, info.x1, "position");
  if (id == ProblemId::ShuOsher) {
    if (x <= -4.0) return {3.857143, 2.629369, 10.333333};
    return {1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
  }
  // Titarev-Toro
  if (x <= -4.5) return {1.515695, 0.5233346, 1.80500};
  return {1.0 + 0.1 * std::sin(20.0 * kPi * x), 0.0, 1.0};
}

Prim2D euler_initial_2d(ProblemId id, double x, double y) {
  const auto& info = problem_info(id);
  if (info.dim != 2) throw std::invalid_argument("euler_initial_2d: not a 2D problem");
  check_inside(x, info.x0, info.x1, "position");
  check_inside(y, info.y0, info.y1, "position");
  switch (id) {
    case ProblemId::DensityWave2D1:
      return {1.0 + 0.2 * std::sin(kPi * (x + y)), 0.7, 0.3, 1.0};
    case ProblemId::DensityWave2D2:
      return {henrick_wave(x + y), 0.7, 0.3, 1.0};
    case ProblemId::ShockVortex:
      return shock_vortex_prim(x, y, info.gamma);
    default: break;
  }
  throw std::invalid_argument("euler_initial_2d: unreachable");
}

double density_exact_2d(ProblemId id, double x, double y, double t) {
  const auto& info = problem_info(id);
  if (!info.has_exact) throw std::invalid_argument("no closed-form solution");
  const double s = x + y - t;  // u + v = 1
  if (id == ProblemId::DensityWave2D1) return 1.0 + 0.2 * std::sin(kPi * s);
  return henrick_wave(s);
}

double average_over(double a, double b, const std::function<double(double)>& f,
                    const std::vector<double>& breakpoints) {
  if (!(b > a)) throw std::invalid_argument("average_over: empty interval");
  std::vector<double> cuts{a, b};
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    const double mid = 0.5 * (lo + hi), len = hi - lo;
    double piece = 0.0;
    for (int q = 0; q < 5; ++q) piece += kG5Weight[q] * f(mid + kG5Node[q] * len);
    acc += piece * len;
  }
  return acc / (b - a);
}

Field1D init_field_1d(ProblemId id, const Grid1D& g) {
  const auto& info = problem_info(id);
  if (info.dim != 1) throw std::invalid_argument("init_field_1d: not a 1D problem");
  if (!info.euler) {
    Field1D f(g.n, 1);
    const auto breaks = scalar_breakpoints(id);
    for (int i = 0; i < g.n; ++i)
      f.at(0, i) =
          average_over(g.face(i), g.face(i + 1), [&](double x) { return scalar_initial(id, x); },
                       breaks);
    return f;
  }
  Field1D f(g.n, 3);
  const std::vector<double> breaks = {id == ProblemId::ShuOsher ? -4.0 : -4.5};
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < g.n; ++i) {
      f.at(c, i) = average_over(
          g.face(i), g.face(i + 1),
          [&](double x) {
            const Prim1D p = euler_initial_1d(id, x);
            const auto U = cons1(p.rho, p.u, p.p, info.gamma);
            return U[c];
          },
          breaks);
    }
  }
  return f;
}

Field2D init_field_2d(ProblemId id, const Grid2D& g) {
  const auto& info = problem_info(id);
  if (info.dim != 2) throw std::invalid_argument("init_field_2d: not a 2D problem");
  Field2D f(g.nx, g.ny, 4);
  const std::vector<double> xbreaks =
      id == ProblemId::ShockVortex ? std::vector<double>{0.5} : std::vector<double>{};
  const double dx = g.dx(), dy = g.dy();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double xl = g.x0 + i * dx, xr = xl + dx;
      const double yc = g.yc(j);
      double U[4] = {0, 0, 0, 0};
      // tensor-product quadrature: outer x (with breakpoints), inner y
      for (int c = 0; c < 4; ++c) {
        U[c] = average_over(xl, xr,
                            [&](double x) {
                              double s = 0.0;
                              for (int q = 0; q < 5; ++q) {
                                const double y = yc + kG5Node[q] * dy;
                                const Prim2D p = euler_initial_2d(id, x, y);
                                const auto Uc = cons2(p.rho, p.u, p.v, p.p, info.gamma);
                                s += kG5Weight[q] * Uc[c];
                              }
                              return s;
                            },
                            xbreaks);
      }
      for (int c = 0; c < 4; ++c) f.at(c, i, j) = U[c];
    }
  }
  return f;
}

std::vector<double> exact_scalar_averages(ProblemId id, const Grid1D& g, double t) {
  const auto& info = problem_info(id);
  if (!info.has_exact || info.euler)
    throw std::invalid_argument("exact_scalar_averages: no closed form");
  // breakpoints advect with unit speed; wrap each into every cell's frame
  const auto base = scalar_breakpoints(id);
  const double L = info.x1 - info.x0;
  std::vector<double> breaks;
  for (double b : base) {
    const double shifted = wrap_periodic(b + t, info.x0, info.x1);
    breaks.push_back(shifted);
    breaks.push_back(shifted - L);
    breaks.push_back(shifted + L);
  }
  std::vector<double> out(g.n);
  for (int i = 0; i < g.n; ++i)
    out[i] = average_over(g.face(i), g.face(i + 1),
                          [&](double x) { return scalar_exact(id, x, t); }, breaks);
  return out;
}

std::vector<double> exact_density_averages(ProblemId id, const Grid2D& g, double t) {
  const auto& info = problem_info(id);
  if (info.dim != 2 || !info.has_exact)
    throw std::invalid_argument("exact_density_averages: no closed form");
  std::vector<double> out(static_cast<size_t>(g.nx) * g.ny);
  const double dx = g.dx(), dy = g.dy();
  for (int j = 0; j < g.ny; ++j) {
    const double yc = g.yc(j);
    for (int i = 0; i < g.nx; ++i) {
      const double xc = g.xc(i);
      double s = 0.0;
      for (int qx = 0; qx < 5; ++qx)
        for (int qy = 0; qy < 5; ++qy)
          s += kG5Weight[qx] * kG5Weight[qy] *
               density_exact_2d(id, xc + kG5Node[qx] * dx, yc + kG5Node[qy] * dy, t);
      out[static_cast<size_t>(j) * g.nx + i] = s;
    }
  }
  return out;
}

}  // namespace weno
