#pragma once
// Third-order SSP Runge-Kutta stepping and CFL time-step selection.

#include <cmath>
#include <stdexcept>

#include "weno/util.hpp"

namespace weno {

struct CflRule {
  enum class Kind { Fixed, MeshPower } kind = Kind::Fixed;
  double value = 0.5;  // CFL number, or the mesh-power exponent

  static CflRule fixed(double c) { return {Kind::Fixed, c}; }
  static CflRule mesh_power(double e) { return {Kind::MeshPower, e}; }

  // CFL number for mesh width h; must land in (0, 1].
  double number(double h) const {
    const double c = kind == Kind::Fixed ? value : std::pow(h, value);
    if (!(c > 0.0 && c <= 1.0))
      throw std::invalid_argument("CFL number must lie in (0, 1]");
    return c;
  }

  bool operator==(const CflRule&) const = default;
};

double dt_from_cfl(const CflRule& rule, double dx, double alpha);
double dt_from_cfl(const CflRule& rule, double dx, double dy, double ax, double ay);

namespace detail {

template <class State>
void check_finite_stage(const State& s, int stage) {
  for (double v : s.flat())
    if (!std::isfinite(v))
      throw DivergenceError("NaN/Inf at SSP-RK3 stage " + std::to_string(stage), stage);
}

}  // namespace detail

template <class State>
struct RkWorkspace {
  State u1, u2, tend;
  bool ready = false;
};

// U1     = U + dt L(U)
// U2     = 3/4 U + 1/4 U1 + 1/4 dt L(U1)
// U(new) = 1/3 U + 2/3 U2 + 2/3 dt L(U2)
//
// rhs(state, tendency) may refresh the state's ghost layers but must leave
// interior values untouched.
template <class State, class Rhs>
void ssp_rk3_step(State& u, double dt, Rhs&& rhs, RkWorkspace<State>& ws) {
  if (!(dt > 0.0)) throw std::invalid_argument("ssp_rk3_step needs dt > 0");
  if (!ws.ready) {
    ws.u1 = u;
    ws.u2 = u;
    ws.tend = u;
    ws.ready = true;
  }
  auto& u0 = u.flat();
  auto& u1 = ws.u1.flat();
  auto& u2 = ws.u2.flat();
  auto& f = ws.tend.flat();
  const size_t m = u0.size();

  rhs(u, ws.tend);
  for (size_t i = 0; i < m; ++i) u1[i] = u0[i] + dt * f[i];
  detail::check_finite_stage(ws.u1, 1);

  rhs(ws.u1, ws.tend);
  for (size_t i = 0; i < m; ++i) u2[i] = 0.75 * u0[i] + 0.25 * u1[i] + 0.25 * dt * f[i];
  detail::check_finite_stage(ws.u2, 2);

  rhs(ws.u2, ws.tend);
  for (size_t i = 0; i < m; ++i)
    u0[i] = (1.0 / 3.0) * u0[i] + (2.0 / 3.0) * u2[i] + (2.0 / 3.0) * dt * f[i];
  detail::check_finite_stage(u, 3);
}

}  // namespace weno
