#include "weno/rhs1d.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "weno/euler.hpp"
#include "weno/util.hpp"

namespace weno {

void lf_split(std::span<const double> f, std::span<const double> u, double alpha,
              std::span<double> f_plus, std::span<double> f_minus) {
  if (!(alpha > 0.0)) throw std::invalid_argument("lf_split: alpha must be positive");
  if (f.size() != u.size() || f.size() != f_plus.size() || f.size() != f_minus.size())
    throw std::invalid_argument("lf_split: size mismatch");
  for (size_t i = 0; i < f.size(); ++i) {
    f_plus[i] = 0.5 * (f[i] + alpha * u[i]);
    f_minus[i] = 0.5 * (f[i] - alpha * u[i]);
  }
}

double max_wave_speed(const Rhs1DConfig& cfg, const Field1D& state) {
  if (cfg.eq == Equation1D::Advection) return std::fabs(cfg.advection_speed);
  double a = 0.0;
  for (int i = 0; i < state.n; ++i) {
    const double U[3] = {state.at(0, i), state.at(1, i), state.at(2, i)};
    if (!admissible1(U, cfg.gamma))
      throw DivergenceError("inadmissible state at cell " + std::to_string(i), -1, i);
    const double u = U[1] / U[0];
    const double c = std::sqrt(cfg.gamma * pressure1(U, cfg.gamma) / U[0]);
    a = std::max(a, std::fabs(u) + c);
  }
  return a;
}

namespace {

// Upwind interface pair from consecutive split-flux values. p spans cells
// [f-3, f+2] of the plus flux, m the same cells of the minus flux.
inline double interface_value(const SchemeSpec& scheme, const double* p, const double* m,
                              WindowTrace* trace) {
  const EvalPoint& pt = interface_point();
  const double plus = reconstruct_window(scheme, pt, p, trace);  // cells f-3..f+1
  const double rev[5] = {m[5], m[4], m[3], m[2], m[1]};          // mirrored window
  const double minus = reconstruct_window(scheme, pt, rev, nullptr);
  return plus + minus;
}

void rhs_advection(const Rhs1DConfig& cfg, const Field1D& state, Field1D& tend) {
  const int n = state.n;
  const double dx = cfg.grid.dx();
  const double a = cfg.advection_speed;
  const double alpha = std::fabs(a);
  if (!(alpha > 0.0)) throw std::invalid_argument("advection speed must be nonzero");

  const int total = n + 2 * kGhost;
  std::vector<double> fp(total), fm(total);
  for (int i = -kGhost; i < n + kGhost; ++i) {
    const double u = state.at(0, i);
    const double f = a * u;
    fp[i + kGhost] = 0.5 * (f + alpha * u);
    fm[i + kGhost] = 0.5 * (f - alpha * u);
  }

  std::vector<double> flux(n + 1);
  parallel_for(0, n + 1, cfg.workers, [&](long f) {
    const double* p = fp.data() + (f - 3 + kGhost);
    const double* m = fm.data() + (f - 3 + kGhost);
    WindowTrace tr;
    WindowTrace* trp = cfg.trace ? &tr : nullptr;
    flux[f] = interface_value(cfg.scheme, p, m, trp);
    if (cfg.trace) {
      MappingTraceRecord rec;
      rec.time = cfg.trace_time;
      rec.cell = f;
      rec.field = 0;
      rec.omega_js = tr.omega_js;
      rec.final_weight = tr.final_weight;
      rec.op_flag = tr.op_flag;
      cfg.trace->record(rec);
    }
  });

  for (int i = 0; i < n; ++i) tend.at(0, i) = -(flux[i + 1] - flux[i]) / dx;
}

void rhs_euler(const Rhs1DConfig& cfg, const Field1D& state, Field1D& tend) {
  const int n = state.n;
  const double dx = cfg.grid.dx();
  const double gamma = cfg.gamma;

  const double alpha = max_wave_speed(cfg, state);  // validates admissibility

  const int total = n + 2 * kGhost;
  std::vector<double> fp(static_cast<size_t>(total) * 3), fm(fp.size());
  for (int i = -kGhost; i < n + kGhost; ++i) {
    const double U[3] = {state.at(0, i), state.at(1, i), state.at(2, i)};
    double F[3];
    flux1(U, gamma, F);
    for (int c = 0; c < 3; ++c) {
      fp[static_cast<size_t>(c) * total + (i + kGhost)] = 0.5 * (F[c] + alpha * U[c]);
      fm[static_cast<size_t>(c) * total + (i + kGhost)] = 0.5 * (F[c] - alpha * U[c]);
    }
  }

  std::vector<double> flux(static_cast<size_t>(n + 1) * 3);
  parallel_for(0, n + 1, cfg.workers, [&](long f) {
    const double UL[3] = {state.at(0, f - 1), state.at(1, f - 1), state.at(2, f - 1)};
    const double UR[3] = {state.at(0, f), state.at(1, f), state.at(2, f)};
    const RoeBasis1D basis = roe_basis_1d(UL, UR, gamma);

    // project the 6-cell split-flux windows onto the characteristic fields
    double vp[3][6], vm[3][6];
    for (int m = 0; m < 6; ++m) {
      const int cell = static_cast<int>(f) - 3 + m + kGhost;
      const double fpv[3] = {fp[cell], fp[total + cell], fp[2 * total + cell]};
      const double fmv[3] = {fm[cell], fm[total + cell], fm[2 * total + cell]};
      for (int k = 0; k < 3; ++k) {
        vp[k][m] = basis.L[k][0] * fpv[0] + basis.L[k][1] * fpv[1] + basis.L[k][2] * fpv[2];
        vm[k][m] = basis.L[k][0] * fmv[0] + basis.L[k][1] * fmv[1] + basis.L[k][2] * fmv[2];
      }
    }

    double vhat[3];
    for (int k = 0; k < 3; ++k) {
      WindowTrace tr;
      WindowTrace* trp = cfg.trace ? &tr : nullptr;
      vhat[k] = interface_value(cfg.scheme, vp[k], vm[k], trp);
      if (cfg.trace) {
        MappingTraceRecord rec;
        rec.time = cfg.trace_time;
        rec.cell = f;
        rec.field = k;
        rec.omega_js = tr.omega_js;
        rec.final_weight = tr.final_weight;
        rec.op_flag = tr.op_flag;
        cfg.trace->record(rec);
      }
    }
    for (int c = 0; c < 3; ++c)
      flux[static_cast<size_t>(f) * 3 + c] =
          basis.R[c][0] * vhat[0] + basis.R[c][1] * vhat[1] + basis.R[c][2] * vhat[2];
  });

  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c)
      tend.at(c, i) =
          -(flux[static_cast<size_t>(i + 1) * 3 + c] - flux[static_cast<size_t>(i) * 3 + c]) / dx;
}

}  // namespace

void rhs_1d(const Rhs1DConfig& cfg, Field1D& state, Field1D& tend) {
  apply_boundary(state, cfg.bc);
  if (cfg.eq == Equation1D::Advection)
    rhs_advection(cfg, state, tend);
  else
    rhs_euler(cfg, state, tend);
}

}  // namespace weno
