#pragma once
// Compressible Euler helpers: primitive/conserved conversions, fluxes, and
// Roe-averaged eigensystems for the local characteristic decomposition.

#include <array>

namespace weno {

inline constexpr double kGammaDefault = 1.4;

// ---- 1D: U = (rho, rho u, E) -----------------------------------------------

inline double pressure1(const double U[3], double gamma) {
  return (gamma - 1.0) * (U[2] - 0.5 * U[1] * U[1] / U[0]);
}

inline std::array<double, 3> cons1(double rho, double u, double p, double gamma) {
  return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

inline void flux1(const double U[3], double gamma, double F[3]) {
  const double u = U[1] / U[0];
  const double p = pressure1(U, gamma);
  F[0] = U[1];
  F[1] = U[1] * u + p;
  F[2] = u * (U[2] + p);
}

bool admissible1(const double U[3], double gamma);

struct RoeBasis1D {
  double L[3][3];
  double R[3][3];
  double lambda[3];  // u - c, u, u + c at the Roe state
};

// Throws DivergenceError when either state is inadmissible.
RoeBasis1D roe_basis_1d(const double UL[3], const double UR[3], double gamma);

// ---- 2D, normal frame: U = (rho, rho u_n, rho u_t, E) ----------------------

inline double pressure2(const double U[4], double gamma) {
  return (gamma - 1.0) * (U[3] - 0.5 * (U[1] * U[1] + U[2] * U[2]) / U[0]);
}

inline std::array<double, 4> cons2(double rho, double un, double ut, double p, double gamma) {
  return {rho, rho * un, rho * ut, p / (gamma - 1.0) + 0.5 * rho * (un * un + ut * ut)};
}

// Flux along the normal direction.
inline void flux2(const double U[4], double gamma, double F[4]) {
  const double un = U[1] / U[0];
  const double p = pressure2(U, gamma);
  F[0] = U[1];
  F[1] = U[1] * un + p;
  F[2] = U[2] * un;
  F[3] = un * (U[3] + p);
}

bool admissible2(const double U[4], double gamma);

struct RoeBasis2D {
  double L[4][4];
  double R[4][4];
  double lambda[4];  // u - c, u, u, u + c
};

RoeBasis2D roe_basis_2d(const double UL[4], const double UR[4], double gamma);

}  // namespace weno
