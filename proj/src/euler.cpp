#include "weno/euler.hpp"

#include <cmath>

#include "weno/util.hpp"

namespace weno {

bool admissible1(const double U[3], double gamma) {
  return U[0] > 0.0 && pressure1(U, gamma) > 0.0 && std::isfinite(U[0]) &&
         std::isfinite(U[1]) && std::isfinite(U[2]);
}

bool admissible2(const double U[4], double gamma) {
  return U[0] > 0.0 && pressure2(U, gamma) > 0.0 && std::isfinite(U[0]) &&
         std::isfinite(U[1]) && std::isfinite(U[2]) && std::isfinite(U[3]);
}

RoeBasis1D roe_basis_1d(const double UL[3], const double UR[3], double gamma) {
  if (!admissible1(UL, gamma) || !admissible1(UR, gamma))
    throw DivergenceError("roe_basis_1d: inadmissible state");
  const double srl = std::sqrt(UL[0]), srr = std::sqrt(UR[0]);
  const double ul = UL[1] / UL[0], ur = UR[1] / UR[0];
  const double hl = (UL[2] + pressure1(UL, gamma)) / UL[0];
  const double hr = (UR[2] + pressure1(UR, gamma)) / UR[0];
  const double inv = 1.0 / (srl + srr);
  const double u = (srl * ul + srr * ur) * inv;
  const double h = (srl * hl + srr * hr) * inv;
  const double c2 = (gamma - 1.0) * (h - 0.5 * u * u);
  if (!(c2 > 0.0)) throw DivergenceError("roe_basis_1d: nonpositive Roe sound speed");
  const double c = std::sqrt(c2);

  RoeBasis1D b;
  b.lambda[0] = u - c;
  b.lambda[1] = u;
  b.lambda[2] = u + c;

  const double R[3][3] = {{1.0, 1.0, 1.0},
                          {u - c, u, u + c},
                          {h - u * c, 0.5 * u * u, h + u * c}};
  const double b1 = (gamma - 1.0) / c2;
  const double b2 = 0.5 * b1 * u * u;
  const double L[3][3] = {
      {0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
      {1.0 - b2, b1 * u, -b1},
      {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      b.R[i][j] = R[i][j];
      b.L[i][j] = L[i][j];
    }
  return b;
}

RoeBasis2D roe_basis_2d(const double UL[4], const double UR[4], double gamma) {
  if (!admissible2(UL, gamma) || !admissible2(UR, gamma))
    throw DivergenceError("roe_basis_2d: inadmissible state");
  const double srl = std::sqrt(UL[0]), srr = std::sqrt(UR[0]);
  const double ul = UL[1] / UL[0], ur = UR[1] / UR[0];
  const double vl = UL[2] / UL[0], vr = UR[2] / UR[0];
  const double hl = (UL[3] + pressure2(UL, gamma)) / UL[0];
  const double hr = (UR[3] + pressure2(UR, gamma)) / UR[0];
  const double inv = 1.0 / (srl + srr);
  const double u = (srl * ul + srr * ur) * inv;
  const double v = (srl * vl + srr * vr) * inv;
  const double h = (srl * hl + srr * hr) * inv;
  const double q2 = u * u + v * v;
  const double c2 = (gamma - 1.0) * (h - 0.5 * q2);
  if (!(c2 > 0.0)) throw DivergenceError("roe_basis_2d: nonpositive Roe sound speed");
  const double c = std::sqrt(c2);

  RoeBasis2D b;
  b.lambda[0] = u - c;
  b.lambda[1] = u;
  b.lambda[2] = u;
  b.lambda[3] = u + c;

  const double R[4][4] = {{1.0, 1.0, 0.0, 1.0},
                          {u - c, u, 0.0, u + c},
                          {v, v, 1.0, v},
                          {h - u * c, 0.5 * q2, v, h + u * c}};
  const double b1 = (gamma - 1.0) / c2;
  const double b2 = 0.5 * b1 * q2;
  const double L[4][4] = {
      {0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
      {1.0 - b2, b1 * u, b1 * v, -b1},
      {-v, 0.0, 1.0, 0.0},
      {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      b.R[i][j] = R[i][j];
      b.L[i][j] = L[i][j];
    }
  return b;
}

}  // namespace weno
