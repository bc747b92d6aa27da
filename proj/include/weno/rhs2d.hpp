#pragma once
// 2D Euler finite-volume right-hand side, face-quadrature formulation:
// per axis, pass 1 reconstructs face-averaged states normal to the axis,
// pass 2 reconstructs point values at the 3 Gauss nodes along each face,
// both passes on local characteristic variables; fluxes are global
// Lax-Friedrichs per face node, integrated with the 3-point Gauss rule.

#include <vector>

#include "weno/grid.hpp"
#include "weno/scheme.hpp"

namespace weno {

struct Rhs2DConfig {
  Grid2D grid;
  BoundaryKind bc = BoundaryKind::Periodic;
  double gamma = 1.4;
  SchemeSpec scheme;
  int workers = 1;
};

double max_wave_speed_x(const Rhs2DConfig& cfg, const Field2D& state);
double max_wave_speed_y(const Rhs2DConfig& cfg, const Field2D& state);

// Left/right states at the 3 Gauss nodes of every face normal to `axis`
// (0 = x faces, 1 = y faces), in lab-frame components (rho, mx, my, E).
// Layout: ((face * n_tan + row) * 3 + node) * 4 + comp, faces 0..n_normal.
struct FaceNodeStates {
  int n_faces = 0, n_tan = 0;
  std::vector<double> left, right;
  double* L(int f, int j, int g) { return left.data() + (((size_t)f * n_tan + j) * 3 + g) * 4; }
  double* R(int f, int j, int g) { return right.data() + (((size_t)f * n_tan + j) * 3 + g) * 4; }
  const double* L(int f, int j, int g) const {
    return left.data() + (((size_t)f * n_tan + j) * 3 + g) * 4;
  }
  const double* R(int f, int j, int g) const {
    return right.data() + (((size_t)f * n_tan + j) * 3 + g) * 4;
  }
};

// Fills the state's ghosts and computes the node states for one axis.
void face_gauss_states(const Rhs2DConfig& cfg, Field2D& state, int axis, FaceNodeStates& out);

void rhs_2d(const Rhs2DConfig& cfg, Field2D& state, Field2D& tend);

}  // namespace weno
