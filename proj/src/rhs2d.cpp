#include "weno/rhs2d.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "weno/euler.hpp"
#include "weno/util.hpp"

namespace weno {

namespace {

// Normal-frame accessor: axis 0 reads (rho, mx, my, E); axis 1 swaps the
// momenta so the x eigensystem and x flux serve both directions.
inline void load_cell(const Field2D& s, int axis, int normal, int tan, double U[4]) {
  if (axis == 0) {
    U[0] = s.at(0, normal, tan);
    U[1] = s.at(1, normal, tan);
    U[2] = s.at(2, normal, tan);
    U[3] = s.at(3, normal, tan);
  } else {
    U[0] = s.at(0, tan, normal);
    U[1] = s.at(2, tan, normal);
    U[2] = s.at(1, tan, normal);
    U[3] = s.at(3, tan, normal);
  }
}

double max_speed(const Rhs2DConfig& cfg, const Field2D& s, int axis) {
  double a = 0.0;
  for (int j = 0; j < s.ny; ++j)
    for (int i = 0; i < s.nx; ++i) {
      const double U[4] = {s.at(0, i, j), s.at(1, i, j), s.at(2, i, j), s.at(3, i, j)};
      if (!admissible2(U, cfg.gamma))
        throw DivergenceError("inadmissible state at cell (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              -1, (long)j * s.nx + i);
      const double vel = (axis == 0 ? U[1] : U[2]) / U[0];
      const double c = std::sqrt(cfg.gamma * pressure2(U, cfg.gamma) / U[0]);
      a = std::max(a, std::fabs(vel) + c);
    }
  return a;
}

// Pass-1 face averages for rows [-2, n_tan+2), faces [0, n_normal].
struct FaceAverages {
  int n_faces = 0, n_rows = 0;  // rows offset by 2
  std::vector<double> left, right;
  double* L(int f, int j) { return left.data() + ((size_t)f * n_rows + (j + 2)) * 4; }
  double* R(int f, int j) { return right.data() + ((size_t)f * n_rows + (j + 2)) * 4; }
  const double* L(int f, int j) const {
    return left.data() + ((size_t)f * n_rows + (j + 2)) * 4;
  }
  const double* R(int f, int j) const {
    return right.data() + ((size_t)f * n_rows + (j + 2)) * 4;
  }
};

void pass1_face_averages(const Rhs2DConfig& cfg, const Field2D& state, int axis,
                         FaceAverages& fa) {
  const int n_normal = axis == 0 ? state.nx : state.ny;
  const int n_tan = axis == 0 ? state.ny : state.nx;
  fa.n_faces = n_normal + 1;
  fa.n_rows = n_tan + 4;
  fa.left.assign((size_t)fa.n_faces * fa.n_rows * 4, 0.0);
  fa.right.assign(fa.left.size(), 0.0);

  const EvalPoint& pt = interface_point();
  parallel_for(0, fa.n_faces, cfg.workers, [&](long f) {
    for (int j = -2; j < n_tan + 2; ++j) {
      double UL[4], UR[4], W[6][4];
      load_cell(state, axis, (int)f - 1, j, UL);
      load_cell(state, axis, (int)f, j, UR);
      const RoeBasis2D basis = roe_basis_2d(UL, UR, cfg.gamma);
      for (int m = 0; m < 6; ++m) load_cell(state, axis, (int)f - 3 + m, j, W[m]);

      double v[4][6];
      for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 6; ++m)
          v[k][m] = basis.L[k][0] * W[m][0] + basis.L[k][1] * W[m][1] +
                    basis.L[k][2] * W[m][2] + basis.L[k][3] * W[m][3];

      double vl[4], vr[4];
      for (int k = 0; k < 4; ++k) {
        vl[k] = reconstruct_window(cfg.scheme, pt, v[k], nullptr);
        const double rev[5] = {v[k][5], v[k][4], v[k][3], v[k][2], v[k][1]};
        vr[k] = reconstruct_window(cfg.scheme, pt, rev, nullptr);
      }
      double* wl = fa.L((int)f, j);
      double* wr = fa.R((int)f, j);
      for (int c = 0; c < 4; ++c) {
        wl[c] = basis.R[c][0] * vl[0] + basis.R[c][1] * vl[1] + basis.R[c][2] * vl[2] +
                basis.R[c][3] * vl[3];
        wr[c] = basis.R[c][0] * vr[0] + basis.R[c][1] * vr[1] + basis.R[c][2] * vr[2] +
                basis.R[c][3] * vr[3];
      }
    }
  });
}

// Pass 2: tangential point values at the 3 Gauss nodes of each face segment,
// characteristic basis from the Roe average of the pass-1 face states.
void pass2_node_states(const Rhs2DConfig& cfg, const FaceAverages& fa, int axis, int n_tan,
                       FaceNodeStates& out) {
  out.n_faces = fa.n_faces;
  out.n_tan = n_tan;
  out.left.assign((size_t)out.n_faces * n_tan * 3 * 4, 0.0);
  out.right.assign(out.left.size(), 0.0);
  const auto& nodes = face_gauss_points();

  parallel_for(0, out.n_faces, cfg.workers, [&](long f) {
    for (int j = 0; j < n_tan; ++j) {
      const RoeBasis2D basis = [&] {
        try {
          return roe_basis_2d(fa.L((int)f, j), fa.R((int)f, j), cfg.gamma);
        } catch (const DivergenceError&) {
          throw DivergenceError("inadmissible face state at face (" + std::to_string(f) +
                                    "," + std::to_string(j) + ") axis " + std::to_string(axis),
                                -1, f);
        }
      }();

      for (int side = 0; side < 2; ++side) {
        double v[4][5];
        for (int m = 0; m < 5; ++m) {
          const double* W = side == 0 ? fa.L((int)f, j - 2 + m) : fa.R((int)f, j - 2 + m);
          for (int k = 0; k < 4; ++k)
            v[k][m] = basis.L[k][0] * W[0] + basis.L[k][1] * W[1] + basis.L[k][2] * W[2] +
                      basis.L[k][3] * W[3];
        }
        for (int g = 0; g < 3; ++g) {
          double vg[4];
          for (int k = 0; k < 4; ++k)
            vg[k] = reconstruct_window(cfg.scheme, nodes[g], v[k], nullptr);
          double* U = side == 0 ? out.L((int)f, j, g) : out.R((int)f, j, g);
          double Un[4];
          for (int c = 0; c < 4; ++c)
            Un[c] = basis.R[c][0] * vg[0] + basis.R[c][1] * vg[1] + basis.R[c][2] * vg[2] +
                    basis.R[c][3] * vg[3];
          // back to lab components
          if (axis == 0) {
            U[0] = Un[0]; U[1] = Un[1]; U[2] = Un[2]; U[3] = Un[3];
          } else {
            U[0] = Un[0]; U[1] = Un[2]; U[2] = Un[1]; U[3] = Un[3];
          }
        }
      }
    }
  });
}

}  // namespace

double max_wave_speed_x(const Rhs2DConfig& cfg, const Field2D& state) {
  return max_speed(cfg, state, 0);
}

double max_wave_speed_y(const Rhs2DConfig& cfg, const Field2D& state) {
  return max_speed(cfg, state, 1);
}

void face_gauss_states(const Rhs2DConfig& cfg, Field2D& state, int axis, FaceNodeStates& out) {
  apply_boundary(state, cfg.bc);
  FaceAverages fa;
  pass1_face_averages(cfg, state, axis, fa);
  pass2_node_states(cfg, fa, axis, axis == 0 ? state.ny : state.nx, out);
}

void rhs_2d(const Rhs2DConfig& cfg, Field2D& state, Field2D& tend) {
  apply_boundary(state, cfg.bc);
  const int nx = state.nx, ny = state.ny;
  const double dx = cfg.grid.dx(), dy = cfg.grid.dy();
  const double alpha[2] = {max_speed(cfg, state, 0), max_speed(cfg, state, 1)};

  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) tend.at(c, i, j) = 0.0;

  FaceAverages fa;
  FaceNodeStates ns;
  for (int axis = 0; axis < 2; ++axis) {
    const int n_tan = axis == 0 ? ny : nx;
    pass1_face_averages(cfg, state, axis, fa);
    pass2_node_states(cfg, fa, axis, n_tan, ns);

    // Gauss-averaged LF flux per face, normal frame.
    std::vector<double> fhat((size_t)ns.n_faces * n_tan * 4, 0.0);
    parallel_for(0, ns.n_faces, cfg.workers, [&](long f) {
      for (int j = 0; j < n_tan; ++j) {
        double acc[4] = {0, 0, 0, 0};
        for (int g = 0; g < 3; ++g) {
          const double* Ll = ns.L((int)f, j, g);
          const double* Rr = ns.R((int)f, j, g);
          double UL[4], UR[4];
          if (axis == 0) {
            for (int c = 0; c < 4; ++c) { UL[c] = Ll[c]; UR[c] = Rr[c]; }
          } else {
            UL[0] = Ll[0]; UL[1] = Ll[2]; UL[2] = Ll[1]; UL[3] = Ll[3];
            UR[0] = Rr[0]; UR[1] = Rr[2]; UR[2] = Rr[1]; UR[3] = Rr[3];
          }
          if (!admissible2(UL, cfg.gamma) || !admissible2(UR, cfg.gamma))
            throw DivergenceError("inadmissible reconstructed state at face (" +
                                      std::to_string(f) + "," + std::to_string(j) +
                                      ") axis " + std::to_string(axis),
                                  -1, f);
          double FL[4], FR[4];
          flux2(UL, cfg.gamma, FL);
          flux2(UR, cfg.gamma, FR);
          const double wg = kFaceGaussWeights[g];
          for (int c = 0; c < 4; ++c)
            acc[c] += wg * 0.5 * (FL[c] + FR[c] - alpha[axis] * (UR[c] - UL[c]));
        }
        double* dst = fhat.data() + ((size_t)f * n_tan + j) * 4;
        for (int c = 0; c < 4; ++c) dst[c] = acc[c];
      }
    });

    const double inv_h = 1.0 / (axis == 0 ? dx : dy);
    parallel_for(0, n_tan, cfg.workers, [&](long j) {
      const int n_normal = axis == 0 ? nx : ny;
      for (int i = 0; i < n_normal; ++i) {
        const double* fl = fhat.data() + ((size_t)i * n_tan + j) * 4;
        const double* fr = fhat.data() + ((size_t)(i + 1) * n_tan + j) * 4;
        // normal-frame flux components back to lab components
        double d[4] = {fr[0] - fl[0], fr[1] - fl[1], fr[2] - fl[2], fr[3] - fl[3]};
        if (axis == 0) {
          tend.at(0, i, (int)j) -= inv_h * d[0];
          tend.at(1, i, (int)j) -= inv_h * d[1];
          tend.at(2, i, (int)j) -= inv_h * d[2];
          tend.at(3, i, (int)j) -= inv_h * d[3];
        } else {
          tend.at(0, (int)j, i) -= inv_h * d[0];
          tend.at(1, (int)j, i) -= inv_h * d[2];
          tend.at(2, (int)j, i) -= inv_h * d[1];
          tend.at(3, (int)j, i) -= inv_h * d[3];
        }
      }
    });
  }
}

}  // namespace weno
