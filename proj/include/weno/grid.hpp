#pragma once
// Uniform grids with 3-deep ghost layers and the flat field containers the
// solvers and the SSP-RK integrator operate on.

#include <stdexcept>
#include <vector>

namespace weno {

inline constexpr int kGhost = 3;

enum class BoundaryKind { Periodic, Transmissive };

struct Grid1D {
  double x_left = 0.0, x_right = 1.0;
  int n = 0;

  Grid1D() = default;
  Grid1D(double xl, double xr, int n_) : x_left(xl), x_right(xr), n(n_) {
    if (n < 6) throw std::invalid_argument("Grid1D needs at least 6 cells");
    if (!(xr > xl)) throw std::invalid_argument("Grid1D needs x_right > x_left");
  }
  double dx() const { return (x_right - x_left) / n; }
  double center(int i) const { return x_left + (i + 0.5) * dx(); }
  double face(int f) const { return x_left + f * dx(); }
};

struct Grid2D {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int nx = 0, ny = 0;

  Grid2D() = default;
  Grid2D(double x0_, double x1_, double y0_, double y1_, int nx_, int ny_)
      : x0(x0_), x1(x1_), y0(y0_), y1(y1_), nx(nx_), ny(ny_) {
    if (nx < 6 || ny < 6) throw std::invalid_argument("Grid2D needs at least 6 cells per axis");
    if (!(x1 > x0 && y1 > y0)) throw std::invalid_argument("Grid2D bounds are inverted");
  }
  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return y0 + (j + 0.5) * dy(); }
};

// Component-major 1D field over [-kGhost, n + kGhost).
struct Field1D {
  int n = 0, ncomp = 1;
  std::vector<double> data;

  Field1D() = default;
  Field1D(int n_, int ncomp_) : n(n_), ncomp(ncomp_), data((n_ + 2 * kGhost) * ncomp_, 0.0) {}

  int stride() const { return n + 2 * kGhost; }
  double& at(int comp, int i) { return data[comp * stride() + (i + kGhost)]; }
  double at(int comp, int i) const { return data[comp * stride() + (i + kGhost)]; }
  std::vector<double>& flat() { return data; }
  const std::vector<double>& flat() const { return data; }
};

// Component-major 2D field; within a component, row-major with x fastest.
struct Field2D {
  int nx = 0, ny = 0, ncomp = 4;
  std::vector<double> data;

  Field2D() = default;
  Field2D(int nx_, int ny_, int ncomp_)
      : nx(nx_), ny(ny_), ncomp(ncomp_),
        data(static_cast<size_t>(nx_ + 2 * kGhost) * (ny_ + 2 * kGhost) * ncomp_, 0.0) {}

  int sx() const { return nx + 2 * kGhost; }
  int sy() const { return ny + 2 * kGhost; }
  size_t idx(int comp, int i, int j) const {
    return (static_cast<size_t>(comp) * sy() + (j + kGhost)) * sx() + (i + kGhost);
  }
  double& at(int comp, int i, int j) { return data[idx(comp, i, j)]; }
  double at(int comp, int i, int j) const { return data[idx(comp, i, j)]; }
  std::vector<double>& flat() { return data; }
  const std::vector<double>& flat() const { return data; }
};

void apply_boundary(Field1D& f, BoundaryKind kind);
void apply_boundary(Field2D& f, BoundaryKind kind);

}  // namespace weno
