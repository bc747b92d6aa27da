#include "weno/grid.hpp"

namespace weno {

void apply_boundary(Field1D& f, BoundaryKind kind) {
  for (int c = 0; c < f.ncomp; ++c) {
    for (int g = 1; g <= kGhost; ++g) {
      if (kind == BoundaryKind::Periodic) {
        f.at(c, -g) = f.at(c, f.n - g);
        f.at(c, f.n - 1 + g) = f.at(c, g - 1);
      } else {
        f.at(c, -g) = f.at(c, 0);
        f.at(c, f.n - 1 + g) = f.at(c, f.n - 1);
      }
    }
  }
}

// y ghosts first (interior columns), then x ghosts across all rows so the
// corner blocks are filled too.
void apply_boundary(Field2D& f, BoundaryKind kind) {
  for (int c = 0; c < f.ncomp; ++c) {
    for (int g = 1; g <= kGhost; ++g) {
      for (int i = 0; i < f.nx; ++i) {
        if (kind == BoundaryKind::Periodic) {
          f.at(c, i, -g) = f.at(c, i, f.ny - g);
          f.at(c, i, f.ny - 1 + g) = f.at(c, i, g - 1);
        } else {
          f.at(c, i, -g) = f.at(c, i, 0);
          f.at(c, i, f.ny - 1 + g) = f.at(c, i, f.ny - 1);
        }
      }
    }
    for (int j = -kGhost; j < f.ny + kGhost; ++j) {
      for (int g = 1; g <= kGhost; ++g) {
        if (kind == BoundaryKind::Periodic) {
          f.at(c, -g, j) = f.at(c, f.nx - g, j);
          f.at(c, f.nx - 1 + g, j) = f.at(c, g - 1, j);
        } else {
          f.at(c, -g, j) = f.at(c, 0, j);
          f.at(c, f.nx - 1 + g, j) = f.at(c, f.nx - 1, j);
        }
      }
    }
  }
}

}  // namespace weno
