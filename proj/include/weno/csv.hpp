#pragma once
// CSV emission for error tables, field snapshots, and slices. Floating
// values print with 6 significant digits in scientific notation unless full
// precision is requested.

#include <string>

#include "weno/grid.hpp"
#include "weno/metrics.hpp"
#include "weno/problems.hpp"

namespace weno {

// Header: scheme,n,l1,l1_order,linf,linf_order,chi1,chi_inf
// (undefined entries stay empty). label_is_time renames 'n' to 't'.
void emit_error_report_csv(const ErrorReport& report, const std::string& path,
                           bool full_precision = false, bool label_is_time = false);

// 1D scalar: x,u. 1D Euler: x,rho,u,p.
void emit_field_csv(const Grid1D& g, const Field1D& f, double gamma, const std::string& path,
                    bool full_precision = false);

// 2D Euler: x,y,rho,u,v,p.
void emit_field_csv(const Grid2D& g, const Field2D& f, double gamma, const std::string& path,
                    bool full_precision = false);

// Row of density values along a slice: x,rho (slice along y = coord) or
// y,rho (slice along x = coord).
void emit_slice_csv(const Grid2D& g, const Field2D& f, int axis, double coord,
                    const std::string& path, bool full_precision = false);

}  // namespace weno
