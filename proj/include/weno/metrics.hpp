#pragma once
// Error norms, convergence orders, increased-error percentages, and an
// overshoot metric for discontinuity tests.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weno {

struct ErrorRow {
  std::string scheme;
  double n = 0;  // cells per axis (or time, for time-series tables)
  double l1 = 0, linf = 0;
  std::optional<double> l1_order, linf_order;
  std::optional<double> chi1, chi_inf;  // percent vs ILW baseline
};

struct ErrorReport {
  std::vector<ErrorRow> rows;
};

// L1 = h * sum |num - ref| (h = hx*hy in 2D), Linf = max |num - ref|.
std::pair<double, double> error_norms(std::span<const double> numerical,
                                      std::span<const double> exact, double h);

double convergence_order(double e_coarse, double e_fine, double n_coarse, double n_fine);

// (L_y - L_ilw) / L_ilw * 100.
double increased_errors(double l_y, double l_ilw);

// max(0, max(field) - upper, lower - min(field)).
double overshoot_metric(std::span<const double> field, double lower, double upper);

}  // namespace weno
