#include "weno/csv.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "weno/euler.hpp"
#include "weno/util.hpp"

namespace weno {

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

struct Fmt {
  bool full;
  std::string operator()(double x) const { return full ? format_full(x) : format_sci6(x); }
};

}  // namespace

void emit_error_report_csv(const ErrorReport& report, const std::string& path,
                           bool full_precision, bool label_is_time) {
  auto out = open_or_throw(path);
  const Fmt fmt{full_precision};
  out << "scheme," << (label_is_time ? "t" : "n") << ",l1,l1_order,linf,linf_order,chi1,chi_inf\n";
  for (const auto& r : report.rows) {
    out << r.scheme << ',';
    if (r.n == std::floor(r.n))
      out << static_cast<long>(r.n);
    else
      out << fmt(r.n);
    out << ',' << fmt(r.l1) << ',';
    if (r.l1_order) out << fmt(*r.l1_order);
    out << ',' << fmt(r.linf) << ',';
    if (r.linf_order) out << fmt(*r.linf_order);
    out << ',';
    if (r.chi1) out << fmt(*r.chi1);
    out << ',';
    if (r.chi_inf) out << fmt(*r.chi_inf);
    out << '\n';
  }
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

void emit_field_csv(const Grid1D& g, const Field1D& f, double gamma, const std::string& path,
                    bool full_precision) {
  auto out = open_or_throw(path);
  const Fmt fmt{full_precision};
  if (f.ncomp == 1) {
    out << "x,u\n";
    for (int i = 0; i < g.n; ++i) out << fmt(g.center(i)) << ',' << fmt(f.at(0, i)) << '\n';
  } else {
    out << "x,rho,u,p\n";
    for (int i = 0; i < g.n; ++i) {
      const double U[3] = {f.at(0, i), f.at(1, i), f.at(2, i)};
      out << fmt(g.center(i)) << ',' << fmt(U[0]) << ',' << fmt(U[1] / U[0]) << ','
          << fmt(pressure1(U, gamma)) << '\n';
    }
  }
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

void emit_field_csv(const Grid2D& g, const Field2D& f, double gamma, const std::string& path,
                    bool full_precision) {
  auto out = open_or_throw(path);
  const Fmt fmt{full_precision};
  out << "x,y,rho,u,v,p\n";
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double U[4] = {f.at(0, i, j), f.at(1, i, j), f.at(2, i, j), f.at(3, i, j)};
      out << fmt(g.xc(i)) << ',' << fmt(g.yc(j)) << ',' << fmt(U[0]) << ','
          << fmt(U[1] / U[0]) << ',' << fmt(U[2] / U[0]) << ',' << fmt(pressure2(U, gamma))
          << '\n';
    }
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

void emit_slice_csv(const Grid2D& g, const Field2D& f, int axis, double coord,
                    const std::string& path, bool full_precision) {
  auto out = open_or_throw(path);
  const Fmt fmt{full_precision};
  if (axis == 1) {
    int j = static_cast<int>(std::floor((coord - g.y0) / g.dy()));
    j = std::min(std::max(j, 0), g.ny - 1);
    out << "x,rho\n";
    for (int i = 0; i < g.nx; ++i) out << fmt(g.xc(i)) << ',' << fmt(f.at(0, i, j)) << '\n';
  } else {
    int i = static_cast<int>(std::floor((coord - g.x0) / g.dx()));
    i = std::min(std::max(i, 0), g.nx - 1);
    out << "y,rho\n";
    for (int j = 0; j < g.ny; ++j) out << fmt(g.yc(j)) << ',' << fmt(f.at(0, i, j)) << '\n';
  }
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace weno
