#pragma once

#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace weno {

// Solver blow-up: NaN at an RK stage or an inadmissible state/face.
struct DivergenceError : std::runtime_error {
  int stage = -1;    // RK stage (1..3) when detected by the integrator
  long cell = -1;    // offending cell or face index when known
  double time = std::nan("");

  explicit DivergenceError(const std::string& msg, int stage_ = -1, long cell_ = -1)
      : std::runtime_error(msg), stage(stage_), cell(cell_) {}
};

// Config-file rejection, with 1-based line number when it applies to a line.
struct ConfigError : std::runtime_error {
  int line = 0;
  explicit ConfigError(const std::string& msg, int line_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Chunked index-range parallelism. workers <= 1 runs inline. Writes of the
// body must be disjoint per index so results do not depend on the worker
// count. An exception thrown by the body is rethrown in the caller.
template <class Fn>
void parallel_for(long begin, long end, int workers, Fn&& body) {
  const long count = end - begin;
  if (count <= 0) return;
  if (workers <= 1 || count < 2 * workers) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long chunk = (count + workers - 1) / workers;
  std::mutex err_mu;
  std::exception_ptr err;
  for (int w = 0; w < workers; ++w) {
    const long lo = begin + w * chunk;
    const long hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body, &err_mu, &err] {
      try {
        for (long i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// Paper-style scientific formatting, 6 significant digits (e.g. 1.53437E-03).
inline std::string format_sci6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5E", x);
  return buf;
}

inline std::string format_full(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace weno
