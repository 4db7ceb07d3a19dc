#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontstab/errors.hpp"

namespace frontstab {

struct BisectionTolerances {
  double residual = 1e-12;  // stop once |f| < residual ...
  double width = 1e-10;     // ... and the bracket is narrower than this
  int max_iterations = 400;
};

struct BisectionResult {
  double root = 0.0;
  double residual = 0.0;  // f(root)
  double width = 0.0;     // final bracket width
  int iterations = 0;
};

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one is
/// zero). Stops when both tolerances are met or the bracket can no longer be
/// split in double precision.
template <typename Fn>
BisectionResult bisect(Fn&& f, double lo, double hi, double f_lo, double f_hi,
                       const BisectionTolerances& tol = {}) {
  if (f_lo == 0.0) return {lo, 0.0, hi - lo, 0};
  if (f_hi == 0.0) return {hi, 0.0, hi - lo, 0};
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
  }
  BisectionResult r;
  for (r.iterations = 1; r.iterations <= tol.max_iterations; ++r.iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, 0.0, 0.0, r.iterations};
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    const double best = std::abs(f_lo) < std::abs(f_hi) ? std::abs(f_lo) : std::abs(f_hi);
    if (best < tol.residual && hi - lo < tol.width) break;
  }
  r.width = hi - lo;
  if (std::abs(f_lo) <= std::abs(f_hi)) {
    r.root = lo;
    r.residual = f_lo;
  } else {
    r.root = hi;
    r.residual = f_hi;
  }
  return r;
}

struct RootScan {
  std::vector<BisectionResult> roots;  // ascending
  std::vector<std::string> warnings;   // skipped subintervals
};

/// Uniform sign-change scan of f over [lo, hi] with `subintervals` cells, each
/// bracketed cell refined by bisection. Cells whose evaluation throws
/// DegenerateError are skipped and reported in warnings.
template <typename Fn>
RootScan scan_roots(Fn&& f, double lo, double hi, int subintervals,
                    const BisectionTolerances& tol = {}) {
  RootScan out;
  if (!(hi > lo) || subintervals < 1) return out;

  auto safe_eval = [&](double x) -> std::optional<double> {
    try {
      const double v = f(x);
      if (!std::isfinite(v)) return std::nullopt;
      return v;
    } catch (const DegenerateError& e) {
      out.warnings.push_back("degenerate point skipped at " + std::to_string(x) + ": " + e.what());
      return std::nullopt;
    }
  };

  const double step = (hi - lo) / subintervals;
  double x_prev = lo;
  std::optional<double> f_prev = safe_eval(x_prev);
  for (int i = 1; i <= subintervals; ++i) {
    const double x = (i == subintervals) ? hi : lo + step * i;
    const std::optional<double> f_x = safe_eval(x);
    if (f_prev && f_x) {
      // A root sitting exactly on a node is reported once, by the cell to its right.
      const bool zero_left = *f_prev == 0.0;
      const bool crosses = (*f_prev < 0.0 && *f_x > 0.0) || (*f_prev > 0.0 && *f_x < 0.0);
      if (zero_left) {
        out.roots.push_back({x_prev, 0.0, 0.0, 0});
      } else if (crosses) {
        out.roots.push_back(bisect(f, x_prev, x, *f_prev, *f_x, tol));
      } else if (*f_x == 0.0 && i == subintervals) {
        out.roots.push_back({x, 0.0, 0.0, 0});
      }
    }
    x_prev = x;
    f_prev = f_x;
  }
  return out;
}

}  // namespace frontstab
