#include "bessel/fk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bessel/core.hpp"

namespace bessel {
namespace {

constexpr double kPoleClearance = 1e-4;

long double fk_ld(long double k, long double r) {
  return 2 * (k + 1) - r * detail::ratio_continued_fraction(k + 1, r);
}

// Five-point central difference of F_k at r with step h.
double fk_finite_difference(long double k, long double r, long double h) {
  const long double f2 = fk_ld(k, r + 2 * h);
  const long double f1 = fk_ld(k, r + h);
  const long double b1 = fk_ld(k, r - h);
  const long double b2 = fk_ld(k, r - 2 * h);
  return static_cast<double>((-f2 + 8 * f1 - 8 * b1 + b2) / (12 * h));
}

}  // namespace

FkValue eval_fk(Order k, double r) {
  if (!(r > 0) || !std::isfinite(r)) throw DomainError("F_k needs a positive finite radius");
  if (detail::near_zero(k.shifted(1), r, 10.0)) return FkValue::pole();
  return FkValue::finite(static_cast<double>(fk_ld(k.value(), r)));
}

Interval branch_domain(Order k, int n) {
  if (n < 1) throw DomainError("branch index must be >= 1");
  const Order next = k.shifted(1);
  const double lo = n == 1 ? 0.0 : nth_zero(next, n - 1);
  return {lo, nth_zero(next, n)};
}

Branch branch(Order k, int n) {
  Branch b;
  b.n = n;
  b.domain = branch_domain(k, n);
  b.root = nth_zero(k, n);
  if (!b.domain.contains(b.root)) {
    throw ConvergenceError("root of F_k fell outside its branch domain");
  }
  if (n == 1) b.limit_at_origin = 2 * (k.value() + 1);
  return b;
}

double fk_derivative(Order k, double r) {
  const long double nu = k.value();
  const long double a = detail::eval_j_ld(nu, r);
  const long double b = detail::eval_j_ld(nu + 1, r);
  const long double c = detail::eval_j_ld(nu + 2, r);
  return static_cast<double>(r * (a * c - b * b) / (b * b));
}

double fk_derivative_margin(Order k, double r) {
  const long double nu = k.value();
  const long double a = detail::eval_j_ld(nu, r);
  const long double b = detail::eval_j_ld(nu + 1, r);
  const long double c = detail::eval_j_ld(nu + 2, r);
  // J_k J_{k+2} - J_{k+1}^2 + J_{k+1}^2/(k+2) = J_k J_{k+2} - J_{k+1}^2 (k+1)/(k+2)
  const long double excess = a * c - b * b * (nu + 1) / (nu + 2);
  return static_cast<double>(r * excess / (b * b));
}

DecreasingBoundReport check_decreasing_bound(Order k, Interval interval, int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  if (!(interval.lo > 0) || !(interval.hi > interval.lo)) {
    throw DomainError("interval must be a non-empty subset of (0, inf)");
  }
  const ZeroTable poles = zeros_up_to(k.shifted(1), interval.hi + 1.0);
  std::vector<double> nearby;
  for (const auto& z : poles.entries()) {
    if (z.value > interval.lo - kPoleClearance && z.value < interval.hi + kPoleClearance) {
      throw DomainError("interval touches a pole of F_k");
    }
    nearby.push_back(z.value);
  }
  auto pole_distance = [&](double r) {
    double d = std::numeric_limits<double>::infinity();
    for (double p : nearby) d = std::min(d, std::fabs(r - p));
    return d;
  };

  DecreasingBoundReport report;
  report.samples = samples;
  report.max_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double r = interval.lo + (interval.hi - interval.lo) * i / (samples - 1);
    const double margin = fk_derivative_margin(k, r);
    if (margin > report.max_margin) {
      report.max_margin = margin;
      report.argmax = r;
    }
    const double analytic = fk_derivative(k, r);
    const double h = std::min(1e-3, 0.01 * std::min(pole_distance(r), r));
    const double fd = fk_finite_difference(k.value(), r, h);
    report.max_fd_relative = std::max(report.max_fd_relative, std::fabs(fd - analytic) / std::fabs(analytic));
  }
  report.pass = report.max_margin < 0;
  return report;
}

}  // namespace bessel
