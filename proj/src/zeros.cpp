#include "bessel/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "bessel/core.hpp"

namespace bessel {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();
constexpr double kEndpointTolerance = 1e-12;
constexpr double kResidualLimit = 1e-10;
constexpr double kOracleTolerance = 1e-13;
constexpr double kOracleMaxStep = 0.05;

struct SignSample {
  double r;
  int sign;
};

// Sign of J_k near r. A value inside its own error bound means a zero sits
// within rounding distance of r; the sample is then nudged right until the
// sign resolves. Nudges stay far below any zero separation.
SignSample sample_sign(Order k, double r) {
  double shift = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double x = r + shift;
    const EvalResult f = eval_j(k, x);
    if (std::fabs(f.value) > f.abs_error_bound) return {x, f.value > 0 ? 1 : -1};
    shift = shift == 0.0 ? 1e-9 * std::max(1.0, r) : shift * 10;
  }
  throw ConvergenceError("cannot resolve the sign of J_k near r = " + std::to_string(r));
}

// Walks (from, to] in cells short enough to hold at most one zero of J_k and
// reports every cell whose endpoint signs differ.
template <typename OnBracket>
void certified_scan(Order k, double from, double to, OnBracket&& on_bracket) {
  const double lower = std::max(from, first_zero_lower_bound(k));
  if (!(lower < to)) return;
  const double step = 0.45 * zero_separation_bound(k, lower);
  SignSample prev = sample_sign(k, lower);
  double a = lower;
  while (a < to) {
    const double b = std::min(a + step, to);
    const SignSample next = sample_sign(k, b);
    if (prev.sign != next.sign) on_bracket(Bracket{prev.r, next.r}, prev.sign);
    prev = next;
    a = b;
  }
}

int count_zeros_below(Order k, double x) {
  int count = 0;
  certified_scan(k, 0.0, x, [&](const Bracket&, int) { ++count; });
  return count;
}

// Safeguarded Newton iteration inside a sign-change bracket.
double refine(Order k, const Bracket& bracket, int sign_lo, std::optional<double> guess) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  double x = (guess && bracket.contains(*guess)) ? *guess : 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const EvalResult f = eval_j(k, x);
    if (f.value == 0.0) return x;
    if ((f.value > 0 ? 1 : -1) == sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    const EvalResult slope = eval_j_derivative(k, x);
    double next = x - f.value / slope.value;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 4 * kDoubleEps * x) return next;
    if (hi - lo <= 4 * kDoubleEps * hi) return 0.5 * (lo + hi);
    x = next;
  }
  throw ConvergenceError("zero refinement did not converge");
}

// Refines, and re-brackets with a halved window when the result lands on a
// bracket endpoint (a sign there may have been mislabelled).
ZeroEntry bracket_and_refine(Order k, int n, Bracket bracket, int sign_lo,
                             std::optional<double> guess = std::nullopt) {
  double root = refine(k, bracket, sign_lo, guess);
  double half = bracket.width() / 2;
  while (root - bracket.lo < kEndpointTolerance || bracket.hi - root < kEndpointTolerance) {
    if (half < 1e-9) throw ConvergenceError("zero is degenerate with its bracket endpoint");
    const SignSample left = sample_sign(k, root - half / 2);
    const SignSample right = sample_sign(k, root + half / 2);
    if (left.sign != right.sign) {
      bracket = {left.r, right.r};
      sign_lo = left.sign;
      root = refine(k, bracket, sign_lo, root);
    }
    half /= 2;
  }
  const double residual = std::fabs(eval_j(k, root).value);
  if (residual > kResidualLimit) {
    throw ConvergenceError("zero residual " + std::to_string(residual) + " exceeds 1e-10");
  }
  return {n, root, bracket, residual};
}

}  // namespace

std::vector<double> ZeroTable::values() const {
  std::vector<double> out;
  out.reserve(zeros_.size());
  for (const auto& z : zeros_) out.push_back(z.value);
  return out;
}

double first_zero_lower_bound(Order k) {
  const double nu = k.value();
  return 2.0 * std::sqrt(nu + 1) * std::pow(nu + 2, 0.25);
}

double zero_separation_bound(Order k, double from) {
  const double nu = k.value();
  const double defect = 0.25 - nu * nu;
  if (defect <= 0) return kPi;
  if (!(from > 0)) throw DomainError("separation bound needs a positive starting radius");
  return kPi / std::sqrt(1 + defect / (from * from));
}

double asymptotic_zero_guess(Order k, int n) {
  if (n < 1) throw DomainError("zero index must be >= 1");
  const double nu = k.value();
  if (nu >= 2 && n <= nu) {
    // j ~ nu - a_n (nu/2)^{1/3} + (3/20) a_n^2 (nu/2)^{-1/3}, a_n the n-th Airy zero
    const double t = 3 * kPi * (4 * n - 1) / 8;
    const double airy = -std::pow(t, 2.0 / 3.0) * (1 + 5.0 / (48 * t * t));
    const double c = std::cbrt(nu / 2);
    return nu - airy * c + 0.15 * airy * airy / c;
  }
  const double beta = (n + nu / 2 - 0.25) * kPi;
  return beta - (4 * nu * nu - 1) / (8 * beta);
}

double nth_zero(Order k, int n) {
  if (n < 1) throw DomainError("zero index must be >= 1");
  const double lower = first_zero_lower_bound(k);
  double guess = asymptotic_zero_guess(k, n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    guess = std::max(guess, lower);
    std::optional<Bracket> best;
    int best_sign = 0;
    for (double half = 1.0; half <= 8.0 && !best; half *= 2) {
      certified_scan(k, guess - half, guess + half, [&](const Bracket& b, int sign_lo) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (!best || std::fabs(mid - guess) < std::fabs(0.5 * (best->lo + best->hi) - guess)) {
          best = b;
          best_sign = sign_lo;
        }
      });
    }
    if (!best) break;
    const ZeroEntry entry = bracket_and_refine(k, n, *best, best_sign, guess);
    const int index = count_zeros_below(k, entry.bracket.lo) + 1;
    if (index == n) return entry.value;
    guess = entry.value + (n - index) * kPi;
  }
  throw ConvergenceError("could not certify a bracket for zero " + std::to_string(n) +
                         " of J_" + std::to_string(k.value()));
}

ZeroTable zeros_up_to(Order k, double r_max) {
  if (!(r_max > 0) || !std::isfinite(r_max)) throw DomainError("r_max must be positive and finite");
  std::vector<ZeroEntry> zeros;
  certified_scan(k, 0.0, r_max, [&](const Bracket& b, int sign_lo) {
    zeros.push_back(bracket_and_refine(k, static_cast<int>(zeros.size()) + 1, b, sign_lo));
  });
  // Consecutive zeros must respect the Sturm separation bound.
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    const double gap = zeros[i].value - zeros[i - 1].value;
    if (!(gap > 0.999 * zero_separation_bound(k, zeros[i - 1].value))) {
      throw ConvergenceError("zero table violates the separation bound");
    }
  }
  return ZeroTable(k, std::move(zeros));
}

ZeroTable first_zeros(Order k, int count) {
  if (count < 0) throw DomainError("zero count must be non-negative");
  if (count == 0) return ZeroTable(k, {});
  double r_max = asymptotic_zero_guess(k, count) + kPi;
  for (int attempt = 0; attempt < 32; ++attempt) {
    ZeroTable table = zeros_up_to(k, r_max);
    if (table.size() >= static_cast<std::size_t>(count)) {
      std::vector<ZeroEntry> head(table.entries().begin(), table.entries().begin() + count);
      return ZeroTable(k, std::move(head));
    }
    r_max += kPi * static_cast<double>(count - static_cast<int>(table.size()) + 1);
  }
  throw ConvergenceError("could not enumerate the requested zeros");
}

ZeroTable zeros_from_neighbor(Order k, const ZeroTable& next_order) {
  if (std::fabs(next_order.order().value() - (k.value() + 1)) > 1e-12) {
    throw DomainError("neighbour table must hold the zeros of J_{k+1}");
  }
  std::vector<ZeroEntry> zeros;
  double lo = 0.0;
  for (const ZeroEntry& upper : next_order.entries()) {
    const SignSample left = sample_sign(k, lo == 0.0 ? first_zero_lower_bound(k) : lo);
    const SignSample right = sample_sign(k, upper.value);
    if (left.sign == right.sign) {
      throw ConvergenceError("neighbour interlacing bracket shows no sign change");
    }
    zeros.push_back(bracket_and_refine(k, static_cast<int>(zeros.size()) + 1,
                                       Bracket{left.r, right.r}, left.sign));
    lo = upper.value;
  }
  return ZeroTable(k, std::move(zeros));
}

OracleResult oracle_zeros(Order k, double r_max, double step) {
  if (!(step > 0) || !(r_max > 0)) throw DomainError("oracle needs positive r_max and step");
  OracleResult result;
  if (step > kOracleMaxStep) {
    result.warnings.push_back("step " + std::to_string(step) +
                              " is coarser than the 0.05 verification limit");
  }
  auto value_at = [&](double r) { return eval_j(k, r).value; };
  auto bisect = [&](double lo, double hi, double f_lo) {
    while (hi - lo > kOracleTolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double f_mid = value_at(mid);
      if (f_mid == 0.0) return mid;
      if ((f_mid > 0) == (f_lo > 0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  const auto cells = static_cast<long>(std::floor(r_max / step));
  double r_prev = step;
  double f_prev = value_at(r_prev);
  if (f_prev == 0.0) result.zeros.push_back(r_prev);
  for (long i = 2; i <= cells + 1; ++i) {
    const double r = (i <= cells) ? static_cast<double>(i) * step : r_max;
    if (r <= r_prev) break;
    const double f = value_at(r);
    if (f == 0.0) {
      result.zeros.push_back(r);
    } else if (f_prev != 0.0 && (f > 0) != (f_prev > 0)) {
      result.zeros.push_back(bisect(r_prev, r, f_prev));
    }
    r_prev = r;
    f_prev = f;
  }
  for (std::size_t i = 1; i < result.zeros.size(); ++i) {
    if (result.zeros[i] - result.zeros[i - 1] < 2 * step) {
      result.warnings.push_back("two sign changes within one step near r = " +
                                std::to_string(result.zeros[i]));
    }
  }
  return result;
}

}  // namespace bessel
