#include "bessel/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace bessel {
namespace {

using real = long double;

constexpr real kEps = std::numeric_limits<real>::epsilon();
constexpr real kPi = std::numbers::pi_v<long double>;
constexpr double kDoubleUlp = std::numeric_limits<double>::epsilon();

// Above this the ascending series loses too many digits to cancellation.
constexpr real kSeriesLimit = 12.0L;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(real x) {
    const real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] real value() const { return sum_ + carry_; }

 private:
  real sum_ = 0;
  real carry_ = 0;
};

// (x/2)^nu / Gamma(nu + 1)
real series_prefactor(real nu, real x) {
  if (nu < 100) return std::pow(x / 2, nu) / std::tgamma(nu + 1);
  return std::exp(nu * std::log(x / 2) - std::lgamma(nu + 1));
}

real power_series(real nu, real x, real& abs_error) {
  const real q = -x * x / 4;
  real term = 1;
  real abs_sum = 1;
  CompensatedSum sum;
  sum.add(1);
  for (int m = 1; m < 2000; ++m) {
    term *= q / (m * (nu + m));
    sum.add(term);
    abs_sum += std::fabs(term);
    const bool decreasing = m * (nu + m) > -q;
    if (decreasing && std::fabs(term) < kEps * 1e-3L * abs_sum) break;
  }
  const real pre = series_prefactor(nu, x);
  const real value = pre * sum.value();
  abs_error = 8 * kEps * (std::fabs(pre) * abs_sum + std::fabs(value));
  return value;
}

// Miller's algorithm on the lattice mu + n with mu = nu - floor(nu) in [0, 1).
// The normalisation divides the Neumann sum by Gamma(mu + 1):
//   (x/2)^mu / Gamma(mu+1) = y_0 + sum_{m>=1} (mu + 2m) (mu+1)_{m-1} / m! y_{2m}
real backward_recurrence(real nu, real x, real& abs_error) {
  const real base = std::floor(nu);
  const real mu = nu - base;
  const int target = static_cast<int>(base);  // -1 when nu is in (-1, 0)
  const real extent = std::max<real>(x, std::max(target, 1));
  const int top = static_cast<int>(extent + 30 + 10 * std::cbrt(extent));

  std::vector<real> y(static_cast<std::size_t>(top) + 2, 0.0L);
  y[top] = 1e-30L;
  constexpr real kRescaleAbove = 1e1000L;
  for (int n = top; n >= 1; --n) {
    y[n - 1] = (2 * (mu + n) / x) * y[n] - y[n + 1];
    if (std::fabs(y[n - 1]) > kRescaleAbove) {
      for (int i = n - 1; i <= top; ++i) y[i] /= kRescaleAbove;
    }
  }

  CompensatedSum norm;
  norm.add(y[0]);
  real weight = 1;  // (mu+1)_{m-1} / m!
  for (int m = 1; 2 * m <= top; ++m) {
    norm.add((mu + 2 * m) * weight * y[2 * m]);
    weight *= (mu + m) / (m + 1);
  }
  const real scale = series_prefactor(mu, x) / norm.value();

  real value;
  if (target >= 0) {
    value = y[target] * scale;
  } else {
    value = ((2 * mu / x) * y[0] - y[1]) * scale;
  }
  const real envelope = nu < x ? std::sqrt(2 / (kPi * x)) : std::fabs(value);
  abs_error = 16 * top * kEps * std::max(std::fabs(value), envelope);
  return value;
}

// Hankel's expansion J = sqrt(2/(pi x)) (P cos chi - Q sin chi).
real hankel_asymptotic(real nu, real x, real& abs_error) {
  const real mu4 = 4 * nu * nu;
  CompensatedSum p;
  CompensatedSum q;
  p.add(1);
  real term = 1;
  real last = 1;
  for (int j = 1; j < 200; ++j) {
    const real odd = 2 * j - 1;
    const real next = term * (mu4 - odd * odd) / (j * 8 * x);
    if (std::fabs(next) > std::fabs(term)) break;  // asymptotic tail starts growing
    term = next;
    last = std::fabs(term);
    // term_j carries the sign pattern +, +, -, -, +, + ... over j = 0, 1, 2, ...
    const real signed_term = ((j / 2) % 2 == 0) ? term : -term;
    if (j % 2 == 0) {
      p.add(signed_term);
    } else {
      q.add(signed_term);
    }
    if (term == 0 || std::fabs(term) < kEps * 1e-3L) break;
  }
  const real chi = x - (nu / 2 + 0.25L) * kPi;
  const real amp = std::sqrt(2 / (kPi * x));
  const real value = amp * (p.value() * std::cos(chi) - q.value() * std::sin(chi));
  abs_error = amp * (last + 8 * kEps * (1 + std::fabs(chi)));
  return value;
}

void require_valid_radius(double r) {
  if (!std::isfinite(r) || r < 0) {
    throw DomainError("radius must be finite and non-negative");
  }
}

EvalResult to_result(real value, real abs_error) {
  const double v = static_cast<double>(value);
  return {v, static_cast<double>(abs_error) + kDoubleUlp * std::fabs(v)};
}

}  // namespace

namespace detail {

long double eval_j_ld(long double k, long double r, long double* abs_error) {
  real err = 0;
  real value;
  if (r <= kSeriesLimit) {
    value = power_series(k, r, err);
  } else if (r > 50 + k * k) {
    value = hankel_asymptotic(k, r, err);
  } else {
    value = backward_recurrence(k, r, err);
  }
  if (abs_error) *abs_error = err;
  return value;
}

long double ratio_continued_fraction(long double k, long double r) {
  // f = 1 / (b_1 - 1 / (b_2 - 1 / (b_3 - ...))),  b_j = 2(k + j) / r
  constexpr real kTiny = 1e-4000L;
  real f = kTiny;
  real c = f;
  real d = 0;
  for (int j = 1; j < 1000000; ++j) {
    const real a = (j == 1) ? 1 : -1;
    const real b = 2 * (k + j) / r;
    d = b + a * d;
    if (d == 0) d = kTiny;
    c = b + a / c;
    if (c == 0) c = kTiny;
    d = 1 / d;
    const real delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1) < kEps && j > r) return f;
  }
  throw ConvergenceError("ratio continued fraction did not converge");
}

bool near_zero(Order k, double r, double factor) {
  real err = 0;
  const real value = eval_j_ld(k.value(), r, &err);
  const real next = eval_j_ld(k.value() + 1, r);
  const real slope = std::fabs(k.value() / r * value - next);
  const real bound = err + kDoubleUlp * std::fabs(value) + slope * 4 * kDoubleUlp * r;
  return std::fabs(value) <= factor * bound;
}

}  // namespace detail

EvalResult eval_j(Order k, double r) {
  require_valid_radius(r);
  const double nu = k.value();
  if (r == 0) {
    if (nu == 0) return {1.0, 0.0};
    if (nu > 0) return {0.0, 0.0};
    throw DomainError("J_k(0) is unbounded for k < 0");
  }
  real err = 0;
  const real value = detail::eval_j_ld(nu, r, &err);
  return to_result(value, err);
}

EvalResult eval_j_derivative(Order k, double r) {
  require_valid_radius(r);
  if (r == 0) throw DomainError("derivative requires r > 0");
  const real nu = k.value();
  real err_next = 0;
  const real next = detail::eval_j_ld(nu + 1, r, &err_next);
  if (nu - 1 > -1) {
    real err_prev = 0;
    const real prev = detail::eval_j_ld(nu - 1, r, &err_prev);
    return to_result((prev - next) / 2, (err_prev + err_next) / 2);
  }
  real err = 0;
  const real value = detail::eval_j_ld(nu, r, &err);
  return to_result((nu / r) * value - next, std::fabs(nu / r) * err + err_next);
}

double eval_ratio(Order k, double r) {
  require_valid_radius(r);
  if (r == 0) throw DomainError("ratio requires r > 0");
  if (detail::near_zero(k, r, 1.0)) {
    throw PoleError("J_k(r) vanishes to working accuracy; ratio undefined");
  }
  return static_cast<double>(detail::ratio_continued_fraction(k.value(), r));
}

}  // namespace bessel
