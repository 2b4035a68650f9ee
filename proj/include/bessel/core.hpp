#ifndef BESSEL_CORE_HPP_
#define BESSEL_CORE_HPP_

#include "bessel/order.hpp"

namespace bessel {

/// A function value together with an estimate of its absolute error.
///
/// The bound is a truncation-plus-rounding model, not a rigorous enclosure.
struct EvalResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

/// J_k(r) for k > -1 and finite r >= 0.
///
/// Three regimes are used: the ascending power series for r <= 12, Miller's
/// backward recurrence normalised by the Neumann sum
/// (r/2)^mu = sum_m (mu + 2m) Gamma(mu + m) / m! J_{mu+2m}(r) for moderate r,
/// and the Hankel asymptotic expansion once r > 50 + k^2. All arithmetic is
/// carried in long double.
///
/// Throws DomainError for r < 0, non-finite r, or r = 0 with k < 0 (where
/// J_k is unbounded).
[[nodiscard]] EvalResult eval_j(Order k, double r);

/// dJ_k/dr, computed as (J_{k-1} - J_{k+1}) / 2. When k - 1 <= -1 the
/// three-term identity J_{k-1} = (2k/r) J_k - J_{k+1} is used instead.
[[nodiscard]] EvalResult eval_j_derivative(Order k, double r);

/// J_{k+1}(r) / J_k(r) via the continued fraction
///   r / (2(k+1) - r^2 / (2(k+2) - r^2 / (2(k+3) - ...)))
/// evaluated with the modified Lentz algorithm. Throws PoleError when
/// |J_k(r)| does not exceed its own error bound.
[[nodiscard]] double eval_ratio(Order k, double r);

namespace detail {

/// The continued fraction behind eval_ratio without the pole check.
[[nodiscard]] long double ratio_continued_fraction(long double k, long double r);

/// True when |J_k(r)| <= factor * (error bound + |J_k'(r)| * 4 ulp(r)): r is
/// indistinguishable from a zero of J_k at double resolution.
[[nodiscard]] bool near_zero(Order k, double r, double factor);

/// Raw evaluation in extended precision; `k > -1`, `r > 0`.
[[nodiscard]] long double eval_j_ld(long double k, long double r, long double* abs_error = nullptr);

}  // namespace detail

}  // namespace bessel

#endif  // BESSEL_CORE_HPP_
