#ifndef BESSEL_ROOT_ISOLATION_HPP_
#define BESSEL_ROOT_ISOLATION_HPP_

#include <optional>
#include <vector>

#include "bessel/polynomial.hpp"
#include "bessel/rational.hpp"

namespace bessel {

/// One positive real root of a rational polynomial, enclosed in [lo, hi].
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;  // set when the root is itself rational
};

struct RootIsolation {
  std::vector<IsolatedRoot> roots;  // ascending, distinct
  bool repeated = false;            // some root has multiplicity > 1
};

/// Distinct positive real roots of p, each refined to an interval narrower
/// than `width`. Counting uses the Sturm sequence of the square-free part, so
/// every sign test is exact.
[[nodiscard]] RootIsolation isolate_positive_roots(const Polynomial<Rational>& p, const Rational& width);

/// Number of sign variations of the Sturm sequence at x (zeros skipped).
[[nodiscard]] int sturm_variations(const std::vector<Polynomial<Rational>>& sequence, const Rational& x);

[[nodiscard]] std::vector<Polynomial<Rational>> sturm_sequence(const Polynomial<Rational>& p);

}  // namespace bessel

#endif  // BESSEL_ROOT_ISOLATION_HPP_
