#ifndef BESSEL_RATIONAL_HPP_
#define BESSEL_RATIONAL_HPP_

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace bessel {

/// Exact arbitrary-precision rational (GMP, always canonical).
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal with optional exponent ("5.25",
/// "-1e-3") into an exact rational. Throws std::invalid_argument.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// True when `text` was written as a decimal rather than "p/q" or an integer.
[[nodiscard]] bool is_decimal_literal(std::string_view text);

/// Closest rational with denominator <= max_denominator (continued fraction
/// convergents and semiconvergents).
[[nodiscard]] Rational nearest_rational(const Rational& x, unsigned long max_denominator);

[[nodiscard]] std::string to_string(const Rational& q);
[[nodiscard]] double to_double(const Rational& q);
[[nodiscard]] long double to_long_double(const Rational& q);

/// Exact value of a finite double.
[[nodiscard]] Rational exact_rational(double x);

/// sqrt(q) written as "a*sqrt(b)/c" when q is a non-negative rational;
/// e.g. 48 -> "4*sqrt(3)", 30 -> "sqrt(30)", 9/4 -> "3/2".
[[nodiscard]] std::string sqrt_surd_string(const Rational& q);

template <typename T>
[[nodiscard]] T scalar_cast(const Rational& q);

template <>
[[nodiscard]] inline Rational scalar_cast<Rational>(const Rational& q) { return q; }
template <>
[[nodiscard]] inline double scalar_cast<double>(const Rational& q) { return to_double(q); }
template <>
[[nodiscard]] inline long double scalar_cast<long double>(const Rational& q) { return to_long_double(q); }

template <typename T, std::floating_point S>
[[nodiscard]] T scalar_cast(S x) {
  return static_cast<T>(x);
}

}  // namespace bessel

#endif  // BESSEL_RATIONAL_HPP_
