#include "bessel/rational.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>
#include <vector>

namespace bessel {
namespace {

const std::regex& decimal_pattern() {
  static const std::regex pattern(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  return pattern;
}

const std::regex& fraction_pattern() {
  static const std::regex pattern(R"(^([+-]?\d+)(?:/(\d+))?$)");
  return pattern;
}

mpz_class pow10(long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

bool is_decimal_literal(std::string_view text) {
  const std::string s(text);
  return !std::regex_match(s, fraction_pattern()) && std::regex_match(s, decimal_pattern());
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, fraction_pattern())) {
    const mpz_class num(match[1].str(), 10);
    const mpz_class den(match[2].matched ? match[2].str() : std::string("1"), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (!std::regex_match(s, match, decimal_pattern()) ||
      (match[2].length() == 0 && match[3].length() == 0)) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  const std::string digits = match[2].str() + match[3].str();
  long exponent = match[4].matched ? std::stol(match[4].str()) : 0;
  exponent -= static_cast<long>(match[3].length());
  Rational q(mpz_class(digits.empty() ? std::string("0") : digits, 10));
  if (exponent >= 0) {
    q *= pow10(exponent);
  } else {
    q /= pow10(-exponent);
  }
  q.canonicalize();
  if (match[1].str() == "-") q = -q;
  return q;
}

Rational nearest_rational(const Rational& x, unsigned long max_denominator) {
  if (max_denominator == 0) throw std::invalid_argument("max_denominator must be positive");
  if (x.get_den() <= max_denominator) return x;
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class h = a * h_prev + h_prev2;
    const mpz_class k = a * k_prev + k_prev2;
    if (k > max_denominator) {
      // Largest semiconvergent that still fits.
      mpz_class t = (mpz_class(max_denominator) - k_prev2) / k_prev;
      const Rational semi(t * h_prev + h_prev2, t * k_prev + k_prev2);
      const Rational conv(h_prev, k_prev);
      const Rational d_semi = abs(Rational(x - semi));
      const Rational d_conv = abs(Rational(x - conv));
      Rational best = d_semi < d_conv ? semi : conv;
      best.canonicalize();
      return best;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const mpz_class rem = num - a * den;
    num = den;
    den = rem;
  }
  return x;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

long double to_long_double(const Rational& q) {
  // Two-part split keeps ~106 bits before the final rounding.
  mpf_class value(q, 256);
  const double hi = value.get_d();
  mpf_class rest(value - hi, 256);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  return Rational(x);
}

std::string sqrt_surd_string(const Rational& q) {
  if (q < 0) throw std::invalid_argument("square root of a negative rational");
  if (q == 0) return "0";
  // sqrt(p/d) = sqrt(p d) / d; pull square factors out of p d.
  mpz_class radicand = q.get_num() * q.get_den();
  mpz_class outside = 1;
  for (unsigned long f = 2; f * f <= 1'000'000 && mpz_class(f * f) <= radicand; ++f) {
    const mpz_class square = f * f;
    while (mpz_divisible_p(radicand.get_mpz_t(), square.get_mpz_t())) {
      radicand /= square;
      outside *= f;
    }
  }
  mpz_class den = q.get_den();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), outside.get_mpz_t(), den.get_mpz_t());
  outside /= g;
  den /= g;
  std::string out;
  if (radicand == 1) {
    out = outside.get_str();
  } else if (outside == 1) {
    out = "sqrt(" + radicand.get_str() + ")";
  } else {
    out = outside.get_str() + "*sqrt(" + radicand.get_str() + ")";
  }
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace bessel
