#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bessel/rational.hpp"

using namespace bessel;

namespace {

Rational q(long num, long den = 1) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("parsing") {
  CHECK(parse_rational("1/2") == q(1, 2));
  CHECK(parse_rational("-2/4") == q(-1, 2));
  CHECK(parse_rational("7") == q(7));
  CHECK(parse_rational("5.25") == q(21, 4));
  CHECK(parse_rational("0.3333") == q(3333, 10000));
  CHECK(parse_rational("012/4") == q(3));
  CHECK(parse_rational("-0.5") == q(-1, 2));
  CHECK(parse_rational("+.5") == q(1, 2));
  CHECK(parse_rational("1e-3") == q(1, 1000));
  CHECK(parse_rational("2.5E2") == q(250));
  CHECK_THROWS((void)parse_rational("1/0"));
  CHECK_THROWS((void)parse_rational("abc"));
  CHECK_THROWS((void)parse_rational(""));
  CHECK_THROWS((void)parse_rational("."));
}

TEST_CASE("decimal literal detection") {
  CHECK(is_decimal_literal("0.5"));
  CHECK(is_decimal_literal("1e3"));
  CHECK_FALSE(is_decimal_literal("1/2"));
  CHECK_FALSE(is_decimal_literal("3"));
}

TEST_CASE("nearest rational with bounded denominator") {
  const Rational pi = exact_rational(std::numbers::pi);
  CHECK(nearest_rational(pi, 1000) == q(355, 113));
  CHECK(nearest_rational(pi, 7) == q(22, 7));
  CHECK(nearest_rational(q(1, 3), 1000000) == q(1, 3));
  CHECK(nearest_rational(parse_rational("0.333333333"), 1000000) == q(1, 3));
  CHECK(nearest_rational(q(-7, 3), 2) == q(-5, 2));
}

TEST_CASE("conversions") {
  CHECK(to_double(q(1, 3)) == 1.0 / 3.0);
  CHECK(to_long_double(q(1, 3)) == 1.0L / 3.0L);
  CHECK(exact_rational(0.375) == q(3, 8));
  CHECK(to_string(q(-6, 4)) == "-3/2");
  CHECK(scalar_cast<double>(q(5, 2)) == 2.5);
}

TEST_CASE("surd strings") {
  CHECK(sqrt_surd_string(q(48)) == "4*sqrt(3)");
  CHECK(sqrt_surd_string(q(80)) == "4*sqrt(5)");
  CHECK(sqrt_surd_string(q(30)) == "sqrt(30)");
  CHECK(sqrt_surd_string(q(9, 4)) == "3/2");
  CHECK(sqrt_surd_string(q(0)) == "0");
}

}  // TEST_SUITE
