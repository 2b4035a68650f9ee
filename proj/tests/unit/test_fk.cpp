#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bessel/fk.hpp"
#include "bessel/zeros.hpp"

using namespace bessel;

TEST_SUITE("fk-branches") {

TEST_CASE("F_{-1/2}(r) = r cot r") {
  for (double r : {0.1, 0.9, 2.0, 3.0, 4.4, 7.1, 11.0, 30.2}) {
    CHECK(eval_fk(Order(-0.5), r).value() == doctest::Approx(r / std::tan(r)).epsilon(1e-12));
  }
}

TEST_CASE("F_k tends to 2(k+1) at the origin") {
  for (double k : {-0.5, 0.0, 2.0, 10.0}) {
    CHECK(eval_fk(Order(k), 1e-6).value() == doctest::Approx(2 * (k + 1)).epsilon(1e-10));
  }
}

TEST_CASE("roots at j_{k,n}, poles at j_{k+1,n}") {
  for (double k : {0.0, 2.0, 5.5}) {
    const ZeroTable roots = first_zeros(Order(k), 6);
    const ZeroTable poles = first_zeros(Order(k + 1), 6);
    for (int n = 1; n <= 6; ++n) {
      CHECK(std::fabs(eval_fk(Order(k), roots[n]).value()) < 1e-12);
      const FkValue at_pole = eval_fk(Order(k), poles[n]);
      CHECK(at_pole.is_pole());
      CHECK_THROWS_AS((void)at_pole.value(), PoleError);
      CHECK(std::fabs(eval_fk(Order(k), poles[n] * (1 - 1e-6)).value()) > 1e4);
    }
  }
}

TEST_CASE("branch structure for k = 2") {
  const Branch first = branch(Order(2), 1);
  CHECK(first.domain.lo == 0.0);
  CHECK(first.domain.hi == doctest::Approx(6.380161895923983).epsilon(1e-13));
  CHECK(first.root == doctest::Approx(5.135622301840683).epsilon(1e-13));
  REQUIRE(first.limit_at_origin.has_value());
  CHECK(*first.limit_at_origin == 6.0);

  const Branch second = branch(Order(2), 2);
  CHECK(second.domain.lo == doctest::Approx(6.380161895923983).epsilon(1e-13));
  CHECK(second.domain.hi == doctest::Approx(9.761023129981670).epsilon(1e-13));
  CHECK(second.root == doctest::Approx(8.417244140399865).epsilon(1e-13));
  CHECK_FALSE(second.limit_at_origin.has_value());
  CHECK_THROWS_AS((void)branch(Order(2), 0), DomainError);
}

TEST_CASE("each branch is strictly decreasing and crosses zero once") {
  for (double k : {-0.5, 0.0, 2.0, 7.0}) {
    for (int n = 1; n <= 5; ++n) {
      const Interval d = branch_domain(Order(k), n);
      const double lo = d.lo + 1e-3;
      const double hi = d.hi - 1e-3;
      double prev = eval_fk(Order(k), lo).value();
      int crossings = 0;
      for (int i = 1; i <= 400; ++i) {
        const double v = eval_fk(Order(k), lo + (hi - lo) * i / 400).value();
        CHECK(v < prev);
        if ((v < 0) != (prev < 0)) ++crossings;
        prev = v;
      }
      CHECK(crossings == 1);
    }
  }
}

TEST_CASE("first branch stays below 2(k+1)") {
  for (double k : {0.0, 1.0, 4.0}) {
    const Interval d = branch_domain(Order(k), 1);
    for (int i = 1; i < 200; ++i) {
      const double r = d.hi * i / 200;
      CHECK(eval_fk(Order(k), r).value() < 2 * (k + 1));
    }
  }
}

TEST_CASE("decreasing bound F_k' < -r/(k+2)") {
  for (double k : {-0.5, 0.0, 2.0, 10.0}) {
    for (int n = 1; n <= 3; ++n) {
      const Interval d = branch_domain(Order(k), n);
      const Interval inner{std::max(d.lo, 0.0) + 1e-2, d.hi - 1e-2};
      const DecreasingBoundReport report = check_decreasing_bound(Order(k), inner, 500);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(report.pass);
      CHECK(report.max_margin < 0);
      CHECK(report.max_fd_relative < 1e-6);
    }
  }
  CHECK_THROWS_AS((void)check_decreasing_bound(Order(0), Interval{1.0, 4.0}, 10), DomainError);
}

TEST_CASE("analytic derivative matches a difference quotient") {
  const double r = 3.3;
  const double h = 1e-5;
  const double fd = (eval_fk(Order(1.5), r + h).value() - eval_fk(Order(1.5), r - h).value()) / (2 * h);
  CHECK(fk_derivative(Order(1.5), r) == doctest::Approx(fd).epsilon(1e-7));
  CHECK(fk_derivative_margin(Order(1.5), r) ==
        doctest::Approx(fk_derivative(Order(1.5), r) + r / 3.5).epsilon(1e-10));
}

}  // TEST_SUITE
