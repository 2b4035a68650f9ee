#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>

#include "bessel/gcurve.hpp"
#include "bessel/zeros.hpp"
#include "../common/closed_forms.hpp"

using namespace bessel;
using namespace bessel::testing;

TEST_SUITE("g-curves") {

TEST_CASE("G_{k,2..7} equal the closed forms exactly") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational k = random_rational(rng, -1, 10, 30);
    const Rational r = random_rational(rng, 0, 20, 30);
    for (int m = 2; m <= 7; ++m) {
      const RationalCurve curve = g_curve(k, m);
      CAPTURE(m);
      CHECK(curve.evaluate(r) == closed_form_g(m, k, r));
    }
  }
}

TEST_CASE("k = 2 examples") {
  const RationalCurve g3 = g_curve(q(2), 3);
  CHECK(g3.formula() == "6 - r^2/8");
  CHECK(g3.poles.empty());
  REQUIRE(g3.roots.size() == 1);
  CHECK(g3.roots[0].exact_form() == "4*sqrt(3)");
  CHECK(g3.roots[0].r == doctest::Approx(6.928203230275509).epsilon(1e-15));

  const RationalCurve g4 = g_curve(q(2), 4);
  REQUIRE(g4.poles.size() == 1);
  CHECK(g4.poles[0].exact_form() == "4*sqrt(5)");
  CHECK(g4.poles[0].r == doctest::Approx(8.94427190999916).epsilon(1e-15));
  REQUIRE(g4.roots.size() == 1);
  CHECK(g4.roots[0].exact_form() == "sqrt(30)");
  CHECK(g4.roots[0].r == doctest::Approx(5.477225575051661).epsilon(1e-15));
  CHECK(g4.at_infinity.kind == InfinityKind::constant);
  CHECK(*g4.at_infinity.limit == q(16));

  const RationalCurve g2 = g_curve(q(0), 2);
  CHECK(g2.formula() == "2");
  CHECK(g2.poles.empty());
  CHECK(g2.roots.empty());
  CHECK(*g2.at_infinity.limit == q(2));
}

TEST_CASE("thresholds are the root of G_{k,3}, root of G_{k,4} and pole of G_{k,4}") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational k = random_rational(rng, -1, 10, 20);
    const RationalCurve g3 = g_curve(k, 3);
    const RationalCurve g4 = g_curve(k, 4);
    REQUIRE(g3.roots.size() == 1);
    REQUIRE(g4.roots.size() == 1);
    REQUIRE(g4.poles.size() == 1);
    CHECK(*g3.roots[0].exact_s == 4 * (k + 1) * (k + 2));
    CHECK(*g4.roots[0].exact_s == 2 * (k + 1) * (k + 3));
    CHECK(*g4.poles[0].exact_s == 4 * (k + 2) * (k + 3));
  }
}

TEST_CASE("behaviour at infinity follows the parity of ell") {
  for (const Rational& k : {q(0), q(1, 2), q(2), q(-1, 3)}) {
    for (int m = 2; m <= 15; ++m) {
      const RationalCurve curve = g_curve(k, m);
      const int ell = m - 1;
      CAPTURE(m);
      CHECK(static_cast<int>(curve.poles.size()) <= (ell - 1) / 2);
      CHECK_FALSE(curve.repeated_root);
      const Rational a = *curve.evaluate(q(1000));
      const Rational b = *curve.evaluate(q(10000));
      if (ell % 2 == 0) {
        CHECK(curve.at_infinity.kind == InfinityKind::diverges);
        CHECK(abs(b) > 50 * abs(a));
        CHECK((b > 0 ? 1 : -1) == curve.at_infinity.sign);
      } else {
        REQUIRE(curve.at_infinity.kind == InfinityKind::constant);
        const Rational c = *curve.at_infinity.limit;
        // G - C decays like 1/r^2: a factor near 100 between the two radii.
        CHECK(abs(b - c) * 50 <= abs(a - c));
      }
    }
  }
}

TEST_CASE("intersections with F_k") {
  const RegionIntersection m2 = intersect_with_fk(Order(2), g_curve(q(2), 2), 1);
  REQUIRE(m2.status == IntersectionStatus::found);
  CHECK(m2.hit->r_star == doctest::Approx(7.588342434503804).epsilon(1e-12));
  CHECK(m2.hit->zero.order == 4.0);
  CHECK(m2.hit->zero.n == 1);
  CHECK(m2.hit->branch == 2);

  const RegionIntersection m3 = intersect_with_fk(Order(2), g_curve(q(2), 3), 1);
  REQUIRE(m3.status == IntersectionStatus::found);
  CHECK(m3.hit->r_star == doctest::Approx(8.771483815959954).epsilon(1e-12));

  const RegionIntersection m4 = intersect_with_fk(Order(2), g_curve(q(2), 4), 1);
  CHECK(m4.status == IntersectionStatus::none);
  CHECK_FALSE(m4.hit.has_value());

  CHECK_THROWS_AS((void)intersect_with_fk(Order(3), g_curve(q(2), 4), 1), DomainError);
  CHECK_THROWS_AS((void)g_curve(q(2), 1), DomainError);
  CHECK_THROWS_AS((void)g_curve(q(-1), 3), DomainError);
}

TEST_CASE("every intersection is a zero of J_{k+m} and every zero is hit") {
  for (const Rational& k : {q(0), q(1, 2), q(2), q(5)}) {
    const Order order(to_double(k));
    const double ceiling = first_zeros(order.shifted(1), 11)[11];
    for (int m = 2; m <= 7; ++m) {
      const auto regions = intersect_regions(order, g_curve(k, m), 10);
      const ZeroTable zeros = zeros_up_to(order.shifted(m), ceiling);
      std::vector<double> hits;
      for (const auto& region : regions) {
        CHECK(region.status != IntersectionStatus::indeterminate);
        if (region.hit) {
          CHECK(region.hit->label_certain);
          CHECK(std::fabs(region.hit->r_star - zeros[region.hit->zero.n]) < 1e-6);
          hits.push_back(region.hit->r_star);
        }
      }
      CAPTURE(m);
      REQUIRE(hits.size() == zeros.size());
      for (std::size_t i = 0; i < hits.size(); ++i) CHECK(std::fabs(hits[i] - zeros.entries()[i].value) < 1e-6);
    }
  }
}

TEST_CASE("curve sampling leaves pole cells blank") {
  const std::vector<RationalCurve> curves{g_curve(q(2), 2), g_curve(q(2), 3), g_curve(q(2), 4)};
  const auto rows = sample_curves(Order(2), curves, 20.0, 2000);
  REQUIRE(rows.size() == 2000);
  CHECK(rows.back().r == 20.0);
  const double step = 0.01;
  const ZeroTable poles = zeros_up_to(Order(3), 20.0);
  for (const auto& row : rows) {
    bool near_fk_pole = false;
    for (const auto& p : poles.entries()) near_fk_pole = near_fk_pole || std::fabs(row.r - p.value) < step / 2;
    CHECK(row.fk.has_value() == !near_fk_pole);
    CHECK(row.g[0].has_value());
    CHECK(row.g[2].has_value() == (std::fabs(row.r - 8.94427190999916) >= step / 2));
  }
}

TEST_CASE("general formula rendering") {
  CHECK(g_curve(q(2), 4).formula() == "6 - (10*r^2)/(80 - r^2)");
  CHECK(g_curve(q(1, 2), 3).formula() == "3 - r^2/5");
}

}  // TEST_SUITE
