#ifndef BESSEL_GCURVE_HPP_
#define BESSEL_GCURVE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bessel/fk.hpp"
#include "bessel/order.hpp"
#include "bessel/polynomial.hpp"
#include "bessel/rational.hpp"

namespace bessel {

/// A positive real root r = sqrt(s) of a polynomial in s = r^2.
struct CurvePoint {
  double r = 0.0;
  Rational s_lo;
  Rational s_hi;
  std::optional<Rational> exact_s;  // s itself, when rational

  /// "4*sqrt(3)" when s is known exactly, otherwise the decimal value.
  [[nodiscard]] std::string exact_form() const;
};

enum class InfinityKind { diverges, constant };

struct InfinityBehavior {
  InfinityKind kind = InfinityKind::constant;
  std::optional<Rational> limit;  // C_{k,ell} for constant behaviour
  int sign = 0;                   // direction of divergence, +1 or -1
};

/// G_{k,m}(r) = 2(k+1) - r^2 Q(r^2) / P(r^2) with (P, Q) the y-linear form of
/// a_{m-1}. Intersections of G_{k,m} with F_k sit at the zeros of J_{k+m}.
struct RationalCurve {
  Rational k;
  int m = 0;
  Polynomial<Rational> P;
  Polynomial<Rational> Q;
  std::vector<CurvePoint> poles;
  std::vector<CurvePoint> roots;
  InfinityBehavior at_infinity;
  bool repeated_root = false;      // flagged, not resolved
  bool removable_factor = false;   // P and s Q share a factor

  [[nodiscard]] int ell() const noexcept { return m - 1; }

  /// Exact value; nullopt on a pole.
  [[nodiscard]] std::optional<Rational> evaluate(const Rational& r) const;
  /// Extended-precision value; nullopt where P(r^2) is exactly zero.
  [[nodiscard]] std::optional<double> evaluate(double r) const;

  /// Human-readable closed form, e.g. "6 - r^2/8".
  [[nodiscard]] std::string formula() const;
};

[[nodiscard]] RationalCurve g_curve(const Rational& k, int m);

struct PolesAndRoots {
  std::vector<CurvePoint> poles;
  std::vector<CurvePoint> roots;
  bool repeated_root = false;
};

/// Positive poles (roots of P) and roots (of 2(k+1) P(s) - s Q(s)), isolated
/// to 1e-24 in s by exact Sturm bisection.
[[nodiscard]] PolesAndRoots poles_and_roots(const RationalCurve& curve);

struct ZeroLabel {
  double order = 0.0;
  int n = 0;
};

/// F_k(r_star) = G_{k,m}(r_star); r_star = j_{k+m,n'}.
struct Intersection {
  double r_star = 0.0;
  int region = 0;       // r_star in (j_{k+1,region}, j_{k+1,region+1}), j_{k+1,0} = 0
  int branch = 0;       // the same interval as a branch of F_k: region + 1
  ZeroLabel zero;       // (k + m, n')
  double gap = 0.0;     // |F_k - G| at r_star
  bool label_certain = true;  // false once an earlier region was indeterminate
};

enum class IntersectionStatus { found, none, indeterminate };

struct RegionIntersection {
  int region = 0;
  IntersectionStatus status = IntersectionStatus::none;
  std::optional<Intersection> hit;
};

/// Intersection of F_k with the curve inside region n, i.e. on
/// (j_{k+1,n}, j_{k+1,n+1}); region 0 is the first branch (0, j_{k+1,1}).
/// The zero index n' is obtained by counting intersections in earlier regions.
/// A curve pole within 1e-6 of a region endpoint makes the region indeterminate.
[[nodiscard]] RegionIntersection intersect_with_fk(Order k, const RationalCurve& curve, int region);

/// Regions 0..region_max in one pass.
[[nodiscard]] std::vector<RegionIntersection> intersect_regions(Order k, const RationalCurve& curve, int region_max);

/// One row of curve samples; an empty cell marks a pole within half a step.
struct CurveSample {
  double r = 0.0;
  std::optional<double> fk;
  std::vector<std::optional<double>> g;
};

/// F_k and each curve on r_i = r_max i / samples, i = 1..samples.
[[nodiscard]] std::vector<CurveSample> sample_curves(Order k, const std::vector<RationalCurve>& curves,
                                                     double r_max, int samples);

}  // namespace bessel

#endif  // BESSEL_GCURVE_HPP_
