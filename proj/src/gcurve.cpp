#include "bessel/gcurve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bessel/recurrence.hpp"
#include "bessel/root_isolation.hpp"
#include "bessel/zeros.hpp"

namespace bessel {
namespace {

constexpr double kIndeterminateDistance = 1e-6;
constexpr double kMaxIntersectionGap = 1e-6;

const Rational& isolation_width() {
  static const Rational width(mpz_class(1), mpz_class("1000000000000000000000000"));
  return width;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<CurvePoint> to_points(const RootIsolation& iso) {
  std::vector<CurvePoint> out;
  for (const auto& root : iso.roots) {
    CurvePoint p;
    p.s_lo = root.lo;
    p.s_hi = root.hi;
    p.exact_s = root.exact;
    const long double s = to_long_double(root.exact ? *root.exact : Rational((root.lo + root.hi) / 2));
    p.r = static_cast<double>(std::sqrt(s));
    out.push_back(std::move(p));
  }
  return out;
}

// "c*r^e"
std::string monomial(const Rational& c, int power) {
  if (power == 0) return to_string(c);
  const std::string var = power == 1 ? "r" : "r^" + std::to_string(power);
  if (c == 1) return var;
  if (c == -1) return "-" + var;
  return to_string(c) + "*" + var;
}

// Polynomial in s = r^2 written in r, multiplied by r^extra.
std::string poly_in_r(const Polynomial<Rational>& p, int extra) {
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int power = 2 * i + extra;
    if (out.empty()) {
      out = monomial(c, power);
    } else {
      out += c < 0 ? " - " : " + ";
      out += monomial(abs(c), power);
    }
  }
  return out.empty() ? "0" : out;
}

int sign_of_h(Order k, const RationalCurve& curve, double r, double* raw = nullptr) {
  const FkValue f = eval_fk(k, r);
  if (f.is_pole()) return 0;
  const auto g = curve.evaluate(r);
  if (!g) return 0;
  const double h = f.value() - *g;
  if (raw) *raw = h;
  const double noise = 1e-11 * (1 + std::fabs(f.value()) + std::fabs(*g));
  if (std::fabs(h) <= noise) return 0;
  return h > 0 ? 1 : -1;
}

double bisect_crossing(Order k, const RationalCurve& curve, double lo, double hi, int sign_lo) {
  while (hi - lo > 1e-14 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double h = 0.0;
    sign_of_h(k, curve, mid, &h);
    if (h == 0.0) return mid;
    if ((h > 0 ? 1 : -1) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct RegionSolve {
  IntersectionStatus status = IntersectionStatus::none;
  double r_star = 0.0;
  double gap = 0.0;
};

RegionSolve solve_region(Order k, const RationalCurve& curve, double lo, double hi) {
  std::vector<double> cuts{lo};
  for (const auto& pole : curve.poles) {
    if (std::fabs(pole.r - lo) < kIndeterminateDistance || std::fabs(pole.r - hi) < kIndeterminateDistance) {
      return {IntersectionStatus::indeterminate};
    }
    if (pole.r > lo && pole.r < hi) cuts.push_back(pole.r);
  }
  cuts.push_back(hi);

  std::vector<double> crossings;
  for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
    const double a = cuts[piece];
    const double b = cuts[piece + 1];
    const double inset = 1e-9 * std::max(1.0, b);
    const int cells = std::max(200, static_cast<int>(std::ceil((b - a) / 0.01)));
    int prev_sign = 0;
    double prev_r = 0.0;
    for (int i = 0; i <= cells; ++i) {
      const double r = std::clamp(a + (b - a) * i / cells, a + inset, b - inset);
      const int s = sign_of_h(k, curve, r);
      if (s == 0) continue;
      if (prev_sign != 0 && s != prev_sign) {
        crossings.push_back(bisect_crossing(k, curve, prev_r, r, prev_sign));
      }
      prev_sign = s;
      prev_r = r;
    }
  }
  if (crossings.empty()) return {IntersectionStatus::none};
  if (crossings.size() > 1) {
    // Sturm comparison allows at most one zero of J_{k+m} between zeros of J_{k+1}.
    throw ConvergenceError("more than one intersection inside a single region");
  }
  const double r_star = crossings.front();
  const double gap = std::fabs(eval_fk(k, r_star).value() - *curve.evaluate(r_star));
  if (gap > kMaxIntersectionGap) throw ConvergenceError("sign change of F_k - G is not an intersection");
  return {IntersectionStatus::found, r_star, gap};
}

void require_matching_order(Order k, const RationalCurve& curve) {
  const double exact = to_double(curve.k);
  if (std::fabs(exact - k.value()) > 1e-12 * std::max(1.0, std::fabs(exact))) {
    throw DomainError("curve was built for a different order");
  }
}

}  // namespace

std::string CurvePoint::exact_form() const {
  if (exact_s) return sqrt_surd_string(*exact_s);
  return format_double(r);
}

std::optional<Rational> RationalCurve::evaluate(const Rational& r) const {
  const Rational s = r * r;
  const Rational p = P(s);
  if (p == 0) return std::nullopt;
  return Rational(2 * (k + 1) - s * Q(s) / p);
}

std::optional<double> RationalCurve::evaluate(double r) const {
  const long double s = static_cast<long double>(r) * r;
  const long double p = P(s);
  if (p == 0) return std::nullopt;
  const long double c = 2 * (to_long_double(k) + 1);
  return static_cast<double>(c - s * Q(s) / p);
}

std::string RationalCurve::formula() const {
  const Rational c = 2 * (k + 1);
  if (Q.is_zero()) return to_string(c);
  std::string out = to_string(c);
  if (P.degree() == 0) {
    // c - sum_i (q_i / p_0) r^{2i+2}, written as "r^2/8" where possible.
    for (int i = 0; i <= Q.degree(); ++i) {
      const Rational a = Q.coefficient(i) / P.leading();
      if (a == 0) continue;
      const Rational mag = abs(a);
      const std::string var = "r^" + std::to_string(2 * i + 2);
      std::string term;
      if (mag.get_num() == 1) {
        term = mag.get_den() == 1 ? var : var + "/" + mag.get_den().get_str();
      } else {
        term = mag.get_num().get_str() + "*" + var;
        if (mag.get_den() != 1) term += "/" + mag.get_den().get_str();
      }
      out += (a > 0 ? " - " : " + ") + term;
    }
    return out;
  }
  return out + " - (" + poly_in_r(Q, 2) + ")/(" + poly_in_r(P, 0) + ")";
}

PolesAndRoots poles_and_roots(const RationalCurve& curve) {
  const Polynomial<Rational> sq = curve.Q.times_s();
  Polynomial<Rational> denominator = curve.P;
  Polynomial<Rational> numerator = Rational(2 * (curve.k + 1)) * curve.P - sq;
  const Polynomial<Rational> common = gcd(curve.P, sq);
  if (common.degree() > 0) {
    denominator = divmod(denominator, common).first;
    numerator = divmod(numerator, common).first;
  }
  PolesAndRoots out;
  const RootIsolation poles = isolate_positive_roots(denominator, isolation_width());
  out.poles = to_points(poles);
  out.repeated_root = poles.repeated;
  if (!numerator.is_zero()) {
    const RootIsolation roots = isolate_positive_roots(numerator, isolation_width());
    out.roots = to_points(roots);
    out.repeated_root = out.repeated_root || roots.repeated;
  }
  return out;
}

RationalCurve g_curve(const Rational& k, int m) {
  if (m < 2) throw DomainError("curve index m must be >= 2");
  if (k <= -1) throw DomainError("order must exceed -1");
  const YLinearForm<Rational> form = compute_al(k, m - 1);
  RationalCurve curve;
  curve.k = k;
  curve.m = m;
  curve.P = form.P;
  curve.Q = form.Q;
  curve.removable_factor = gcd(curve.P, curve.Q.times_s()).degree() > 0;

  PolesAndRoots pr = poles_and_roots(curve);
  curve.poles = std::move(pr.poles);
  curve.roots = std::move(pr.roots);
  curve.repeated_root = pr.repeated_root;

  // G = 2(k+1) - s Q / P as s -> infinity.
  const Rational base = 2 * (k + 1);
  const int top = curve.Q.is_zero() ? -1 : curve.Q.degree() + 1;
  if (top > curve.P.degree()) {
    const Rational ratio = curve.Q.leading() / curve.P.leading();
    curve.at_infinity = {InfinityKind::diverges, std::nullopt, ratio > 0 ? -1 : 1};
  } else if (top == curve.P.degree()) {
    curve.at_infinity = {InfinityKind::constant, Rational(base - curve.Q.leading() / curve.P.leading()), 0};
  } else {
    curve.at_infinity = {InfinityKind::constant, base, 0};
  }
  return curve;
}

std::vector<RegionIntersection> intersect_regions(Order k, const RationalCurve& curve, int region_max) {
  if (region_max < 0) throw DomainError("region index must be non-negative");
  require_matching_order(k, curve);
  const ZeroTable asymptotes = first_zeros(k.shifted(1), region_max + 1);
  std::vector<RegionIntersection> out;
  int hits = 0;
  bool certain = true;
  for (int region = 0; region <= region_max; ++region) {
    const double lo = region == 0 ? 0.0 : asymptotes[region];
    const double hi = asymptotes[region + 1];
    const RegionSolve solved = solve_region(k, curve, lo, hi);
    RegionIntersection result{region, solved.status, std::nullopt};
    if (solved.status == IntersectionStatus::indeterminate) {
      certain = false;
    } else if (solved.status == IntersectionStatus::found) {
      ++hits;
      result.hit = Intersection{solved.r_star, region, region + 1,
                                ZeroLabel{k.value() + curve.m, hits}, solved.gap, certain};
    }
    out.push_back(std::move(result));
  }
  return out;
}

RegionIntersection intersect_with_fk(Order k, const RationalCurve& curve, int region) {
  auto all = intersect_regions(k, curve, region);
  return all.back();
}

std::vector<CurveSample> sample_curves(Order k, const std::vector<RationalCurve>& curves, double r_max,
                                       int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  if (!(r_max > 0)) throw DomainError("r_max must be positive");
  for (const auto& c : curves) require_matching_order(k, c);
  const double step = r_max / samples;
  const std::vector<double> fk_poles = zeros_up_to(k.shifted(1), r_max + step).values();

  auto near_any = [&](double r, auto begin, auto end, auto value_of) {
    for (auto it = begin; it != end; ++it) {
      if (std::fabs(value_of(*it) - r) < step / 2) return true;
    }
    return false;
  };

  std::vector<CurveSample> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 1; i <= samples; ++i) {
    CurveSample row;
    row.r = r_max * i / samples;
    if (!near_any(row.r, fk_poles.begin(), fk_poles.end(), [](double p) { return p; })) {
      const FkValue f = eval_fk(k, row.r);
      if (!f.is_pole()) row.fk = f.value();
    }
    for (const auto& curve : curves) {
      std::optional<double> g;
      if (!near_any(row.r, curve.poles.begin(), curve.poles.end(), [](const CurvePoint& p) { return p.r; })) {
        g = curve.evaluate(row.r);
      }
      row.g.push_back(g);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bessel
