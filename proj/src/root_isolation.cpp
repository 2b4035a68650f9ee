#include "bessel/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bessel {
namespace {

int sign(const Rational& q) { return sgn(q); }

// Smallest power of two strictly above the Cauchy bound 1 + max |a_i / a_n|.
Rational positive_root_bound(const Polynomial<Rational>& p) {
  Rational largest = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const Rational ratio = abs(Rational(p.coefficient(i) / p.leading()));
    if (ratio > largest) largest = ratio;
  }
  const Rational cauchy = largest + 1;
  Rational bound = 1;
  while (bound <= cauchy) bound *= 2;
  return bound;
}

// Sign bisection of a simple root in (lo, hi]; p(lo) != 0.
IsolatedRoot refine(const Polynomial<Rational>& p, Rational lo, Rational hi, const Rational& width) {
  const int sign_lo = sign(p(lo));
  if (sign(p(hi)) == 0) return {hi, hi, hi};
  while (Rational(hi - lo) > width) {
    Rational mid = (lo + hi) / 2;
    const int s = sign(p(mid));
    if (s == 0) return {mid, mid, mid};
    if (s == sign_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  IsolatedRoot root{lo, hi, std::nullopt};
  // A root with a small denominator is recovered exactly.
  const Rational candidate = nearest_rational(Rational((lo + hi) / 2), 1'000'000);
  if (candidate >= lo && candidate <= hi && sign(p(candidate)) == 0) root.exact = candidate;
  return root;
}

}  // namespace

std::vector<Polynomial<Rational>> sturm_sequence(const Polynomial<Rational>& p) {
  std::vector<Polynomial<Rational>> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto remainder = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-remainder);
  }
  seq.pop_back();
  return seq;
}

int sturm_variations(const std::vector<Polynomial<Rational>>& sequence, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& poly : sequence) {
    const int s = sign(poly(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

RootIsolation isolate_positive_roots(const Polynomial<Rational>& p, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("the zero polynomial has no isolated roots");
  RootIsolation out;
  if (p.degree() == 0) return out;

  const Polynomial<Rational> common = gcd(p, p.derivative());
  out.repeated = common.degree() > 0;
  Polynomial<Rational> squarefree = divmod(p, common).first;
  // Drop the factor s^j; zero is not a positive root.
  while (squarefree.coefficient(0) == 0) {
    std::vector<Rational> c(squarefree.coefficients().begin() + 1, squarefree.coefficients().end());
    squarefree = Polynomial<Rational>(std::move(c));
  }
  if (squarefree.degree() <= 0) return out;

  const auto seq = sturm_sequence(squarefree);
  struct Cell {
    Rational lo, hi;
    int v_lo, v_hi;
  };
  const Rational zero = 0;
  const Rational bound = positive_root_bound(squarefree);
  std::vector<Cell> pending{{zero, bound, sturm_variations(seq, zero), sturm_variations(seq, bound)}};
  std::vector<IsolatedRoot> roots;
  while (!pending.empty()) {
    Cell cell = std::move(pending.back());
    pending.pop_back();
    const int count = cell.v_lo - cell.v_hi;
    if (count <= 0) continue;
    if (count == 1) {
      roots.push_back(refine(squarefree, cell.lo, cell.hi, width));
      continue;
    }
    // Split at a point that is not itself a root.
    Rational mid = (cell.lo + cell.hi) / 2;
    for (int attempt = 1; squarefree(mid) == 0; ++attempt) {
      mid = cell.lo + Rational(cell.hi - cell.lo) * Rational(2 * attempt + 1, 4 * attempt + 4);
    }
    const int v_mid = sturm_variations(seq, mid);
    pending.push_back({mid, cell.hi, v_mid, cell.v_hi});
    pending.push_back({cell.lo, mid, cell.v_lo, v_mid});
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  out.roots = std::move(roots);
  return out;
}

}  // namespace bessel
