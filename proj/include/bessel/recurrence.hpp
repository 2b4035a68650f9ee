#ifndef BESSEL_RECURRENCE_HPP_
#define BESSEL_RECURRENCE_HPP_

#include <string>
#include <vector>

#include "bessel/errors.hpp"
#include "bessel/polynomial.hpp"
#include "bessel/rational.hpp"

namespace bessel {

/// a_ell(y, r) = P(s) (2(k+1) - y) - Q(s) s,  s = r^2.
///
/// With y = F_k(r) this equals r^ell J_{k+1+ell}(r) / J_{k+1}(r).
template <typename Scalar>
struct YLinearForm {
  Scalar k;
  int ell = 0;
  Polynomial<Scalar> P;
  Polynomial<Scalar> Q;
};

/// floor((ell - 1) / 2), the degree of P_ell.
[[nodiscard]] constexpr int expected_degree_p(int ell) noexcept {
  const int n = ell - 1;
  return n >= 0 ? n / 2 : -((1 - n) / 2);
}

/// floor((ell - 2) / 2), the degree of Q_ell (-1 means Q = 0).
[[nodiscard]] constexpr int expected_degree_q(int ell) noexcept {
  const int n = ell - 2;
  return n >= 0 ? n / 2 : -((1 - n) / 2);
}

/// a_1, ..., a_{ell_max} from
///   a_{j+2} = 2(k+2+j) a_{j+1} - s a_j,   a_0 = 1,  a_1 = 2(k+1) - y.
/// a_0 has no y-linear form, so a_1 and a_2 are seeded directly and the
/// recurrence then acts on P and Q separately.
template <typename Scalar>
[[nodiscard]] std::vector<YLinearForm<Scalar>> compute_al_sequence(const Scalar& k, int ell_max) {
  if (ell_max < 1) throw DomainError("ell must be >= 1");
  std::vector<YLinearForm<Scalar>> forms;
  forms.reserve(static_cast<std::size_t>(ell_max));
  forms.push_back({k, 1, Polynomial<Scalar>::constant(Scalar(1)), {}});
  if (ell_max >= 2) {
    // a_2 = 2(k+2) a_1 - s a_0 = 2(k+2) (2(k+1) - y) - s
    forms.push_back({k, 2, Polynomial<Scalar>::constant(Scalar(2 * (k + 2))),
                     Polynomial<Scalar>::constant(Scalar(1))});
  }
  for (int j = 1; j + 2 <= ell_max; ++j) {
    const auto& prev = forms[static_cast<std::size_t>(j - 1)];
    const auto& curr = forms[static_cast<std::size_t>(j)];
    const Scalar c(2 * (k + (2 + j)));
    YLinearForm<Scalar> next{k, j + 2, c * curr.P - prev.P.times_s(), c * curr.Q - prev.Q.times_s()};
    forms.push_back(std::move(next));
  }
  return forms;
}

template <typename Scalar>
[[nodiscard]] YLinearForm<Scalar> compute_al(const Scalar& k, int ell) {
  auto forms = compute_al_sequence(k, ell);
  return std::move(forms.back());
}

/// P(r^2) (2(k+1) - y) - Q(r^2) r^2 in the arithmetic of T; exact when T is
/// Rational.
template <typename Scalar, typename T>
[[nodiscard]] T eval_al(const YLinearForm<Scalar>& form, const T& y, const T& r) {
  const T s = r * r;
  const T k = scalar_cast<T>(form.k);
  const T x = T(2) * (k + T(1)) - y;
  return T(form.P(s) * x - form.Q(s) * s);
}

/// deg P = floor((ell-1)/2) and deg Q = floor((ell-2)/2).
template <typename Scalar>
[[nodiscard]] bool degree_check(const YLinearForm<Scalar>& form) {
  return form.P.degree() == expected_degree_p(form.ell) && form.Q.degree() == expected_degree_q(form.ell);
}

/// Canonical JSON: {"ell": n, "k": {"num": "...", "den": "..."},
/// "P": [{"num", "den"}, ...], "Q": [...]}, coefficients by increasing power of s.
[[nodiscard]] std::string form_to_json(const YLinearForm<Rational>& form);
[[nodiscard]] YLinearForm<Rational> form_from_json(const std::string& text);

}  // namespace bessel

#endif  // BESSEL_RECURRENCE_HPP_
