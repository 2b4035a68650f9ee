#ifndef BESSEL_POLYNOMIAL_HPP_
#define BESSEL_POLYNOMIAL_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bessel/rational.hpp"

namespace bessel {

/// Dense univariate polynomial sum_i c_i s^i, coefficients in increasing
/// order of degree. The stored vector never ends in a zero coefficient, so
/// the zero polynomial is the empty vector and has degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  [[nodiscard]] const std::vector<Scalar>& coefficients() const noexcept { return c_; }

  [[nodiscard]] Scalar coefficient(int i) const {
    if (i < 0 || i > degree()) return Scalar(0);
    return c_[static_cast<std::size_t>(i)];
  }

  [[nodiscard]] const Scalar& leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  /// Horner evaluation in the arithmetic of T.
  template <typename T>
  [[nodiscard]] T operator()(const T& s) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * s + scalar_cast<T>(*it);
    }
    return acc;
  }

  /// s * p(s)
  [[nodiscard]] Polynomial times_s() const {
    if (c_.empty()) return {};
    std::vector<Scalar> out;
    out.reserve(c_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), c_.begin(), c_.end());
    return Polynomial(std::move(out));
  }

  [[nodiscard]] Polynomial derivative() const {
    std::vector<Scalar> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(Scalar(c_[i] * static_cast<long>(i)));
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& factor) {
    for (auto& c : c_) c *= factor;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Scalar& f, Polynomial p) { return p *= f; }
  friend Polynomial operator*(Polynomial p, const Scalar& f) { return p *= f; }
  friend Polynomial operator-(Polynomial p) { return p *= Scalar(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Euclidean division over a field: a = quotient * b + remainder.
template <typename Scalar>
[[nodiscard]] std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                                      const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> quotient(static_cast<std::size_t>(std::max(a.degree() - b.degree() + 1, 0)), Scalar(0));
  Polynomial<Scalar> remainder = a;
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const int shift = remainder.degree() - b.degree();
    const Scalar factor = remainder.leading() / b.leading();
    quotient[static_cast<std::size_t>(shift)] = factor;
    std::vector<Scalar> term(static_cast<std::size_t>(shift), Scalar(0));
    for (const auto& c : b.coefficients()) term.push_back(Scalar(c * factor));
    // Force exact cancellation of the leading term.
    Polynomial<Scalar> next = remainder - Polynomial<Scalar>(std::move(term));
    if (!next.is_zero() && next.degree() >= remainder.degree()) {
      std::vector<Scalar> c = next.coefficients();
      c.resize(static_cast<std::size_t>(remainder.degree()));
      next = Polynomial<Scalar>(std::move(c));
    }
    remainder = std::move(next);
  }
  return {Polynomial<Scalar>(std::move(quotient)), remainder};
}

/// Monic greatest common divisor.
template <typename Scalar>
[[nodiscard]] Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Scalar(Scalar(1) / a.leading());
}

}  // namespace bessel

#endif  // BESSEL_POLYNOMIAL_HPP_
