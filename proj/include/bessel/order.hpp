#ifndef BESSEL_ORDER_HPP_
#define BESSEL_ORDER_HPP_

#include <cmath>
#include <compare>
#include <string>

#include "bessel/errors.hpp"

namespace bessel {

/// Real Bessel order k, restricted to k > -1 throughout the library.
class Order {
 public:
  explicit Order(double k) : k_(k) {
    if (!std::isfinite(k) || k <= -1.0) {
      throw DomainError("order must exceed -1 (got " + std::to_string(k) + ")");
    }
  }

  [[nodiscard]] double value() const noexcept { return k_; }

  /// The order k + shift; shifts are non-negative in every caller, so the
  /// result stays in the domain.
  [[nodiscard]] Order shifted(double shift) const { return Order(k_ + shift); }

  friend auto operator<=>(const Order&, const Order&) = default;

 private:
  double k_;
};

}  // namespace bessel

#endif  // BESSEL_ORDER_HPP_
