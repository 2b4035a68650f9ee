#ifndef BESSEL_FK_HPP_
#define BESSEL_FK_HPP_

#include <optional>

#include "bessel/order.hpp"
#include "bessel/zeros.hpp"

namespace bessel {

using Interval = Bracket;

/// F_k(r) = r J_k(r) / J_{k+1}(r), or a pole marker on a zero of J_{k+1}.
class FkValue {
 public:
  static FkValue pole() noexcept { return FkValue(); }
  static FkValue finite(double v) noexcept { return FkValue(v); }

  [[nodiscard]] bool is_pole() const noexcept { return !value_.has_value(); }
  [[nodiscard]] double value() const {
    if (!value_) throw PoleError("F_k is on a vertical asymptote");
    return *value_;
  }

 private:
  FkValue() = default;
  explicit FkValue(double v) : value_(v) {}
  std::optional<double> value_;
};

/// F_k(r) for r > 0. Evaluated as 2(k+1) - r J_{k+2}/J_{k+1}, which equals
/// r / eval_ratio(k, r) but stays finite on the zeros of J_k. A pole marker is
/// returned when |J_{k+1}(r)| is within ten error bounds of zero, the bound
/// including the slope of J_{k+1} times a few ulps of r.
[[nodiscard]] FkValue eval_fk(Order k, double r);

/// One branch phi_n of F_k: the restriction to (j_{k+1,n-1}, j_{k+1,n}),
/// with j_{k+1,0} = 0.
struct Branch {
  int n = 0;
  Interval domain;
  double root = 0.0;  // j_{k,n}
  /// F_k(0+) = 2(k+1); set on the first branch only.
  std::optional<double> limit_at_origin;
};

[[nodiscard]] Interval branch_domain(Order k, int n);
[[nodiscard]] Branch branch(Order k, int n);

/// F_k'(r) = r (J_k J_{k+2} - J_{k+1}^2) / J_{k+1}^2.
[[nodiscard]] double fk_derivative(Order k, double r);

/// F_k'(r) + r/(k+2), assembled from the Turán excess so that the O(1)
/// terms cancel before rounding. Negative wherever F_k is finite.
[[nodiscard]] double fk_derivative_margin(Order k, double r);

struct DecreasingBoundReport {
  int samples = 0;
  double max_margin = 0.0;      // max of F_k'(r) + r/(k+2)
  double argmax = 0.0;
  double max_fd_relative = 0.0; // analytic vs five-point finite difference
  bool pass = false;            // max_margin < 0
};

/// Samples F_k'(r) + r/(k+2) on an even grid over `interval`, which must sit
/// inside one branch with both ends at least 1e-4 away from its poles.
[[nodiscard]] DecreasingBoundReport check_decreasing_bound(Order k, Interval interval, int samples);

}  // namespace bessel

#endif  // BESSEL_FK_HPP_
