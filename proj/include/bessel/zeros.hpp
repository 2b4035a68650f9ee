#ifndef BESSEL_ZEROS_HPP_
#define BESSEL_ZEROS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "bessel/order.hpp"

namespace bessel {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] bool contains(double x) const noexcept { return lo < x && x < hi; }
  [[nodiscard]] double width() const noexcept { return hi - lo; }
};

struct ZeroEntry {
  int n = 0;  // 1-based: 0 < j_{k,1} < j_{k,2} < ...
  double value = 0.0;
  Bracket bracket;
  double residual = 0.0;  // |J_k(value)|
};

/// Ordered positive zeros of J_k. Immutable once built.
class ZeroTable {
 public:
  ZeroTable(Order k, std::vector<ZeroEntry> zeros) : k_(k), zeros_(std::move(zeros)) {}

  [[nodiscard]] Order order() const noexcept { return k_; }
  [[nodiscard]] const std::vector<ZeroEntry>& entries() const noexcept { return zeros_; }
  [[nodiscard]] std::size_t size() const noexcept { return zeros_.size(); }
  [[nodiscard]] bool empty() const noexcept { return zeros_.empty(); }

  /// j_{k,n}, 1-based.
  [[nodiscard]] double operator[](int n) const { return zeros_.at(static_cast<std::size_t>(n - 1)).value; }

  [[nodiscard]] std::vector<double> values() const;

 private:
  Order k_;
  std::vector<ZeroEntry> zeros_;
};

/// The n-th positive zero j_{k,n}, accurate to 1e-10 absolute.
///
/// Starts from an asymptotic guess (McMahon's β - (4k²-1)/(8β) with
/// β = (n + k/2 - 1/4)π, or the Airy-type expansion when n is small
/// against k), brackets a sign change nearby and refines it with safeguarded
/// Newton steps. The index is then certified by counting the zeros below the
/// bracket with a Sturm-spaced scan; a mismatch shifts the guess and retries.
[[nodiscard]] double nth_zero(Order k, int n);

/// All zeros of J_k in (0, r_max], bracketed and refined.
[[nodiscard]] ZeroTable zeros_up_to(Order k, double r_max);

/// The first `count` zeros of J_k.
[[nodiscard]] ZeroTable first_zeros(Order k, int count);

/// Zeros of J_k from a table of J_{k+1}: j_{k,n} lies in (j_{k+1,n-1}, j_{k+1,n})
/// with j_{k+1,0} = 0, so each neighbour gap is a certified bracket.
[[nodiscard]] ZeroTable zeros_from_neighbor(Order k, const ZeroTable& next_order);

struct OracleResult {
  std::vector<double> zeros;
  std::vector<std::string> warnings;
};

/// Brute-force oracle: sign scan of J_k on the uniform grid step, 2*step, ...
/// up to r_max, each sign change bisected to 1e-13. Uses no asymptotics and
/// no derivative information.
[[nodiscard]] OracleResult oracle_zeros(Order k, double r_max, double step);

/// 2 sqrt(k+1) (k+2)^{1/4}: a strict lower bound for j_{k,1}, from the
/// Rayleigh sum  sum_n j_{k,n}^{-4} = 1 / (16 (k+1)^2 (k+2)).
[[nodiscard]] double first_zero_lower_bound(Order k);

/// Lower bound on the distance between consecutive zeros of J_k lying above
/// `from`, by Sturm comparison of sqrt(r) J_k(r) with a sine.
[[nodiscard]] double zero_separation_bound(Order k, double from);

/// Initial guess used by nth_zero.
[[nodiscard]] double asymptotic_zero_guess(Order k, int n);

}  // namespace bessel

#endif  // BESSEL_ZEROS_HPP_
