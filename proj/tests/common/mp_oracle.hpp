#ifndef BESSEL_TESTS_MP_ORACLE_HPP_
#define BESSEL_TESTS_MP_ORACLE_HPP_

#include <gmpxx.h>

#include <cmath>

#include "bessel/rational.hpp"

namespace bessel {

template <>
[[nodiscard]] inline mpf_class scalar_cast<mpf_class>(const Rational& q) {
  return mpf_class(q, mpf_get_default_prec());
}

namespace testing {

constexpr unsigned kOracleBits = 320;

// F_k(r) = 2(k+1) - r J_{k+2}(r)/J_{k+1}(r) in multiprecision. The ratio
// R_v = J_{v+1}/J_v satisfies R_v = r / (2(v+1) - r R_{v+1}); it is run
// backwards from a depth where the tail is far below the working precision.
inline mpf_class mp_fk(const Rational& k, double r) {
  mpf_set_default_prec(kOracleBits);
  const mpf_class kf = scalar_cast<mpf_class>(k);
  const mpf_class rf(r);
  const int depth = static_cast<int>(std::ceil(r)) + 200;
  mpf_class ratio = 0;
  for (int j = depth; j >= 1; --j) {
    // R_{k+j}
    ratio = rf / (2 * (kf + j + 1) - rf * ratio);
  }
  return 2 * (kf + 1) - rf * ratio;
}

}  // namespace testing
}  // namespace bessel

#endif
