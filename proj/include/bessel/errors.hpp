#ifndef BESSEL_ERRORS_HPP_
#define BESSEL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bessel {

/// Argument outside the mathematical domain of an operation (k <= -1, r < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quotient was requested at (or numerically indistinguishable from) a zero
/// of its denominator.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative search could not establish or refine a certified bracket.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A threshold comparison fell inside the boundary tolerance, so the strict
/// inequalities that decide a case cannot be resolved.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bessel

#endif  // BESSEL_ERRORS_HPP_
