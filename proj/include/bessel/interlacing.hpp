#ifndef BESSEL_INTERLACING_HPP_
#define BESSEL_INTERLACING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bessel/order.hpp"

namespace bessel {

struct Thresholds {
  double r_k = 0.0;         // 2 sqrt((k+1)(k+2)), root of G_{k,3}
  double r_hat_k = 0.0;     // sqrt(2(k+1)(k+3)), root of G_{k,4}
  double r_k_plus_1 = 0.0;  // 2 sqrt((k+2)(k+3)), pole of G_{k,4}
};

[[nodiscard]] Thresholds thresholds(Order k);

/// Zero j_{order,n}; `shift` is order - k.
struct Label {
  int shift = 0;
  int n = 0;
  friend bool operator==(const Label&, const Label&) = default;
};

/// "j_{5,1}" for k = 2, shift 3, n = 1.
[[nodiscard]] std::string format_label(double k, const Label& label);

enum class Case234 { A, B };  // A: j_{k+3,n} < j_{k,n+1}; B: the reverse

/// Interval holding j_{k+4,n}.
enum class Case5 {
  k3n_to_kn1,    // (j_{k+3,n}, j_{k,n+1})
  kn1_to_k1n1,   // (j_{k,n+1}, j_{k+1,n+1})
  k3n_to_k1n1,   // (j_{k+3,n}, j_{k+1,n+1})
  k1n1_to_k2n1,  // (j_{k+1,n+1}, j_{k+2,n+1})
};

[[nodiscard]] const char* to_string(Case234 c) noexcept;
[[nodiscard]] const char* to_string(Case5 c) noexcept;

struct Comparison {
  std::string threshold;
  double threshold_value = 0.0;
  std::string zero;
  double zero_value = 0.0;
  char relation = '<';  // zero <relation> threshold
};

struct InterlacingCase {
  double k = 0.0;
  int n = 0;
  Case234 case_234 = Case234::A;
  Case5 case_5 = Case5::k3n_to_kn1;
  bool pole_in_branch = false;  // r_{k+1} in (j_{k+1,n}, j_{k+1,n+1}): G_{k,4} misses the branch
  std::vector<Comparison> deciding_comparisons;

  /// Predicted order of j_{k+1,n}, j_{k+2,n}, j_{k+3,n}, j_{k,n+1},
  /// j_{k+1,n+1}, j_{k+2,n+1} and j_{k+4,n}.
  [[nodiscard]] std::vector<Label> predicted_order() const;
};

/// Deviation added to the threshold r_k; nonzero only as a negative control.
struct ClassifyOptions {
  double r_k_offset = 0.0;
};

inline constexpr double kBoundaryTolerance = 1e-8;

/// Case analysis from threshold comparisons alone. Throws BoundaryError when a
/// deciding zero is within 1e-8 of its threshold.
[[nodiscard]] InterlacingCase classify(Order k, int n, ClassifyOptions options = {});

/// Same, from zeros already at hand: j_{k,n+1}, j_{k+1,n}, j_{k+1,n+1}
/// (j_{k+1,0} = 0).
[[nodiscard]] InterlacingCase classify_from_zeros(Order k, int n, double j_k_n1, double j_k1_n,
                                                  double j_k1_n1, ClassifyOptions options = {});

struct LabeledZero {
  Label label;
  double value = 0.0;
  bool tie = false;  // within 1e-9 of a neighbour
};

/// Zeros of J_k, ..., J_{k+ell_max} up to r_max, merged and sorted.
[[nodiscard]] std::vector<LabeledZero> interlaced_sequence(Order k, int ell_max, double r_max);

struct VerificationRecord {
  double k = 0.0;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  std::optional<InterlacingCase> predicted;
  std::vector<Label> predicted_order;
  std::vector<Label> computed_order;
  std::vector<double> computed_values;
  bool agree = false;
  bool containment = false;  // j_{k+2,n}, j_{k+3,n} inside (j_{k+1,n}, j_{k+1,n+1})
  std::optional<std::pair<Label, Label>> k4_neighbours;  // where j_{k+4,n} actually sits
  double margin = 0.0;       // smallest gap between adjacent computed zeros
};

struct VerificationReport {
  std::vector<double> k_grid;
  int n_max = 0;
  std::vector<VerificationRecord> records;
  int agreed = 0;
  int disagreed = 0;
  int skipped = 0;

  [[nodiscard]] bool all_agree() const noexcept { return disagreed == 0; }
};

/// k_i = -0.9 + 10.9 i / count, i = 1..count.
[[nodiscard]] std::vector<double> default_k_grid(int count = 50);

/// Classification against computed zero positions for every (k, n <= n_max).
/// Orders are processed concurrently; failures are recorded, never thrown.
[[nodiscard]] VerificationReport verify_theorem(const std::vector<double>& k_grid, int n_max,
                                                ClassifyOptions options = {});

[[nodiscard]] std::string report_to_json(const VerificationReport& report);
[[nodiscard]] std::string report_to_csv(const VerificationReport& report);

}  // namespace bessel

#endif  // BESSEL_INTERLACING_HPP_
