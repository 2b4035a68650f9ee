#ifndef BESSEL_REPORT_HPP_
#define BESSEL_REPORT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bessel {

/// "%.17g": round-trips every double, '.' separator, no grouping.
[[nodiscard]] std::string format_number(double x);

/// Empty string for a missing value.
[[nodiscard]] std::string format_cell(const std::optional<double>& x);

/// Comma-separated row with a trailing newline. Cells containing a comma or
/// quote are quoted.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace bessel

#endif  // BESSEL_REPORT_HPP_
