#include "bessel/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "bessel/errors.hpp"
#include "bessel/report.hpp"
#include "bessel/zeros.hpp"

namespace bessel {
namespace {

constexpr double kTieTolerance = 1e-9;

void decide(std::vector<Comparison>& log, const char* threshold, double t, const char* zero, double z) {
  if (std::fabs(z - t) < kBoundaryTolerance) {
    throw BoundaryError(std::string(zero) + " = " + format_number(z) + " is within 1e-8 of " + threshold +
                        " = " + format_number(t));
  }
  log.push_back({threshold, t, zero, z, z < t ? '<' : '>'});
}

std::string join_labels(double k, const std::vector<Label>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += format_label(k, l);
  }
  return out;
}

std::vector<VerificationRecord> verify_order(double k, int n_max, ClassifyOptions options) {
  std::vector<VerificationRecord> records;
  const Order order(k);
  std::vector<ZeroTable> tables;
  try {
    tables.push_back(first_zeros(order, n_max + 1));
    tables.push_back(first_zeros(order.shifted(1), n_max + 1));
    tables.push_back(first_zeros(order.shifted(2), n_max + 1));
    tables.push_back(first_zeros(order.shifted(3), n_max));
    tables.push_back(first_zeros(order.shifted(4), n_max));
  } catch (const std::exception& e) {
    for (int n = 1; n <= n_max; ++n) {
      VerificationRecord rec;
      rec.k = k;
      rec.n = n;
      rec.skip_reason = std::string("zero computation failed: ") + e.what();
      records.push_back(std::move(rec));
    }
    return records;
  }
  auto zero = [&](const Label& l) { return tables[static_cast<std::size_t>(l.shift)][l.n]; };

  for (int n = 1; n <= n_max; ++n) {
    VerificationRecord rec;
    rec.k = k;
    rec.n = n;
    try {
      rec.predicted = classify_from_zeros(order, n, zero({0, n + 1}), zero({1, n}), zero({1, n + 1}), options);
      rec.predicted_order = rec.predicted->predicted_order();
    } catch (const BoundaryError& e) {
      rec.skipped = true;
      rec.skip_reason = e.what();
    }

    std::vector<Label> labels{{1, n}, {2, n}, {3, n}, {0, n + 1}, {1, n + 1}, {2, n + 1}, {4, n}};
    std::sort(labels.begin(), labels.end(), [&](const Label& a, const Label& b) { return zero(a) < zero(b); });
    rec.computed_order = labels;
    rec.margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      rec.computed_values.push_back(zero(labels[i]));
      if (i) rec.margin = std::min(rec.margin, zero(labels[i]) - zero(labels[i - 1]));
    }
    const auto k4 = std::find(labels.begin(), labels.end(), Label{4, n});
    if (k4 != labels.begin() && k4 + 1 != labels.end()) rec.k4_neighbours = std::make_pair(*(k4 - 1), *(k4 + 1));

    const double lo = zero({1, n});
    const double hi = zero({1, n + 1});
    rec.containment = lo < zero({2, n}) && zero({2, n}) < hi && lo < zero({3, n}) && zero({3, n}) < hi;
    rec.agree = !rec.skipped && rec.predicted_order == rec.computed_order && rec.containment;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

Thresholds thresholds(Order k) {
  const double v = k.value();
  return {2 * std::sqrt((v + 1) * (v + 2)), std::sqrt(2 * (v + 1) * (v + 3)), 2 * std::sqrt((v + 2) * (v + 3))};
}

std::string format_label(double k, const Label& label) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "j_{%.10g,%d}", k + label.shift, label.n);
  return buf;
}

const char* to_string(Case234 c) noexcept { return c == Case234::A ? "A" : "B"; }

const char* to_string(Case5 c) noexcept {
  switch (c) {
    case Case5::k3n_to_kn1:
      return "(j_{k+3,n}, j_{k,n+1})";
    case Case5::kn1_to_k1n1:
      return "(j_{k,n+1}, j_{k+1,n+1})";
    case Case5::k3n_to_k1n1:
      return "(j_{k+3,n}, j_{k+1,n+1})";
    case Case5::k1n1_to_k2n1:
      return "(j_{k+1,n+1}, j_{k+2,n+1})";
  }
  return "?";
}

std::vector<Label> InterlacingCase::predicted_order() const {
  std::vector<Label> order{{1, n}, {2, n}, {3, n}, {0, n + 1}, {1, n + 1}, {2, n + 1}};
  if (case_234 == Case234::B) std::swap(order[2], order[3]);
  Label after;
  switch (case_5) {
    case Case5::k3n_to_kn1:
    case Case5::k3n_to_k1n1:
      after = {3, n};
      break;
    case Case5::kn1_to_k1n1:
      after = {0, n + 1};
      break;
    case Case5::k1n1_to_k2n1:
      after = {1, n + 1};
      break;
  }
  order.insert(std::find(order.begin(), order.end(), after) + 1, Label{4, n});
  return order;
}

InterlacingCase classify_from_zeros(Order k, int n, double j_k_n1, double j_k1_n, double j_k1_n1,
                                    ClassifyOptions options) {
  if (n < 1) throw DomainError("zero index must be >= 1");
  Thresholds t = thresholds(k);
  t.r_k += options.r_k_offset;

  InterlacingCase out;
  out.k = k.value();
  out.n = n;
  auto& log = out.deciding_comparisons;

  decide(log, "r_k", t.r_k, "j_{k,n+1}", j_k_n1);
  out.case_234 = j_k_n1 < t.r_k ? Case234::A : Case234::B;

  decide(log, "r_{k+1}", t.r_k_plus_1, "j_{k+1,n+1}", j_k1_n1);
  if (j_k1_n1 > t.r_k_plus_1) {
    out.case_5 = Case5::k1n1_to_k2n1;
  } else if (out.case_234 == Case234::B) {
    out.case_5 = Case5::k3n_to_k1n1;
  } else {
    decide(log, "r_hat_k", t.r_hat_k, "j_{k,n+1}", j_k_n1);
    out.case_5 = j_k_n1 < t.r_hat_k ? Case5::k3n_to_kn1 : Case5::kn1_to_k1n1;
  }
  out.pole_in_branch = j_k1_n < t.r_k_plus_1 && t.r_k_plus_1 < j_k1_n1;
  return out;
}

InterlacingCase classify(Order k, int n, ClassifyOptions options) {
  if (n < 1) throw DomainError("zero index must be >= 1");
  const ZeroTable next = first_zeros(k.shifted(1), n + 1);
  return classify_from_zeros(k, n, nth_zero(k, n + 1), next[n], next[n + 1], options);
}

std::vector<LabeledZero> interlaced_sequence(Order k, int ell_max, double r_max) {
  if (ell_max < 1 || ell_max > 4) throw DomainError("ell_max must be in 1..4");
  if (!(r_max > 0)) throw DomainError("r_max must be positive");
  const double ceiling = r_max + kTieTolerance * std::max(1.0, r_max);
  std::vector<LabeledZero> out;
  for (int shift = 0; shift <= ell_max; ++shift) {
    const ZeroTable table = zeros_up_to(k.shifted(shift), ceiling);
    for (const auto& z : table.entries()) {
      out.push_back({Label{shift, z.n}, z.value, false});
    }
  }
  std::sort(out.begin(), out.end(), [](const LabeledZero& a, const LabeledZero& b) { return a.value < b.value; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].value - out[i - 1].value < kTieTolerance) out[i].tie = out[i - 1].tie = true;
  }
  return out;
}

std::vector<double> default_k_grid(int count) {
  std::vector<double> grid;
  for (int i = 1; i <= count; ++i) grid.push_back(-0.9 + 10.9 * i / count);
  return grid;
}

VerificationReport verify_theorem(const std::vector<double>& k_grid, int n_max, ClassifyOptions options) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  for (double k : k_grid) (void)Order(k);

  std::vector<std::future<std::vector<VerificationRecord>>> jobs;
  for (double k : k_grid) jobs.push_back(std::async(std::launch::async, verify_order, k, n_max, options));

  VerificationReport report;
  report.k_grid = k_grid;
  report.n_max = n_max;
  for (auto& job : jobs) {
    for (auto& rec : job.get()) {
      if (rec.skipped) {
        ++report.skipped;
      } else if (rec.agree) {
        ++report.agreed;
      } else {
        ++report.disagreed;
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json records = ordered_json::array();
  for (const auto& rec : report.records) {
    ordered_json r;
    r["k"] = rec.k;
    r["n"] = rec.n;
    r["status"] = rec.skipped ? "skipped" : (rec.agree ? "agree" : "disagree");
    if (rec.predicted) {
      r["case_234"] = to_string(rec.predicted->case_234);
      r["case_5"] = to_string(rec.predicted->case_5);
      r["pole_in_branch"] = rec.predicted->pole_in_branch;
      ordered_json cmp = ordered_json::array();
      for (const auto& c : rec.predicted->deciding_comparisons) {
        cmp.push_back({{"zero", c.zero},
                       {"zero_value", c.zero_value},
                       {"relation", std::string(1, c.relation)},
                       {"threshold", c.threshold},
                       {"threshold_value", c.threshold_value}});
      }
      r["deciding_comparisons"] = cmp;
    }
    if (!rec.skip_reason.empty()) r["reason"] = rec.skip_reason;
    ordered_json predicted = ordered_json::array();
    for (const auto& l : rec.predicted_order) predicted.push_back(format_label(rec.k, l));
    ordered_json computed = ordered_json::array();
    for (std::size_t i = 0; i < rec.computed_order.size(); ++i) {
      computed.push_back({{"zero", format_label(rec.k, rec.computed_order[i])}, {"value", rec.computed_values[i]}});
    }
    r["predicted"] = predicted;
    r["computed"] = computed;
    r["agree"] = rec.agree;
    r["containment"] = rec.containment;
    if (rec.k4_neighbours) {
      r["k4_between"] = {format_label(rec.k, rec.k4_neighbours->first), format_label(rec.k, rec.k4_neighbours->second)};
    }
    r["margin"] = rec.margin;
    records.push_back(std::move(r));
  }
  ordered_json out;
  out["grid"] = {{"k", report.k_grid}, {"n_max", report.n_max}};
  out["records"] = std::move(records);
  out["summary"] = {{"cells", report.records.size()},
                    {"agree", report.agreed},
                    {"disagree", report.disagreed},
                    {"skipped", report.skipped}};
  return out.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  write_csv_row(out, {"k", "n", "status", "case_234", "case_5", "margin", "predicted", "computed"});
  for (const auto& rec : report.records) {
    write_csv_row(out, {format_number(rec.k), std::to_string(rec.n),
                        rec.skipped ? "skipped" : (rec.agree ? "agree" : "disagree"),
                        rec.predicted ? to_string(rec.predicted->case_234) : "",
                        rec.predicted ? to_string(rec.predicted->case_5) : "", format_number(rec.margin),
                        join_labels(rec.k, rec.predicted_order), join_labels(rec.k, rec.computed_order)});
  }
  return out.str();
}

}  // namespace bessel
