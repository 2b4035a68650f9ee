#include "bessel/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bessel/errors.hpp"
#include "bessel/fk.hpp"
#include "bessel/gcurve.hpp"
#include "bessel/interlacing.hpp"
#include "bessel/rational.hpp"
#include "bessel/report.hpp"
#include "bessel/zeros.hpp"

namespace bessel {
namespace {

using nlohmann::ordered_json;

constexpr unsigned long kMaxDenominator = 1000000;

struct RunConfig {
  std::string k_text;
  int n = 1;
  int n_max = 0;
  int m = 0;
  double r_max = 0.0;
  int samples = 0;
  // Raw flag values; per-command defaults are applied after parsing.
  std::optional<int> n_max_flag;
  std::optional<double> r_max_flag;
  std::optional<int> samples_flag;
  std::string format;
  std::string output;
  double corrupt_threshold = 0.0;
};

class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational read_order(const std::string& text, std::ostream& err) {
  Rational k;
  try {
    k = parse_rational(text);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse order '" + text + "'");
  }
  if (is_decimal_literal(text)) {
    const Rational approx = nearest_rational(k, kMaxDenominator);
    err << "note: k = " << text << " read as " << to_string(approx) << "\n";
    k = approx;
  }
  if (k <= -1) throw DomainError("order must exceed -1 (got " + text + ")");
  return k;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw InvalidArgument("failed writing '" + path + "'");
}

ordered_json rational_json(const Rational& q) { return to_string(q); }

ordered_json points_json(const std::vector<CurvePoint>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& p : points) {
    ordered_json j;
    j["r"] = p.r;
    j["exact"] = p.exact_form();
    if (p.exact_s) j["s"] = rational_json(*p.exact_s);
    out.push_back(std::move(j));
  }
  return out;
}

ordered_json poly_json(const Polynomial<Rational>& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_json(c));
  return out;
}

std::string join_points(const std::vector<CurvePoint>& points) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += ' ';
    out += p.exact_form();
  }
  return out;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rational kq = read_order(cfg.k_text, err);
  if (cfg.n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  const ZeroTable table = first_zeros(Order(to_double(kq)), cfg.n_max);
  std::ostringstream text;
  if (cfg.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& z : table.entries()) rows.push_back({{"n", z.n}, {"value", z.value}, {"residual", z.residual}});
    text << ordered_json{{"k", to_string(kq)}, {"zeros", rows}}.dump(2) << "\n";
  } else {
    write_csv_row(text, {"n", "value", "residual"});
    for (const auto& z : table.entries()) {
      write_csv_row(text, {std::to_string(z.n), format_number(z.value), format_number(z.residual)});
    }
  }
  write_text(text.str(), cfg.output, out);
  return kExitOk;
}

int cmd_figure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rational kq = read_order(cfg.k_text, err);
  if (cfg.n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  if (cfg.samples < 2) throw InvalidArgument("--samples must be >= 2");
  const Order k(to_double(kq));
  const ZeroTable roots = first_zeros(k, cfg.n_max + 1);
  const ZeroTable asymptotes = first_zeros(k.shifted(1), cfg.n_max + 1);
  if (cfg.r_max_flag && !(*cfg.r_max_flag > 0)) throw InvalidArgument("--r-max must be positive");
  const double r_max = cfg.r_max_flag ? *cfg.r_max_flag : asymptotes[cfg.n_max + 1];

  std::vector<RationalCurve> curves;
  for (int m = 2; m <= 4; ++m) curves.push_back(g_curve(kq, m));
  const auto rows = sample_curves(k, curves, r_max, cfg.samples);
  const auto sequence = interlaced_sequence(k, 4, r_max);

  std::ostringstream samples_csv, sequence_csv, intersections_csv, branches_csv;
  write_csv_row(samples_csv, {"r", "F_k", "G_k2", "G_k3", "G_k4"});
  for (const auto& row : rows) {
    std::vector<std::string> cells{format_number(row.r), format_cell(row.fk)};
    for (const auto& g : row.g) cells.push_back(format_cell(g));
    write_csv_row(samples_csv, cells);
  }
  write_csv_row(sequence_csv, {"position", "zero", "value", "tie"});
  ordered_json sequence_json = ordered_json::array();
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& z = sequence[i];
    const std::string label = format_label(k.value(), z.label);
    write_csv_row(sequence_csv, {std::to_string(i + 1), label, format_number(z.value), z.tie ? "1" : "0"});
    sequence_json.push_back({{"zero", label}, {"value", z.value}, {"tie", z.tie}});
  }
  write_csv_row(intersections_csv, {"m", "region", "status", "r_star", "zero", "gap"});
  ordered_json intersections_json = ordered_json::array();
  for (const auto& curve : curves) {
    for (const auto& hit : intersect_regions(k, curve, cfg.n_max)) {
      const char* status = hit.status == IntersectionStatus::found  ? "found"
                           : hit.status == IntersectionStatus::none ? "none"
                                                                    : "indeterminate";
      std::vector<std::string> cells{std::to_string(curve.m), std::to_string(hit.region), status};
      ordered_json j{{"m", curve.m}, {"region", hit.region}, {"status", status}};
      if (hit.hit) {
        const std::string label = format_label(k.value(), Label{curve.m, hit.hit->zero.n});
        cells.insert(cells.end(), {format_number(hit.hit->r_star), label, format_number(hit.hit->gap)});
        j["r_star"] = hit.hit->r_star;
        j["zero"] = label;
        j["gap"] = hit.hit->gap;
      } else {
        cells.insert(cells.end(), {"", "", ""});
      }
      write_csv_row(intersections_csv, cells);
      intersections_json.push_back(std::move(j));
    }
  }
  write_csv_row(branches_csv, {"n", "lo", "hi", "root", "limit_at_origin"});
  ordered_json branches_json = ordered_json::array();
  for (int n = 1; n <= cfg.n_max + 1; ++n) {
    const double lo = n == 1 ? 0.0 : asymptotes[n - 1];
    const double hi = asymptotes[n];
    const std::optional<double> limit =
        n == 1 ? std::optional<double>(2 * (k.value() + 1)) : std::nullopt;
    write_csv_row(branches_csv, {std::to_string(n), format_number(lo), format_number(hi),
                                 format_number(roots[n]), format_cell(limit)});
    ordered_json j{{"n", n}, {"lo", lo}, {"hi", hi}, {"root", roots[n]}};
    if (limit) j["limit_at_origin"] = *limit;
    branches_json.push_back(std::move(j));
  }

  if (cfg.format == "json") {
    ordered_json samples_json = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j{{"r", row.r}, {"F_k", row.fk ? ordered_json(*row.fk) : ordered_json(nullptr)}};
      ordered_json g = ordered_json::array();
      for (const auto& v : row.g) g.push_back(v ? ordered_json(*v) : ordered_json(nullptr));
      j["G"] = std::move(g);
      samples_json.push_back(std::move(j));
    }
    ordered_json curves_json = ordered_json::array();
    for (const auto& c : curves) {
      curves_json.push_back({{"m", c.m}, {"formula", c.formula()}, {"poles", points_json(c.poles)},
                             {"roots", points_json(c.roots)}});
    }
    ordered_json doc{{"k", to_string(kq)}, {"n_max", cfg.n_max}, {"r_max", r_max},
                     {"curves", curves_json}, {"branches", branches_json}, {"sequence", sequence_json},
                     {"intersections", intersections_json}, {"samples", samples_json}};
    write_text(doc.dump(2) + "\n", cfg.output, out);
    return kExitOk;
  }
  if (!cfg.output.empty()) {
    std::filesystem::create_directories(cfg.output);
    const std::filesystem::path dir(cfg.output);
    write_text(samples_csv.str(), (dir / "samples.csv").string(), out);
    write_text(sequence_csv.str(), (dir / "sequence.csv").string(), out);
    write_text(intersections_csv.str(), (dir / "intersections.csv").string(), out);
    write_text(branches_csv.str(), (dir / "branches.csv").string(), out);
    return kExitOk;
  }
  out << "# branches\n" << branches_csv.str() << "\n# sequence\n" << sequence_csv.str()
      << "\n# intersections\n" << intersections_csv.str() << "\n# samples\n" << samples_csv.str();
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  std::vector<double> grid;
  if (cfg.k_text.empty()) {
    grid = default_k_grid();
  } else {
    grid.push_back(to_double(read_order(cfg.k_text, err)));
  }
  ClassifyOptions options;
  options.r_k_offset = cfg.corrupt_threshold;
  const VerificationReport report = verify_theorem(grid, cfg.n_max, options);
  write_text(cfg.format == "csv" ? report_to_csv(report) : report_to_json(report), cfg.output, out);
  err << "cells " << report.records.size() << ", agree " << report.agreed << ", disagree " << report.disagreed
      << ", skipped " << report.skipped << "\n";
  return report.all_agree() ? kExitOk : kExitDisagreement;
}

int cmd_gcurve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rational kq = read_order(cfg.k_text, err);
  if (cfg.m < 2) throw InvalidArgument("--m must be >= 2");
  if (cfg.samples < 0 || cfg.samples == 1) throw InvalidArgument("--samples must be 0 or >= 2");
  const RationalCurve curve = g_curve(kq, cfg.m);
  if (!(cfg.r_max > 0)) throw InvalidArgument("--r-max must be positive");
  const double r_max = cfg.r_max;
  std::vector<CurveSample> rows;
  if (cfg.samples >= 2) rows = sample_curves(Order(to_double(kq)), {curve}, r_max, cfg.samples);

  std::ostringstream text;
  if (cfg.format == "csv") {
    write_csv_row(text, {"m", "formula", "poles", "roots", "at_infinity"});
    std::string infinity = curve.at_infinity.kind == InfinityKind::diverges
                               ? (curve.at_infinity.sign > 0 ? "+inf" : "-inf")
                               : to_string(*curve.at_infinity.limit);
    write_csv_row(text, {std::to_string(curve.m), curve.formula(), join_points(curve.poles),
                         join_points(curve.roots), infinity});
    if (!rows.empty()) {
      text << "\n";
      write_csv_row(text, {"r", "G"});
      for (const auto& row : rows) write_csv_row(text, {format_number(row.r), format_cell(row.g.front())});
    }
  } else {
    ordered_json infinity;
    if (curve.at_infinity.kind == InfinityKind::diverges) {
      infinity = {{"kind", "diverges"}, {"sign", curve.at_infinity.sign}};
    } else {
      infinity = {{"kind", "constant"}, {"limit", rational_json(*curve.at_infinity.limit)}};
    }
    ordered_json doc{{"k", to_string(kq)}, {"m", curve.m}, {"ell", curve.ell()},
                     {"formula", curve.formula()}, {"P", poly_json(curve.P)}, {"Q", poly_json(curve.Q)},
                     {"poles", points_json(curve.poles)}, {"roots", points_json(curve.roots)},
                     {"at_infinity", infinity}, {"repeated_root", curve.repeated_root},
                     {"removable_factor", curve.removable_factor}};
    if (!rows.empty()) {
      ordered_json samples = ordered_json::array();
      for (const auto& row : rows) {
        samples.push_back({{"r", row.r}, {"G", row.g.front() ? ordered_json(*row.g.front()) : ordered_json(nullptr)}});
      }
      doc["samples"] = std::move(samples);
    }
    text << doc.dump(2) << "\n";
  }
  write_text(text.str(), cfg.output, out);
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rational kq = read_order(cfg.k_text, err);
  if (cfg.n < 1) throw InvalidArgument("--n must be >= 1");
  ClassifyOptions options;
  options.r_k_offset = cfg.corrupt_threshold;
  const InterlacingCase c = classify(Order(to_double(kq)), cfg.n, options);
  std::string predicted;
  for (const auto& l : c.predicted_order()) predicted += (predicted.empty() ? "" : " ") + format_label(c.k, l);

  std::ostringstream text;
  if (cfg.format == "csv") {
    write_csv_row(text, {"k", "n", "case_234", "case_5", "pole_in_branch", "predicted"});
    write_csv_row(text, {to_string(kq), std::to_string(c.n), to_string(c.case_234), to_string(c.case_5),
                         c.pole_in_branch ? "1" : "0", predicted});
  } else {
    const Thresholds t = thresholds(Order(to_double(kq)));
    ordered_json cmp = ordered_json::array();
    for (const auto& d : c.deciding_comparisons) {
      cmp.push_back({{"zero", d.zero}, {"zero_value", d.zero_value}, {"relation", std::string(1, d.relation)},
                     {"threshold", d.threshold}, {"threshold_value", d.threshold_value}});
    }
    ordered_json doc{{"k", to_string(kq)},
                     {"n", c.n},
                     {"thresholds", {{"r_k", t.r_k}, {"r_hat_k", t.r_hat_k}, {"r_k_plus_1", t.r_k_plus_1}}},
                     {"case_234", to_string(c.case_234)},
                     {"case_5", to_string(c.case_5)},
                     {"pole_in_branch", c.pole_in_branch},
                     {"deciding_comparisons", cmp},
                     {"predicted", predicted}};
    text << doc.dump(2) << "\n";
  }
  write_text(text.str(), cfg.output, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of Bessel functions and their interlacing"};
  app.name("bessel-interlace");
  app.require_subcommand(1);

  RunConfig cfg;
  const std::vector<std::string> formats{"csv", "json"};

  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", cfg.k_text, "order k > -1, as p/q, integer or decimal");
    if (required) opt->required();
  };
  auto* zeros = app.add_subcommand("zeros", "table of the first zeros of J_k");
  add_k(zeros, true);
  zeros->add_option("--n-max", cfg.n_max_flag, "number of zeros")->required();
  zeros->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  zeros->add_option("-o,--output", cfg.output, "output file; stdout if omitted");

  auto* figure = app.add_subcommand("figure", "plot data for F_k against G_{k,2..4}");
  add_k(figure, true);
  figure->add_option("--n-max", cfg.n_max_flag, "last branch index (default 8)");
  figure->add_option("--r-max", cfg.r_max_flag, "sampling ceiling (default j_{k+1,n_max+1})");
  figure->add_option("--samples", cfg.samples_flag, "sample count (default 2000)");
  figure->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  figure->add_option("-o,--output", cfg.output, "output directory (csv) or file (json)");

  auto* verify = app.add_subcommand("verify", "check the interlacing cases against computed zeros");
  add_k(verify, false);
  verify->add_option("--n-max", cfg.n_max_flag, "largest n (default 15)");
  verify->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  verify->add_option("-o,--output", cfg.output, "output file; stdout if omitted");
  verify->add_option("--corrupt-threshold", cfg.corrupt_threshold)->group("");

  auto* gcurve = app.add_subcommand("gcurve", "closed form, poles and roots of G_{k,m}");
  add_k(gcurve, true);
  gcurve->add_option("--m", cfg.m, "curve index m >= 2")->required();
  gcurve->add_option("--samples", cfg.samples_flag, "optional sample count");
  gcurve->add_option("--r-max", cfg.r_max_flag, "sampling ceiling (default 10)");
  gcurve->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  gcurve->add_option("-o,--output", cfg.output, "output file; stdout if omitted");

  auto* classify_cmd = app.add_subcommand("classify", "interlacing case for (k, n)");
  add_k(classify_cmd, true);
  classify_cmd->add_option("--n", cfg.n, "branch index n >= 1 (default 1)");
  classify_cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  classify_cmd->add_option("-o,--output", cfg.output, "output file; stdout if omitted");
  classify_cmd->add_option("--corrupt-threshold", cfg.corrupt_threshold)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (cfg.format.empty()) cfg.format = chosen == zeros || chosen == figure ? "csv" : "json";
  cfg.n_max = cfg.n_max_flag.value_or(chosen == figure ? 8 : 15);
  cfg.samples = cfg.samples_flag.value_or(chosen == figure ? 2000 : 0);
  cfg.r_max = cfg.r_max_flag.value_or(chosen == gcurve ? 10.0 : 0.0);
  try {
    if (chosen == zeros) return cmd_zeros(cfg, out, err);
    if (chosen == figure) return cmd_figure(cfg, out, err);
    if (chosen == verify) return cmd_verify(cfg, out, err);
    if (chosen == gcurve) return cmd_gcurve(cfg, out, err);
    return cmd_classify(cfg, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConvergenceFailure;
  }
}

}  // namespace bessel
