#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "bessel/cli.hpp"

using namespace bessel;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

// The block after "# name" up to the next blank line.
std::string section(const std::string& text, const std::string& name) {
  const auto start = text.find("# " + name + "\n");
  REQUIRE(start != std::string::npos);
  const auto body = start + name.size() + 3;
  const auto end = text.find("\n\n", body);
  return text.substr(body, end == std::string::npos ? std::string::npos : end - body + 1);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("zeros as csv") {
  const Run r = run({"zeros", "--k", "0", "--n-max", "3", "--format", "csv"});
  CHECK(r.code == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"n", "value", "residual"});
  CHECK(std::stod(rows[1][1]) == doctest::Approx(2.404825557695773).epsilon(1e-14));
  CHECK(std::stod(rows[2][1]) == doctest::Approx(5.520078110286311).epsilon(1e-14));
  CHECK(std::stod(rows[3][1]) == doctest::Approx(8.653727912911012).epsilon(1e-14));
  CHECK(rows[1][1].find('.') != std::string::npos);
}

TEST_CASE("invalid order") {
  const Run r = run({"zeros", "--k", "-1.5", "--n-max", "1"});
  CHECK(r.code == kExitInvalidArguments);
  CHECK(r.err.find("order must exceed -1") != std::string::npos);
  CHECK(run({"zeros", "--k", "-1", "--n-max", "1"}).code == kExitInvalidArguments);
  CHECK(run({"zeros", "--k", "x", "--n-max", "1"}).code == kExitInvalidArguments);
}

TEST_CASE("half order zeros are n pi") {
  const Run r = run({"zeros", "--k", "1/2", "--n-max", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  for (int n = 1; n <= 4; ++n) CHECK(std::fabs(std::stod(rows[n][1]) - n * std::numbers::pi) < 1e-10);
}

TEST_CASE("decimal orders are converted with a notice") {
  const Run r = run({"zeros", "--k", "0.5", "--n-max", "1", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("read as 1/2") != std::string::npos);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["k"] == "1/2");
  CHECK(doc["zeros"][0]["value"].get<double>() == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("argument errors exit 2") {
  CHECK(run({}).code == kExitInvalidArguments);
  CHECK(run({"zeros", "--k", "0"}).code == kExitInvalidArguments);
  CHECK(run({"zeros", "--k", "0", "--n-max", "2", "--format", "xml"}).code == kExitInvalidArguments);
  CHECK(run({"zeros", "--k", "0", "--n-max", "0"}).code == kExitInvalidArguments);
  CHECK(run({"figure", "--k", "0", "--samples", "1"}).code == kExitInvalidArguments);
  CHECK(run({"gcurve", "--k", "2", "--m", "1"}).code == kExitInvalidArguments);
  CHECK(run({"classify", "--k", "2", "--n", "0"}).code == kExitInvalidArguments);
  CHECK(run({"bogus"}).code == kExitInvalidArguments);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("figure for k = 2 reproduces the ordering") {
  const Run r = run({"figure", "--k", "2", "--n-max", "8"});
  CHECK(r.code == kExitOk);
  const std::string sequence = section(r.out, "sequence");
  CHECK(sequence.find("1,\"j_{2,1}\",") != std::string::npos);
  CHECK(sequence.find("2,\"j_{3,1}\",") != std::string::npos);
  CHECK(sequence.find("3,\"j_{4,1}\",") != std::string::npos);
  CHECK(sequence.find("4,\"j_{2,2}\",") != std::string::npos);
  CHECK(sequence.find("5,\"j_{5,1}\",") != std::string::npos);

  const auto intersections = csv_rows(section(r.out, "intersections"));
  int found = 0;
  for (const auto& row : intersections) found += row.size() > 2 && row[2] == "found";
  CHECK(found == 8 + 8 + 7);
}

TEST_CASE("figure for k = 0 keeps the first branch below 2") {
  const Run r = run({"figure", "--k", "0", "--n-max", "2"});
  CHECK(r.code == kExitOk);
  const auto rows = csv_rows(section(r.out, "samples"));
  const double first_pole = 3.8317059702075123;
  int checked = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    if (x >= first_pole || rows[i][1].empty()) continue;
    CHECK(std::stod(rows[i][1]) < 2.0);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("figure leaves F_k blank at the poles") {
  const Run r = run({"figure", "--k", "2", "--n-max", "3", "--r-max", "20", "--samples", "2000"});
  CHECK(r.code == kExitOk);
  const auto rows = csv_rows(section(r.out, "samples"));
  const double poles[] = {6.380161895923983, 9.761023129981670, 13.015200721698434, 16.223466160318768,
                          19.409415226435012};
  int blanks = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    bool near = false;
    for (double p : poles) near = near || std::fabs(x - p) < 0.005;
    CHECK(rows[i][1].empty() == near);
    blanks += rows[i][1].empty();
  }
  CHECK(blanks == 5);
}

TEST_CASE("figure writes files when asked") {
  const auto dir = std::filesystem::temp_directory_path() / "bessel_figure_test";
  std::filesystem::remove_all(dir);
  CHECK(run({"figure", "--k", "2", "--n-max", "2", "--output", dir.string()}).code == kExitOk);
  for (const char* name : {"samples.csv", "sequence.csv", "intersections.csv", "branches.csv"}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  const auto json_path = dir / "figure.json";
  CHECK(run({"figure", "--k", "2", "--n-max", "2", "--format", "json", "--output", json_path.string()}).code ==
        kExitOk);
  std::ifstream in(json_path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["curves"][1]["formula"] == "6 - r^2/8");
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--k", "2", "--n-max", "8", "--format", "json"});
  CHECK(ok.code == kExitOk);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["records"].size() == 8);
  for (const auto& rec : doc["records"]) CHECK(rec["agree"] == true);

  const Run bad = run({"verify", "--k", "2", "--n-max", "8", "--corrupt-threshold", "5"});
  CHECK(bad.code == kExitDisagreement);
  CHECK(nlohmann::json::parse(bad.out)["summary"]["disagree"].get<int>() > 0);
}

TEST_CASE("gcurve") {
  const Run g3 = run({"gcurve", "--k", "2", "--m", "3"});
  CHECK(g3.code == kExitOk);
  const auto d3 = nlohmann::json::parse(g3.out);
  CHECK(d3["formula"] == "6 - r^2/8");
  CHECK(d3["roots"][0]["exact"] == "4*sqrt(3)");
  CHECK(d3["at_infinity"]["kind"] == "diverges");

  const auto d4 = nlohmann::json::parse(run({"gcurve", "--k", "2", "--m", "4"}).out);
  CHECK(d4["poles"][0]["exact"] == "4*sqrt(5)");
  CHECK(d4["roots"][0]["exact"] == "sqrt(30)");
  CHECK(d4["P"] == nlohmann::json::array({"80", "-1"}));
  CHECK(d4["Q"] == nlohmann::json::array({"10"}));

  const auto d2 = nlohmann::json::parse(run({"gcurve", "--k", "0", "--m", "2"}).out);
  CHECK(d2["formula"] == "2");
  CHECK(d2["poles"].empty());
  CHECK(d2["at_infinity"]["limit"] == "2");

  const auto sampled = nlohmann::json::parse(run({"gcurve", "--k", "2", "--m", "4", "--samples", "10"}).out);
  CHECK(sampled["samples"].size() == 10);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--k", "2", "--n", "1"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["case_234"] == "B");
  CHECK(doc["case_5"] == "(j_{k+1,n+1}, j_{k+2,n+1})");
  CHECK(doc["predicted"] == "j_{3,1} j_{4,1} j_{2,2} j_{5,1} j_{3,2} j_{6,1} j_{4,2}");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"figure", "--k", "7/3", "--n-max", "3"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> verify{"verify", "--k", "1", "--n-max", "5"};
  CHECK(run(verify).out == run(verify).out);
}

}  // TEST_SUITE
