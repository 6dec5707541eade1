#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "catalog_data.hpp"
#include "cli.hpp"
#include "rbd/design_io.hpp"
#include "rbd/efficiency.hpp"

using namespace rbd;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rbd-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("generate reproduces the published galaxy design") {
  const auto r = run({"generate", "--family", "gamma", "--variant", "RC", "--r", "8"});
  REQUIRE(r.code == cli::kOk);
  CHECK(read_design(r.out) == read_design(data::kGammaRC8));
  const auto d = run({"generate", "--family", "delta", "--variant", "rc", "--r", "8"});
  CHECK(read_design(d.out) == read_design(data::kDeltaRC8));
}

TEST_CASE("evaluate prints the exact A-value and spectrum") {
  const auto r = run({"evaluate", "theta-8"});
  REQUIRE(r.code == cli::kOk);
  CHECK(has_line(r.out, "A: 0.8549"));
  CHECK(has_line(r.out, "A_exact: 7007/8196"));
  CHECK(has_line(r.out, "connected: yes"));
  const auto csv = run({"--format", "csv", "evaluate", "gamma-rc-8"});
  CHECK(has_line(csv.out, "factor,exact,multiplicity"));
  CHECK(has_line(csv.out, "0.9167,11/12,9"));
  const auto precise = run({"--precision", "7", "evaluate", "gamma-5"});
  CHECK(has_line(precise.out, "A: 0.8382815"));
}

TEST_CASE("evaluate reads designs from stdin and files") {
  const auto text = write_design(read_design(data::kDeltaRC8));
  const auto piped = run({"evaluate", "-"}, text);
  CHECK(piped.code == cli::kOk);
  CHECK(has_line(piped.out, "A_exact: 7007/8196"));
  const auto path = scratch("delta.txt");
  write_design_file(path.string(), read_design(text));
  CHECK(run({"evaluate", path.string()}).code == cli::kOk);
}

TEST_CASE("robustness report") {
  const auto r = run({"robustness", "gamma-rc-5"});
  REQUIRE(r.code == cli::kOk);
  CHECK(has_line(r.out, "average: 0.8364"));
  CHECK(has_line(r.out, "worst: 0.8341"));
}

TEST_CASE("isomorphism verdicts and exit codes") {
  CHECK(run({"isomorphic", "gamma-r-2", "gamma-c-2"}).code == cli::kOk);
  const auto no = run({"isomorphic", "gamma-r-3", "gamma-c-3"});
  CHECK(no.code == cli::kNegative);
  CHECK(has_line(no.out, "isomorphic: no"));
  CHECK(has_line(no.out, "same_spectrum: yes"));
  const auto w = run({"isomorphic", "gamma-rc-8", "gamma-rc-8", "--witness"});
  CHECK(w.code == cli::kOk);
  CHECK(w.out.find("maps_to") != std::string::npos);
}

TEST_CASE("automorphism order and Sylvester check") {
  CHECK(has_line(run({"autorder", "delta-rc-8"}).out, "automorphism_order: 144"));
  const auto yes = run({"sylvester-check", "theta-8", "--witness"});
  CHECK(yes.code == cli::kOk);
  CHECK(has_line(yes.out, "sylvester_design: yes"));
  CHECK(run({"sylvester-check", "gamma-rc-7"}).code == cli::kShape);
}

TEST_CASE("dual report and output") {
  const auto path = scratch("dual.txt");
  const auto r = run({"dual", "delta-5", "-o", path.string()});
  REQUIRE(r.code == cli::kOk);
  CHECK(has_line(r.out, "dual_resolvable: yes"));
  CHECK(has_line(r.out, "semi_latin_square: yes"));
  CHECK(has_line(r.out, "roy_residual: 0"));
  const auto back = read_design_file(path.string());
  CHECK(validate(back).empty());
  CHECK(back.r() == 6);
  CHECK(run({"dual", "gamma-rc-3", "-o", scratch("x.txt").string()}).code == cli::kShape);
}

TEST_CASE("catalog and export") {
  const auto c = run({"--format", "csv", "catalog"});
  CHECK(c.code == cli::kOk);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 50);
  const auto e = run({"export", "theta-8"});
  CHECK(read_design(e.out).label() == "theta-8");
  const auto dir = scratch("export");
  CHECK(run({"export", "--all", "--dir", dir.string()}).code == cli::kOk);
  CHECK(std::filesystem::exists(dir / "delta-rc-4.txt"));
}

TEST_CASE("search output is deterministic and readable") {
  const std::vector<std::string> args{"search", "--r", "3", "--restarts", "2", "--seed", "5", "--moves", "40"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  const auto design_text = a.out.substr(0, a.out.find("\nseed:"));
  const auto d = read_design(design_text);
  CHECK(validate(d).empty());
  CHECK(has_line(a.out, "A_exact: " + to_fraction_string(a_value(d))));
  CHECK(has_line(a.out, "step,temperature,current,best,acceptance"));
}

TEST_CASE("failure exit codes") {
  CHECK(run({"evaluate", "-"}, "1 2 3\n4 5 x\n").code == cli::kParse);
  const auto one = run({"generate", "--family", "gamma", "--r", "1"});
  CHECK(run({"evaluate", "-"}, one.out).code == cli::kDisconnected);
  CHECK(run({"generate", "--family", "gamma", "--variant", "RC", "--r", "9"}).code == cli::kShape);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"evaluate"}).code == cli::kUsage);
  CHECK(run({"search", "--r", "1"}).code == cli::kFailure);
  CHECK(run({"evaluate", "/no/such/file"}).code == cli::kFailure);
}

TEST_CASE("durations") {
  CHECK(cli::parse_duration("60s") == 60.0);
  CHECK(cli::parse_duration("250ms") == doctest::Approx(0.25));
  CHECK(cli::parse_duration("2m") == 120.0);
  CHECK(cli::parse_duration("1.5") == 1.5);
  CHECK_THROWS(cli::parse_duration("ten"));
  CHECK_THROWS(cli::parse_duration("5d"));
}
