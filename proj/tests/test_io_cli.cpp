#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "spanlines/cli.hpp"
#include "spanlines/inequalities.hpp"
#include "spanlines/io.hpp"

using namespace spanlines;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "spanlines_cli_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("12345678901234567890124/3") == Rational(Integer("12345678901234567890124"), 3));
  CHECK(parse_rational("12345678901234567890123/3") == Rational(Integer("4115226300411522630041")));
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("abc"), FormatError);
  CHECK_THROWS_AS(parse_rational(""), FormatError);
}

TEST_CASE("configurations round-trip through JSON") {
  const Field& q5 = Field::get(FieldDescriptor::quadratic(5));
  const Configuration golden(q5.descriptor(),
                             {ProjectivePoint::affine(q5.sqrt_d(), q5.from_integer(1)),
                              ProjectivePoint::affine(q5.from_integer(0), q5.sqrt_d() / q5.from_integer(3)),
                              ProjectivePoint(q5.from_integer(1), q5.from_integer(0), q5.from_integer(0))},
                             "golden");
  for (const auto& c : {fermat(5), boroczky(7), grid(3, 2), random_config(20, 4, 80), golden}) {
    CAPTURE(c.label());
    const json j = configuration_to_json(c);
    CHECK(configuration_from_json(j) == c);
    CHECK(configuration_from_json(json::parse(j.dump())) == c);
  }
}

TEST_CASE("malformed configuration files are rejected") {
  auto parse = [](const std::string& text) { return configuration_from_json(json::parse(text)); };
  CHECK_THROWS_AS(parse(R"({"points": []})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"field": {"kind": "rational"}, "points": [["1", "2"]]})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"field": {"kind": "cyclotomic", "N": 5}, "points": [[["1"], ["0"], ["1"]]]})"),
                  FormatError);
  CHECK_THROWS_AS(parse(R"({"field": {"kind": "quadratic", "d": 9}, "points": []})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"field": {"kind": "octonion"}, "points": []})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"field": {"kind": "rational"}, "points": [["1", "1", "1"], ["2", "2", "2"]]})"),
                  DuplicatePointError);
  CHECK_THROWS_AS(read_configuration("/nonexistent/spanlines.json"), FormatError);
}

TEST_CASE("a fabricated spectrum that violates a proven bound is reported as a failure") {
  // Nine real points cannot span twelve 3-point lines; Melchior rejects it.
  LineSpectrum s;
  s.n = 9;
  s.ell = {{3, 12}};
  s.total_lines = 12;
  s.incidences = 36;
  s.max_collinear = 3;
  s.degrees.assign(9, 4);
  CHECK(any_failure(run_checks(s, true)));
  CHECK_FALSE(any_failure(run_checks(s, false)));
}

TEST_CASE("cli: generate, analyze, check, render") {
  TempDir tmp;
  const std::string config = tmp.file("b6.json");
  Run r = cli_run({"generate", "boroczky", "--m", "6", "--out", config});
  REQUIRE(r.code == cli::kSuccess);
  const json summary = json::parse(r.out);
  CHECK(summary["expected_spectrum"]["total_lines"] == 22);
  CHECK(read_configuration(config) == boroczky(6));

  r = cli_run({"analyze", config});
  REQUIRE(r.code == cli::kSuccess);
  const json s = json::parse(r.out);
  CHECK(s["total_lines"] == 22);
  CHECK(s["incidences"] == 63);
  CHECK(s["real"] == true);

  r = cli_run({"--format", "csv", "analyze", config});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.out.find("total_lines,22") != std::string::npos);

  r = cli_run({"check", config});
  CHECK(r.code == cli::kSuccess);
  CHECK(json::parse(r.out).is_array());
  r = cli_run({"check", config, "langer", "--format", "csv"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.rfind("name,kind,applicable,satisfied,tight,slack_approx\nlanger,", 0) == 0);
  r = cli_run({"check", config, "not_a_check"});
  CHECK(r.code == cli::kUsageOrIoError);

  const std::string svg = tmp.file("b6.svg");
  r = cli_run({"render", config, "--out", svg});
  CHECK(r.code == cli::kSuccess);
  CHECK(slurp(svg).find("<svg") != std::string::npos);

  const std::string fermat_file = tmp.file("f3.json");
  REQUIRE(cli_run({"generate", "fermat", "--m", "3", "--out", fermat_file}).code == cli::kSuccess);
  r = cli_run({"render", fermat_file});
  CHECK(r.code == cli::kUsageOrIoError);
  CHECK(r.err.find("non-real") != std::string::npos);
}

TEST_CASE("cli: generate without --out writes the configuration to stdout") {
  const Run r = cli_run({"generate", "near-pencil", "--n", "5"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(configuration_from_json(json::parse(r.out)) == near_pencil(5));
  CHECK(json::parse(r.err)["expected_spectrum"]["total_lines"] == 5);
}

TEST_CASE("cli: errors give exit code 1") {
  TempDir tmp;
  CHECK(cli_run({}).code == cli::kUsageOrIoError);
  CHECK(cli_run({"frobnicate"}).code == cli::kUsageOrIoError);
  CHECK(cli_run({"analyze", tmp.file("missing.json")}).code == cli::kUsageOrIoError);
  CHECK(cli_run({"generate", "fermat", "--m", "2"}).code == cli::kUsageOrIoError);
  CHECK(cli_run({"--format", "xml", "analyze", "x.json"}).code == cli::kUsageOrIoError);
  write_text(tmp.file("dup.json"), R"({"field": {"kind": "rational"}, "points": [["0","0","1"], ["0","0","2"]]})");
  const Run dup = cli_run({"analyze", tmp.file("dup.json")});
  CHECK(dup.code == cli::kUsageOrIoError);
  CHECK(dup.err.find("duplicate") != std::string::npos);
  write_text(tmp.file("broken.json"), "{not json");
  CHECK(cli_run({"analyze", tmp.file("broken.json")}).code == cli::kUsageOrIoError);
  CHECK(cli_run({"search", "annealing"}).code == cli::kUsageOrIoError);
  CHECK(cli_run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("cli: --threads never changes output bytes") {
  TempDir tmp;
  const std::string config = tmp.file("r.json");
  REQUIRE(cli_run({"--seed", "3", "generate", "random", "--n", "120", "--out", config}).code == cli::kSuccess);
  for (const std::string command : {"analyze", "check"}) {
    const Run one = cli_run({command, config, "--threads", "1"});
    const Run four = cli_run({command, config, "--threads", "4"});
    CHECK(one.code == four.code);
    CHECK(one.out == four.out);
  }
  const std::vector<std::string> search = {"search", "local", "--n", "8", "--iterations", "100", "--restarts", "2"};
  auto with_threads = [&](const std::string& t) {
    auto args = search;
    args.insert(args.end(), {"--threads", t});
    return cli_run(args).out;
  };
  CHECK(with_threads("1") == with_threads("2"));
}

TEST_CASE("cli: search records") {
  Run r = cli_run({"search", "exhaustive", "--n", "5", "--grid", "3", "--cap", "3"});
  REQUIRE(r.code == cli::kSuccess);
  const json record = json::parse(r.out);
  CHECK(record["method"] == "exhaustive");
  CHECK(record["complete"] == true);
  CHECK(record.contains("incidence_conjecture"));

  TempDir tmp;
  const std::string checkpoint = tmp.file("ckpt.json");
  const std::vector<std::string> base = {"--seed", "9", "search", "local", "--n", "7", "--iterations", "200",
                                         "--restarts", "2"};
  const std::string straight = cli_run(base).out;
  auto args = base;
  args.insert(args.end(), {"--checkpoint", checkpoint, "--checkpoint-every", "25", "--stop-after", "130"});
  REQUIRE(cli_run(args).code == cli::kSuccess);
  args = base;
  args.insert(args.end(), {"--checkpoint", checkpoint});
  const std::string resumed = cli_run(args).out;
  CHECK(json::parse(resumed)["best_points"] == json::parse(straight)["best_points"]);
  CHECK(json::parse(resumed)["history"] == json::parse(straight)["history"]);
}
