#include "spanlines/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "spanlines/constructions.hpp"
#include "spanlines/inequalities.hpp"
#include "spanlines/io.hpp"
#include "spanlines/render.hpp"
#include "spanlines/search.hpp"

namespace spanlines::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

void emit(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw FormatError("cannot write " + g.out);
  file << text;
}

json expected_to_json(const ExpectedSpectrum& e) {
  json ell = json::object();
  for (const auto& [i, count] : e.ell) ell[std::to_string(i)] = count;
  return {{"n", e.n},
          {"ell", ell},
          {"total_lines", e.total_lines},
          {"incidences", e.incidences},
          {"max_collinear", e.max_collinear},
          {"formula", e.formula}};
}

int cmd_generate(const GlobalOptions& g, ConstructionSpec spec, const std::string& name, std::ostream& out,
                 std::ostream& err) {
  spec.name = parse_construction_name(name);
  spec.seed = g.seed;
  const Configuration config = generate(spec);
  const auto expected = expected_spectrum(spec);
  json summary = {{"construction", to_string(spec.name)},
                  {"label", config.label()},
                  {"field", field_to_json(config.field())},
                  {"n", config.size()},
                  {"expected_spectrum", expected ? expected_to_json(*expected) : json()}};
  if (g.out.empty()) {
    out << configuration_to_json(config).dump(2) << '\n';
    err << summary.dump(2) << '\n';
  } else {
    write_configuration(config, g.out);
    out << summary.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_analyze(const GlobalOptions& g, const std::string& input, std::ostream& out) {
  const Configuration config = read_configuration(input);
  const LineSpectrum s = spectrum(config, {g.threads});
  const bool real = config.is_real();
  if (g.format == "csv") {
    emit(g, spectrum_to_csv(s, real), out);
  } else {
    json j = spectrum_to_json(s, real);
    j["label"] = config.label();
    j["field"] = field_to_json(config.field());
    emit(g, j.dump(2) + "\n", out);
  }
  return kSuccess;
}

int cmd_check(const GlobalOptions& g, const std::string& input, const std::string& which, std::ostream& out) {
  const Configuration config = read_configuration(input);
  const LineSpectrum s = spectrum(config, {g.threads});
  const auto reports = run_checks(s, config.is_real(), which);
  if (g.format == "csv") {
    emit(g, reports_to_csv(reports), out);
  } else {
    emit(g, reports_to_json(reports).dump(2) + "\n", out);
  }
  return any_failure(reports) ? kProvenInequalityViolated : kSuccess;
}

int cmd_render(const GlobalOptions& g, const std::string& input, std::ostream& out) {
  const Configuration config = read_configuration(input);
  const LineMap lines = spanned_lines(config, {g.threads});
  emit(g, render_svg(config, lines), out);
  return kSuccess;
}

struct SearchArgs {
  std::string method;
  std::size_t n = 6;
  int grid = 4;
  std::size_t cap = 3;
  std::int64_t bound = 0;
  std::uint64_t iterations = 2000;
  std::uint64_t restarts = 4;
  std::string objective = "incidences";
  bool no_prune = false;
  std::string checkpoint;
  std::uint64_t checkpoint_every = 500;
  std::uint64_t stop_after = 0;
  std::string initial;
};

int cmd_search(const GlobalOptions& g, const SearchArgs& a, std::ostream& out) {
  SearchRecord record;
  if (a.method == "exhaustive") {
    ExhaustiveOptions o;
    o.n = a.n;
    o.grid_side = a.grid;
    o.cap = a.cap;
    o.objective = parse_objective(a.objective);
    o.symmetry_pruning = !a.no_prune;
    record = exhaustive_search(o);
  } else if (a.method == "local") {
    LocalSearchOptions o;
    o.n = a.n;
    o.bound = a.bound;
    o.cap = a.cap;
    o.iterations = a.iterations;
    o.restarts = a.restarts;
    o.seed = g.seed;
    o.objective = parse_objective(a.objective);
    o.threads = g.threads;
    o.checkpoint_path = a.checkpoint;
    o.checkpoint_every = a.checkpoint_every;
    o.stop_after = a.stop_after;
    if (!a.initial.empty()) {
      const Configuration start = read_configuration(a.initial);
      std::vector<GridPoint> points;
      for (const auto& p : start.points()) {
        const bool integral = start.field().kind == FieldKind::rational && p[2].is_one() &&
                              p[0].rational_part().get_den() == 1 && p[1].rational_part().get_den() == 1;
        if (!integral) throw FormatError("--initial needs affine integer points");
        points.push_back({p[0].rational_part().get_num().get_si(), p[1].rational_part().get_num().get_si()});
      }
      o.initial = std::move(points);
    }
    record = local_search(o);
  } else {
    throw std::invalid_argument("unknown search method: " + a.method + " (expected exhaustive or local)");
  }
  emit(g, search_record_to_json(record).dump(2) + "\n", out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanned-line spectra of planar point configurations in exact arithmetic", "spanlines"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Output path (default: stdout)");
  app.add_option("--seed", g.seed, "Seed for random constructions and local search");
  app.add_option("--threads", g.threads, "Worker threads (affects speed only)")->check(CLI::Range(1u, 256u));

  ConstructionSpec spec;
  std::string construction;
  auto* generate_cmd = app.add_subcommand("generate", "Write a named configuration");
  generate_cmd->add_option("construction", construction,
                           "fermat | boroczky | cuspidal-cubic | two-lines | near-pencil | grid | random")
      ->required();
  generate_cmd->add_option("--m", spec.m, "Size for fermat, boroczky, two-lines");
  generate_cmd->add_option("--k", spec.k, "Parameter range for cuspidal-cubic");
  generate_cmd->add_option("--n", spec.n, "Point count for near-pencil and random");
  generate_cmd->add_option("--a", spec.a, "Grid width");
  generate_cmd->add_option("--b", spec.b, "Grid height");
  generate_cmd->add_option("--bound", spec.bound, "Coordinate bound for random (default 4n)");

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Spanned-line spectrum of a configuration file");
  analyze_cmd->add_option("input", input, "Configuration JSON")->required();

  std::string which;
  bool all = false;
  auto* check_cmd = app.add_subcommand("check", "Evaluate the identities and inequalities");
  check_cmd->add_option("input", input, "Configuration JSON")->required();
  check_cmd->add_option("name", which, "Check name (default: all)");
  check_cmd->add_flag("--all", all, "Run every check");

  auto* render_cmd = app.add_subcommand("render", "Draw a real configuration as SVG");
  render_cmd->add_option("input", input, "Configuration JSON")->required();

  SearchArgs s;
  auto* search_cmd = app.add_subcommand("search", "Search for configurations with few incidences");
  search_cmd->add_option("method", s.method, "exhaustive | local")->required();
  search_cmd->add_option("--n", s.n, "Point count");
  search_cmd->add_option("--grid", s.grid, "Grid side (exhaustive)");
  search_cmd->add_option("--cap", s.cap, "Maximum number of collinear points");
  search_cmd->add_option("--bound", s.bound, "Coordinate bound (local, default 4n)");
  search_cmd->add_option("--iterations", s.iterations, "Moves per restart (local)");
  search_cmd->add_option("--restarts", s.restarts, "Restarts (local)");
  search_cmd->add_option("--objective", s.objective, "incidences | lines");
  search_cmd->add_flag("--no-prune", s.no_prune, "Disable symmetry pruning (exhaustive)");
  search_cmd->add_option("--checkpoint", s.checkpoint, "Checkpoint file to resume from and update (local)");
  search_cmd->add_option("--checkpoint-every", s.checkpoint_every, "Moves between checkpoint writes");
  search_cmd->add_option("--stop-after", s.stop_after, "Stop after this many moves, leaving a checkpoint");
  search_cmd->add_option("--initial", s.initial, "Configuration file with the first restart's start");

  std::vector<const char*> argv{"spanlines"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrIoError;
  }

  try {
    if (*generate_cmd) return cmd_generate(g, spec, construction, out, err);
    if (*analyze_cmd) return cmd_analyze(g, input, out);
    if (*check_cmd) return cmd_check(g, input, all || which.empty() ? "all" : which, out);
    if (*render_cmd) return cmd_render(g, input, out);
    if (*search_cmd) return cmd_search(g, s, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIoError;
  }
  return kUsageOrIoError;
}

}  // namespace spanlines::cli
