// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "spanlines/cli.hpp"
#include "spanlines/constructions.hpp"
#include "spanlines/inequalities.hpp"
#include "spanlines/io.hpp"
#include "spanlines/search.hpp"

using namespace spanlines;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void expect(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

Rational q(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }

std::vector<Configuration> property_suite() {
  std::vector<Configuration> out;
  for (int m = 3; m <= 12; ++m) out.push_back(fermat(m));
  for (int m = 3; m <= 20; ++m) out.push_back(boroczky(m));
  for (int m = 2; m <= 15; ++m) out.push_back(two_lines(m));
  for (int n = 3; n <= 30; ++n) out.push_back(near_pencil(n));
  for (int k = 2; k <= 15; ++k) out.push_back(cuspidal_cubic(k));
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      if (a * b >= 2) out.push_back(grid(a, b));
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 38);
    // Small bounds force collinearities; large ones give general position.
    const std::int64_t bound = seed % 3 == 0 ? n : seed % 3 == 1 ? 2 * n : 10 * n;
    out.push_back(random_config(n, 1000 + seed, bound));
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  for (int m = 3; m <= 12; ++m) {
    const LineSpectrum s = spectrum(fermat(m));
    const Rational n = q(s.n);
    const std::string tag = "fermat(" + std::to_string(m) + ")";
    o.expect(q(s.total_lines) == n * n / 9 + 3, tag + ": |L| != n^2/9 + 3");
    o.expect(q(s.incidences) == n * (n + 3) / 3, tag + ": I != n(n+3)/3");
    o.expect(s.at(2) == 0, tag + ": ordinary lines present");
    for (auto d : s.degrees) o.expect(q(d) == (n + 3) / 3, tag + ": point degree != (n+3)/3");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int m = 3; m <= 20; ++m) {
    const Configuration c = boroczky(m);
    const LineSpectrum s = spectrum(c);
    const Rational n = q(s.n);
    const std::string tag = "boroczky(" + std::to_string(m) + ")";
    o.expect(q(s.incidences) == 3 * n * (n + 2) / 8, tag + ": I != 3n(n+2)/8");
    o.expect(s.total_lines == static_cast<std::uint64_t>(m * (m - 1) / 2 + m + 1), tag + ": |L| != C(m,2)+m+1");
    for (int j = 0; j < m; ++j) o.expect(q(s.degrees[j]) == n / 2, tag + ": conic point degree != n/2");
    for (const auto& p : c.points()) {
      for (const auto& x : p.coords()) o.expect(x.is_real(), tag + ": coordinate fails is_real");
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int m = 3; m <= 12; ++m) {
    const LineSpectrum s = spectrum(fermat(m));
    const auto langer = check_langer(s);
    const auto dirac = check_weak_dirac(s);
    o.expect(langer.applicable && langer.slack == 0, "langer slack != 0 on fermat(" + std::to_string(m) + ")");
    o.expect(dirac.applicable && dirac.slack == 0, "weak dirac slack != 0 on fermat(" + std::to_string(m) + ")");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int m = 3; m <= 12; ++m) {
    const auto r = check_melchior(spectrum(fermat(m)), false);
    o.expect(!r.satisfied && r.slack < 0, "melchior not violated on fermat(" + std::to_string(m) + ")");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 39);
    const Configuration c = random_config(n, seed, seed % 2 ? n : 4 * n);
    o.expect(spanned_lines(c) == oracle_spanned_lines(c), "mismatch on " + c.label());
    ++compared;
  }
  for (const auto& c : property_suite()) {
    if (c.size() > 40) continue;
    o.expect(spanned_lines(c) == oracle_spanned_lines(c), "mismatch on " + c.label());
    ++compared;
  }
  if (o.pass) o.detail = std::to_string(compared) + " configurations";
  return o;
}

Outcome criterion6and7(Outcome& seven) {
  Outcome o;
  std::size_t evaluated = 0;
  for (const auto& c : property_suite()) {
    const LineSpectrum s = spectrum(c);
    const auto reports = run_checks(s, c.is_real());
    for (const auto& r : reports) {
      o.expect(!r.is_failure(), r.name + " violated on " + c.label());
      if (r.kind == ReportKind::identity) o.expect(r.satisfied, r.name + " identity fails on " + c.label());
      evaluated += r.applicable;
    }
    const auto langer = check_langer(s);
    const auto sum_form = check_bojanowski(s)[1];
    seven.expect(langer.satisfied == sum_form.satisfied && langer.tight == sum_form.tight,
                 "verdicts differ on " + c.label());
  }
  if (o.pass) o.detail = std::to_string(evaluated) + " applicable reports";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 engine(8);
  std::uniform_int_distribution<long> entry(-4, 4);
  const std::vector<Configuration> configs = {fermat(3),         fermat(5),        boroczky(5),   boroczky(8),
                                              cuspidal_cubic(5), two_lines(5),     near_pencil(8), grid(3, 4),
                                              grid(5, 5),        random_config(25, 4, 25)};
  for (const auto& c : configs) {
    const LineSpectrum reference = spectrum(c);
    const Field& f = Field::get(c.field());
    for (int trial = 0; trial < 20; ++trial) {
      Matrix3 m;
      do {
        for (auto& row : m) {
          for (auto& x : row) x = f.from_integer(entry(engine));
        }
      } while (determinant(m[0], m[1], m[2]).is_zero());
      const LineSpectrum s = spectrum(apply_projective_map(c, m));
      o.expect(s.ell == reference.ell && s.degrees == reference.degrees, "spectrum changed on " + c.label());
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const LineSpectrum cubic = spectrum(cuspidal_cubic(30));
  o.expect(cubic.n == 60, "cuspidal_cubic(30) does not have 60 points");
  const Rational ratio = q(cubic.total_lines) / (q(cubic.n) * q(cubic.n));
  o.expect(ratio >= Rational(1, 6) - Rational(1, 50) && ratio <= Rational(1, 6) + Rational(1, 50),
           "|L|/n^2 outside [1/6 - 0.02, 1/6 + 0.02]");
  for (int m = 2; m <= 15; ++m) {
    const LineSpectrum s = spectrum(two_lines(m));
    const Rational n = q(s.n);
    o.expect(q(s.incidences) == n * n / 2 + n, "two_lines(" + std::to_string(m) + "): I != n^2/2 + n");
  }
  if (o.pass) {
    o.detail = "cubic |L|/n^2 = " + q(cubic.total_lines).get_str() + "/3600 ~ " + approx_decimal(ratio);
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  ExhaustiveOptions options;
  options.n = 6;
  options.grid_side = 4;
  options.cap = 3;
  const auto start = std::chrono::steady_clock::now();
  const SearchRecord first = exhaustive_search(options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const SearchRecord second = exhaustive_search(options);
  o.expect(seconds < 300, "exhaustive search took longer than 5 minutes");
  o.expect(first.complete, "search did not complete");
  o.expect(first.best_points == second.best_points && first.best_value == second.best_value &&
               first.history == second.history,
           "search is not deterministic");
  const LineSpectrum s = spectrum(first.best_config());
  o.expect(q(s.incidences) / 36 == first.objective, "optimum's spectrum does not recompute to the objective");
  o.expect(s.max_collinear <= 3, "optimum violates the collinearity cap");
  const nlohmann::json record = search_record_to_json(first);
  o.expect(record.contains("incidence_conjecture") && record["incidence_conjecture"].contains("extras"),
           "conjecture report missing from the search record");
  if (o.pass) {
    o.detail = "I = " + std::to_string(first.best_value) + ", I/n^2 = " + first.objective.get_str() +
               " vs 3/8, incidence_conjecture satisfied = " + (record["incidence_conjecture"]["satisfied"].get<bool>() ? "true" : "false");
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  const Configuration c = random_config(3000, 11, 4 * 3000);
  const auto path = std::filesystem::temp_directory_path() / "spanlines_acceptance_3000.json";
  write_configuration(c, path.string());
  std::string outputs[2];
  double seconds[2];
  const char* threads[2] = {"1", "2"};
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run({"--threads", threads[i], "analyze", path.string()}, out, err);
    seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(code == 0, "analyze failed: " + err.str());
    outputs[i] = out.str();
  }
  std::filesystem::remove(path);
  o.expect(seconds[0] <= 60.0, "analyze on 3000 points took " + std::to_string(seconds[0]) + " s");
  o.expect(outputs[0] == outputs[1], "--threads changed the output");
  if (o.pass) {
    std::ostringstream d;
    d.precision(3);
    d << "analyze(3000) " << seconds[0] << " s with 1 thread, " << seconds[1] << " s with 2, identical output";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(3);
    line << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << " (" << seconds << " s)";
    if (!o.detail.empty()) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
    failures += !o.pass;
    return seconds;
  };

  double t1 = report(1, "fermat(3..12) line count, incidences, l2 = 0, point degrees", criterion1);
  if (t1 >= 5.0) {
    std::cout << "criterion 1: FAIL  runtime budget of 5 s exceeded" << std::endl;
    ++failures;
  }
  double t2 = report(2, "boroczky(3..20) incidences, line count, conic degrees, realness", criterion2);
  if (t2 >= 30.0) {
    std::cout << "criterion 2: FAIL  runtime budget of 30 s exceeded" << std::endl;
    ++failures;
  }
  report(3, "langer and weak-dirac tight on fermat(3..12)", criterion3);
  report(4, "melchior violated on fermat(3..12)", criterion4);
  double t5 = report(5, "spanned_lines equals the pairwise oracle", criterion5);
  if (t5 >= 60.0) {
    std::cout << "criterion 5: FAIL  runtime budget of 60 s exceeded" << std::endl;
    ++failures;
  }
  Outcome seven;
  report(6, "every applicable proven statement holds on the generator suite",
         [&] { return criterion6and7(seven); });
  report(7, "sum form and langer verdicts agree", [&] { return seven; });
  report(8, "spectra invariant under 20 projective maps x 10 configurations", criterion8);
  report(9, "cuspidal cubic |L|/n^2 near 1/6; two_lines I = n^2/2 + n", criterion9);
  report(10, "exhaustive search n=6, g=4, cap=3", criterion10);
  report(11, "analyze 3000 random points within 60 s; --threads output-invariant", criterion11);
  return failures == 0 ? 0 : 1;
}
