#include "spanlines/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

namespace spanlines {

namespace {

Rational q(std::uint64_t value) { return Rational(static_cast<unsigned long>(value)); }

Rational binom2(std::uint64_t value) { return q(value) * (q(value) - 1) / 2; }

// At most 2n/3 points collinear.
bool langer_gate(const LineSpectrum& s) { return 3 * s.max_collinear <= 2 * s.n; }

std::string gate_text(bool ok, const std::string& condition) {
  return (ok ? "holds: " : "fails: ") + condition;
}

InequalityReport make_report(std::string name, ReportKind kind, Relation relation, bool applicable,
                             std::string reason, Rational lhs, Rational rhs) {
  InequalityReport r;
  r.name = std::move(name);
  r.kind = kind;
  r.relation = relation;
  r.applicable = applicable;
  r.applicability_reason = std::move(reason);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  switch (relation) {
    case Relation::equal:
      r.slack = -abs(r.lhs - r.rhs);
      break;
    case Relation::greater_equal:
    case Relation::greater:
      r.slack = r.lhs - r.rhs;
      break;
    case Relation::less_equal:
    case Relation::less:
      r.slack = r.rhs - r.lhs;
      break;
  }
  const bool strict = relation == Relation::greater || relation == Relation::less;
  r.satisfied = strict ? r.slack > 0 : r.slack >= 0;
  r.tight = r.lhs == r.rhs;
  return r;
}

// sum_{i >= from} weight(i) * l_i
template <typename Weight>
Rational weighted_sum(const LineSpectrum& s, std::size_t from, Weight weight) {
  Rational total = 0;
  for (const auto& [i, count] : s.ell) {
    if (i >= from) total += weight(i) * q(count);
  }
  return total;
}

Rational lines_at_least(const LineSpectrum& s, std::size_t k) {
  return weighted_sum(s, k, [](std::size_t) { return Rational(1); });
}

void require_points(const LineSpectrum& s) {
  if (s.n < 2) {
    throw std::invalid_argument("inequality checks need at least 2 points, got " + std::to_string(s.n));
  }
}

// "Non-collinear and all coordinates real", with a reason string.
std::pair<bool, std::string> real_plane_gate(const LineSpectrum& s, bool real, std::size_t min_n) {
  if (s.n < min_n) return {false, "needs n >= " + std::to_string(min_n)};
  if (!real) return {false, "not applicable: complex coordinates (real-plane statement)"};
  if (s.collinear()) return {false, "not applicable: configuration is collinear"};
  return {true, "real, non-collinear"};
}

}  // namespace

std::string to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::identity: return "identity";
    case ReportKind::theorem: return "theorem";
    case ReportKind::corollary: return "corollary";
    case ReportKind::conjecture: return "conjecture";
    case ReportKind::informational: return "informational";
  }
  return "?";
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::equal: return "==";
    case Relation::greater_equal: return ">=";
    case Relation::greater: return ">";
    case Relation::less_equal: return "<=";
    case Relation::less: return "<";
  }
  return "?";
}

bool InequalityReport::is_failure() const {
  const bool proven = kind == ReportKind::identity || kind == ReportKind::theorem ||
                      kind == ReportKind::corollary;
  return proven && applicable && !satisfied;
}

FieldElement alpha_threshold() {
  const Field& f = Field::get(FieldDescriptor::quadratic(3));
  return FieldElement(f, std::vector<Rational>{Rational(2, 3), Rational(1, 9)});
}

FieldElement beta_threshold() {
  const Field& f = Field::get(FieldDescriptor::quadratic(2));
  return FieldElement(f, std::vector<Rational>{Rational(2, 3), Rational(1, 6)});
}

bool exceeds(std::size_t count, const FieldElement& threshold, std::size_t n) {
  const Field& f = threshold.field();
  const FieldElement difference =
      FieldElement(f, q(count)) - threshold * FieldElement(f, q(n));
  return real_sign(difference) > 0;
}

// ---------------------------------------------------------------------------

std::vector<InequalityReport> check_basic(const LineSpectrum& s) {
  require_points(s);
  const Rational lines = weighted_sum(s, 2, [](std::size_t) { return Rational(1); });
  const Rational incidences = weighted_sum(s, 2, [](std::size_t i) -> Rational { return q(i); });
  const Rational pairs = weighted_sum(s, 2, [](std::size_t i) -> Rational { return binom2(i); });
  return {
      make_report("basic_line_count", ReportKind::identity, Relation::equal, true,
                  "sum l_i = |L|", lines, q(s.total_lines)),
      make_report("basic_incidences", ReportKind::identity, Relation::equal, true,
                  "sum i l_i = I(P, L(P))", incidences, q(s.incidences)),
      make_report("basic_pairs", ReportKind::identity, Relation::equal, true,
                  "sum C(i,2) l_i = C(n,2)", pairs, binom2(s.n)),
  };
}

InequalityReport check_langer(const LineSpectrum& s) {
  require_points(s);
  const bool gate = langer_gate(s);
  const Rational n = q(s.n);
  return make_report("langer", ReportKind::theorem, Relation::greater_equal, gate,
                     gate_text(gate, "max collinear <= 2n/3"), q(s.incidences), n * (n + 3) / 3);
}

InequalityReport check_melchior(const LineSpectrum& s, bool real) {
  require_points(s);
  const auto [applicable, reason] = real_plane_gate(s, real, 3);
  const Rational rhs = 3 + weighted_sum(s, 4, [](std::size_t i) -> Rational { return q(i) - 3; });
  return make_report("melchior", ReportKind::theorem, Relation::greater_equal, applicable, reason,
                     q(s.at(2)), rhs);
}

InequalityReport check_hirzebruch(const LineSpectrum& s) {
  require_points(s);
  const bool gate = s.n >= 4 && s.max_collinear + 3 <= s.n;
  const std::string reason = s.n < 4 ? "needs n >= 4" : gate_text(gate, "max collinear <= n - 3");
  const Rational lhs = q(s.at(2)) + Rational(3, 4) * q(s.at(3));
  const Rational rhs = q(s.n) + weighted_sum(s, 5, [](std::size_t i) -> Rational { return 2 * q(i) - 9; });
  return make_report("hirzebruch", ReportKind::theorem, Relation::greater_equal, gate, reason, lhs, rhs);
}

std::vector<InequalityReport> check_bojanowski(const LineSpectrum& s) {
  require_points(s);
  const bool gate = langer_gate(s);
  const std::string reason = gate_text(gate, "max collinear <= 2n/3");
  const Rational n = q(s.n);

  const Rational poor = q(s.at(2)) + Rational(3, 4) * q(s.at(3));
  const Rational rich = n + weighted_sum(s, 5, [](std::size_t i) -> Rational { return (q(i) * q(i) - 4 * q(i)) / 4; });
  auto hirzebruch_form = make_report("bojanowski_hirzebruch_form", ReportKind::theorem, Relation::greater_equal,
                                     gate, reason, poor, rich);

  const Rational weighted = weighted_sum(s, 2, [](std::size_t i) -> Rational { return 4 * q(i) - q(i) * q(i); });
  auto sum_form = make_report("bojanowski_sum_form", ReportKind::theorem, Relation::greater_equal, gate,
                              reason, weighted, 4 * n);

  // Moving sum (i - i^2) l_i across and using sum C(i,2) l_i = C(n,2) turns
  // the sum form into Langer scaled by 3.
  const InequalityReport langer = check_langer(s);
  auto equivalence = make_report("bojanowski_langer_equivalence", ReportKind::identity, Relation::equal,
                                 true, "slack(sum form) = 3 * slack(langer)", sum_form.slack,
                                 3 * langer.slack);
  return {hirzebruch_form, sum_form, equivalence};
}

std::vector<InequalityReport> check_beck_real(const LineSpectrum& s, bool real) {
  require_points(s);
  const Rational n = q(s.n);
  const bool real_ok = real;
  const std::string real_reason = real ? "real coordinates" : "not applicable: complex coordinates (real-plane statement)";

  InequalityReport theorem;
  const Rational lines = q(s.total_lines);
  if (lines >= n * n / 9) {
    theorem = make_report("beck_real", ReportKind::theorem, Relation::greater_equal, real_ok,
                          real_reason + "; second alternative: |L| >= n^2/9", lines, n * n / 9);
  } else {
    // First alternative c > alpha n, alpha = (6 + sqrt 3)/9, squared exactly:
    // 9c - 6n > sqrt(3) n  <=>  (9c - 6n)|9c - 6n| > 3 n^2.
    const Rational t = 9 * q(s.max_collinear) - 6 * n;
    theorem = make_report("beck_real", ReportKind::theorem, Relation::greater, real_ok,
                          real_reason + "; first alternative: max collinear > alpha n, as (9c-6n)|9c-6n| > 3n^2",
                          t * abs(t), 3 * n * n);
  }
  theorem.extras = {{"max_collinear", q(s.max_collinear)},
                    {"first_alternative", exceeds(s.max_collinear, alpha_threshold(), s.n) ? 1 : 0}};

  const bool gate = real_ok && s.n >= 3 && langer_gate(s);
  std::string reason = !real_ok ? real_reason : s.n < 3 ? "needs n >= 3" : gate_text(gate, "max collinear <= 2n/3");
  auto refined = make_report("beck_real_many_lines", ReportKind::theorem, Relation::greater_equal, gate,
                             reason, 3 * lines, (n * n + 3 * n + 9) / 3);
  return {theorem, refined};
}

std::vector<InequalityReport> check_beck_complex(const LineSpectrum& s) {
  require_points(s);
  const Rational n = q(s.n);
  const Rational lines = q(s.total_lines);
  InequalityReport theorem;
  if (lines >= n * n / 12) {
    theorem = make_report("beck_complex", ReportKind::theorem, Relation::greater_equal, true,
                          "second alternative: |L| >= n^2/12", lines, n * n / 12);
  } else {
    // beta = (4 + sqrt 2)/6: 6c - 4n > sqrt(2) n  <=>  (6c - 4n)|6c - 4n| > 2 n^2.
    const Rational t = 6 * q(s.max_collinear) - 4 * n;
    theorem = make_report("beck_complex", ReportKind::theorem, Relation::greater, true,
                          "first alternative: max collinear > beta n, as (6c-4n)|6c-4n| > 2n^2",
                          t * abs(t), 2 * n * n);
  }
  theorem.extras = {{"max_collinear", q(s.max_collinear)},
                    {"first_alternative", exceeds(s.max_collinear, beta_threshold(), s.n) ? 1 : 0}};

  const bool gate = langer_gate(s);
  auto refined = make_report("beck_complex_many_lines", ReportKind::theorem, Relation::greater_equal, gate,
                             gate_text(gate, "max collinear <= 2n/3"), lines, (n + 3) * (n + 3) / 12);
  return {theorem, refined};
}

InequalityReport check_kn_lines(const LineSpectrum& s, bool real) {
  require_points(s);
  const bool applicable = real && s.n >= 3;
  const std::string reason = s.n < 3 ? "needs n >= 3" : real ? "real coordinates" : "not applicable: complex coordinates (real-plane statement)";
  const Rational k = q(s.n - s.max_collinear);
  auto r = make_report("kn_lines", ReportKind::corollary, Relation::greater_equal, applicable, reason,
                       q(s.total_lines), k * q(s.n) / 9);
  r.extras = {{"k", k}};
  return r;
}

std::vector<InequalityReport> check_l2l3_real(const LineSpectrum& s, bool real) {
  require_points(s);
  const Rational n = q(s.n);
  const Rational l23 = q(s.at(2)) + q(s.at(3));
  auto [plane_ok, plane_reason] = real_plane_gate(s, real, 3);
  const bool below_alpha = !exceeds(s.max_collinear, alpha_threshold(), s.n);
  const bool gate = plane_ok && below_alpha;
  const std::string reason = !plane_ok ? plane_reason : gate_text(below_alpha, "max collinear <= alpha n");
  auto quadratic = make_report("l2l3_real", ReportKind::corollary, Relation::greater_equal, gate, reason,
                               l23, n * n / 18);
  auto half = make_report("l2l3_half_lines", ReportKind::corollary, Relation::greater_equal, plane_ok,
                          plane_reason, 2 * l23, 3 + q(s.total_lines));
  return {quadratic, half};
}

std::vector<InequalityReport> check_rich_lines(const LineSpectrum& s, int k) {
  if (k < 5) throw std::invalid_argument("rich_lines: k must be >= 5, got " + std::to_string(k));
  require_points(s);
  const bool gate = langer_gate(s);
  const std::string reason = gate_text(gate, "max collinear <= 2n/3");
  const Rational n = q(s.n);
  const Rational lines = q(s.total_lines);
  const Rational rich = lines_at_least(s, static_cast<std::size_t>(k));
  const Rational shift = Rational(k - 2) * (k - 2);
  const std::string prefix = "rich_lines_k" + std::to_string(k);

  std::vector<InequalityReport> out;
  out.push_back(make_report(prefix + "_fraction", ReportKind::corollary, Relation::less_equal, gate, reason,
                            rich, 4 * lines / shift));
  out.push_back(make_report(prefix + "_absolute", ReportKind::corollary, Relation::less_equal, gate, reason,
                            rich, 2 * n * n / shift));
  if (k == 5) {
    const Rational poor = q(s.at(2)) + q(s.at(3)) + q(s.at(4));
    out.push_back(make_report(prefix + "_poor_share", ReportKind::corollary, Relation::greater, gate, reason,
                              poor, Rational(5, 9) * lines));
    out.push_back(make_report(prefix + "_poor_quadratic", ReportKind::corollary, Relation::greater_equal, gate,
                              reason, Rational(5, 9) * lines, Rational(5, 108) * n * n));
  }
  return out;
}

InequalityReport check_weak_dirac(const LineSpectrum& s) {
  require_points(s);
  const bool applicable = s.n >= 3 && !s.collinear();
  const std::string reason = s.n < 3 ? "needs n >= 3" : gate_text(applicable, "not collinear");
  return make_report("weak_dirac", ReportKind::corollary, Relation::greater_equal, applicable, reason,
                     q(s.max_degree()), (q(s.n) + 3) / 3);
}

std::vector<InequalityReport> check_poor_lines_chain(const LineSpectrum& s) {
  require_points(s);
  const bool gate = langer_gate(s);
  const std::string reason = gate_text(gate, "max collinear <= 2n/3");
  const Rational n = q(s.n);
  const Rational l23 = q(s.at(2)) + q(s.at(3));
  const Rational l4 = q(s.at(4));
  return {
      make_report("poor_lines_l4_bound", ReportKind::corollary, Relation::less_equal, gate, reason, l4,
                  n * n / 12),
      make_report("poor_lines_half_bound", ReportKind::corollary, Relation::greater_equal, gate, reason,
                  2 * l23 + l4, q(s.total_lines)),
      make_report("poor_lines_l2l3_weak", ReportKind::corollary, Relation::greater_equal, gate, reason, l23,
                  n / 4 + Rational(3, 8)),
      make_report("poor_lines_l2l3_direct", ReportKind::corollary, Relation::greater_equal, gate, reason, l23, n),
  };
}

InequalityReport check_incidence_conjecture(const LineSpectrum& s, bool real) {
  require_points(s);
  const Rational n = q(s.n);
  const bool half_gate = 2 * s.max_collinear <= s.n;
  const bool applicable = real && half_gate;
  const std::string reason = !real ? "not applicable: complex coordinates (real-plane statement)"
                                   : gate_text(half_gate, "max collinear <= n/2");
  auto r = make_report("incidence_conjecture", ReportKind::conjecture, Relation::greater_equal, applicable, reason,
                       q(s.incidences), Rational(3, 8) * n * n);
  r.extras = {{"ratio", q(s.incidences) / (n * n)}};
  return r;
}

InequalityReport check_brass_l4(const LineSpectrum& s, bool real) {
  require_points(s);
  const bool applicable = real && s.n >= 4;
  const std::string reason = s.n < 4 ? "needs n >= 4" : real ? "real coordinates" : "not applicable: complex coordinates (real-plane statement)";
  const Rational n = q(s.n);
  return make_report("brass_l4", ReportKind::informational, Relation::less, applicable, reason, q(s.at(4)),
                     n * n / 14);
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "basic",        "langer",      "melchior", "hirzebruch",     "bojanowski",
      "beck_real",    "beck_complex", "kn_lines", "l2l3_real",      "rich_lines",
      "weak_dirac",   "poor_lines_chain", "incidence_conjecture", "brass_l4"};
  return names;
}

std::vector<InequalityReport> run_checks(const LineSpectrum& s, bool real, const std::string& which) {
  std::string name = which;
  std::replace(name.begin(), name.end(), '-', '_');
  if (name != "all" && std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
    throw std::invalid_argument("unknown check: " + which);
  }
  require_points(s);
  std::vector<InequalityReport> out;
  auto append = [&out](std::vector<InequalityReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  auto wanted = [&](const char* n) { return name == "all" || name == n; };
  if (wanted("basic")) append(check_basic(s));
  if (wanted("langer")) out.push_back(check_langer(s));
  if (wanted("melchior")) out.push_back(check_melchior(s, real));
  if (wanted("hirzebruch")) out.push_back(check_hirzebruch(s));
  if (wanted("bojanowski")) append(check_bojanowski(s));
  if (wanted("beck_real")) append(check_beck_real(s, real));
  if (wanted("beck_complex")) append(check_beck_complex(s));
  if (wanted("kn_lines")) out.push_back(check_kn_lines(s, real));
  if (wanted("l2l3_real")) append(check_l2l3_real(s, real));
  if (wanted("rich_lines")) {
    for (int k = 5; k <= 10; ++k) append(check_rich_lines(s, k));
  }
  if (wanted("weak_dirac")) out.push_back(check_weak_dirac(s));
  if (wanted("poor_lines_chain")) append(check_poor_lines_chain(s));
  if (wanted("incidence_conjecture")) out.push_back(check_incidence_conjecture(s, real));
  if (wanted("brass_l4")) out.push_back(check_brass_l4(s, real));
  return out;
}

bool any_failure(const std::vector<InequalityReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.is_failure(); });
}

}  // namespace spanlines
