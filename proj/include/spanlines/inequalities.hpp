#pragma once

// Exact evaluation of the incidence identities and inequalities against a
// LineSpectrum.
//
// Every report stores its slack so that the inequality holds iff slack >= 0
// (slack > 0 for strict inequalities), whatever direction the inequality is
// written in.  Reports are computed even when the hypotheses fail, so that a
// violation outside the hypotheses (Melchior on a complex configuration, say)
// can be exhibited; only applicable reports of a proven kind count as
// failures.

#include <string>
#include <utility>
#include <vector>

#include "spanlines/projective.hpp"

namespace spanlines {

enum class ReportKind { identity, theorem, corollary, conjecture, informational };

enum class Relation { equal, greater_equal, greater, less_equal, less };

std::string to_string(ReportKind kind);
std::string to_string(Relation relation);

struct InequalityReport {
  std::string name;
  ReportKind kind = ReportKind::theorem;
  Relation relation = Relation::greater_equal;
  bool applicable = false;
  std::string applicability_reason;
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool satisfied = false;
  bool tight = false;
  std::vector<std::pair<std::string, Rational>> extras;

  // Applicable, of a proven kind, and not satisfied.
  bool is_failure() const;
};

/// Threshold alpha = (6 + sqrt 3)/9 in Q(sqrt 3).
FieldElement alpha_threshold();
/// Threshold beta = (4 + sqrt 2)/6 in Q(sqrt 2).
FieldElement beta_threshold();
/// Exact test count > threshold * n for a real quadratic threshold.
bool exceeds(std::size_t count, const FieldElement& threshold, std::size_t n);

std::vector<InequalityReport> check_basic(const LineSpectrum& s);
InequalityReport check_langer(const LineSpectrum& s);
InequalityReport check_melchior(const LineSpectrum& s, bool real);
InequalityReport check_hirzebruch(const LineSpectrum& s);
// Form (6), form (7), and the identity slack(7) = 3 * slack(Langer).
std::vector<InequalityReport> check_bojanowski(const LineSpectrum& s);
// Theorem statement, then the refined count 3|L| >= (n^2 + 3n + 9)/3.
std::vector<InequalityReport> check_beck_real(const LineSpectrum& s, bool real);
// Theorem statement, then the refined count |L| >= (n + 3)^2 / 12.
std::vector<InequalityReport> check_beck_complex(const LineSpectrum& s);
InequalityReport check_kn_lines(const LineSpectrum& s, bool real);
// l2 + l3 >= n^2/18, then the half-lines bound 2 l2 + 2 l3 >= 3 + |L|.
std::vector<InequalityReport> check_l2l3_real(const LineSpectrum& s, bool real);
// Throws std::invalid_argument for k < 5.
std::vector<InequalityReport> check_rich_lines(const LineSpectrum& s, int k);
InequalityReport check_weak_dirac(const LineSpectrum& s);
// l4 <= n^2/12 and the lower bounds on l2 + l3 that follow from Langer.
std::vector<InequalityReport> check_poor_lines_chain(const LineSpectrum& s);
// Conjectured I >= 3n^2/8 for real configurations with at most n/2 collinear;
// reported with the ratio I/n^2, never counted as a failure.
InequalityReport check_incidence_conjecture(const LineSpectrum& s, bool real);
InequalityReport check_brass_l4(const LineSpectrum& s, bool real);

/// Names accepted by run_checks, in run order.
const std::vector<std::string>& check_names();

/// Runs one named check ("all" runs every check, rich_lines for k = 5..10).
/// Throws std::invalid_argument on an unknown name.
std::vector<InequalityReport> run_checks(const LineSpectrum& s, bool real, const std::string& which = "all");

bool any_failure(const std::vector<InequalityReport>& reports);

}  // namespace spanlines
