#pragma once

// Searches over integer point sets for configurations with few incidences
// (or few spanned lines) under a cap on the number of collinear points.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanlines/projective.hpp"

namespace spanlines {

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Objective { incidences, lines };

std::string to_string(Objective objective);
Objective parse_objective(const std::string& text);

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Line statistics of an integer point set, computed with 64-bit cross
/// products.  Coordinates must stay below 2^20 in absolute value.
struct IntegerStats {
  std::uint64_t incidences = 0;
  std::uint64_t lines = 0;
  std::size_t max_collinear = 0;
};

IntegerStats integer_stats(const std::vector<GridPoint>& points);

Configuration to_configuration(const std::vector<GridPoint>& points, std::string label);

struct SearchRecord {
  std::string method;  // "exhaustive" or "local"
  Objective objective_kind = Objective::incidences;
  std::size_t n = 0;
  std::size_t cap = 0;
  std::int64_t extent = 0;  // grid side (exhaustive) or coordinate bound (local)
  std::uint64_t seed = 0;
  std::uint64_t restarts = 1;
  std::uint64_t iterations = 0;  // candidates evaluated
  bool symmetry_pruning = false;
  bool complete = true;
  std::vector<GridPoint> best_points;  // sorted
  std::uint64_t best_value = 0;        // I or |L| of best_points
  Rational objective;                  // best_value / n^2
  std::vector<std::pair<std::uint64_t, Rational>> history;

  Configuration best_config() const;
};

struct ExhaustiveOptions {
  std::size_t n = 6;
  int grid_side = 4;
  std::size_t cap = 3;
  Objective objective = Objective::incidences;
  bool symmetry_pruning = true;
};

/// Every n-subset of the g x g grid (n <= 8, g <= 5), keeping the minimum
/// objective among subsets with max collinear <= cap.  Ties are broken by
/// the smallest canonical subset mask under the square's symmetry group, so
/// the result does not depend on whether pruning is enabled.
SearchRecord exhaustive_search(const ExhaustiveOptions& options);

struct LocalSearchOptions {
  std::size_t n = 12;
  std::int64_t bound = 0;  // 0 means 4n
  std::size_t cap = 6;
  std::uint64_t iterations = 2000;  // per restart
  std::uint64_t restarts = 4;
  std::uint64_t seed = 0;
  Objective objective = Objective::incidences;
  unsigned threads = 1;
  std::optional<std::vector<GridPoint>> initial;  // used by restart 0
  std::string checkpoint_path;                    // empty: no checkpointing
  std::uint64_t checkpoint_every = 500;
  // Stop after this many evaluated candidates in this invocation (0: no
  // limit).  The checkpoint then holds enough state to resume.
  std::uint64_t stop_after = 0;
};

/// Hill climbing with restarts: move one point to a random free cell, reject
/// moves that break the cap, accept moves that do not increase the
/// objective.  Resumes from options.checkpoint_path when it exists.
SearchRecord local_search(const LocalSearchOptions& options);

}  // namespace spanlines
