#include "spanlines/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "spanlines/constructions.hpp"

namespace spanlines {

using nlohmann::json;

namespace {

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 20;

std::int64_t orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::uint64_t value_of(const IntegerStats& stats, Objective objective) {
  return objective == Objective::incidences ? stats.incidences : stats.lines;
}

Rational per_n_squared(std::uint64_t value, std::size_t n) {
  Rational ratio(static_cast<unsigned long>(value), static_cast<unsigned long>(n * n));
  ratio.canonicalize();
  return ratio;
}

}  // namespace

std::string to_string(Objective objective) {
  return objective == Objective::incidences ? "incidences" : "lines";
}

Objective parse_objective(const std::string& text) {
  if (text == "incidences" || text == "I") return Objective::incidences;
  if (text == "lines" || text == "L") return Objective::lines;
  throw SearchError("unknown objective: " + text + " (expected incidences or lines)");
}

IntegerStats integer_stats(const std::vector<GridPoint>& points) {
  IntegerStats stats;
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.x <= -kCoordinateLimit || p.x >= kCoordinateLimit || p.y <= -kCoordinateLimit ||
        p.y >= kCoordinateLimit) {
      throw SearchError("integer_stats: coordinate out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t members = 2;
      bool first_pair = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (orient(points[i], points[j], points[k]) != 0) continue;
        if (k < j) {
          first_pair = false;
          break;
        }
        ++members;
      }
      if (!first_pair) continue;
      ++stats.lines;
      stats.incidences += members;
      stats.max_collinear = std::max(stats.max_collinear, members);
    }
  }
  return stats;
}

Configuration to_configuration(const std::vector<GridPoint>& points, std::string label) {
  std::vector<ProjectivePoint> projective;
  projective.reserve(points.size());
  for (const auto& p : points) {
    projective.push_back(ProjectivePoint::rational(Rational(static_cast<long>(p.x)),
                                                   Rational(static_cast<long>(p.y)), 1));
  }
  return Configuration(FieldDescriptor::rational(), std::move(projective), std::move(label));
}

Configuration SearchRecord::best_config() const {
  return to_configuration(best_points, method + "-search(n=" + std::to_string(n) + ",cap=" +
                                           std::to_string(cap) + ")");
}

// ---------------------------------------------------------------------------
// Exhaustive

namespace {

using Mask = std::uint32_t;

std::array<std::vector<int>, 8> square_symmetries(int g) {
  std::array<std::vector<int>, 8> maps;
  for (auto& m : maps) m.resize(static_cast<std::size_t>(g * g));
  for (int x = 0; x < g; ++x) {
    for (int y = 0; y < g; ++y) {
      const int u = g - 1 - x;
      const int v = g - 1 - y;
      const std::array<std::pair<int, int>, 8> images = {
          std::pair{x, y}, {u, y}, {x, v}, {u, v}, {y, x}, {v, x}, {y, u}, {v, u}};
      for (std::size_t s = 0; s < 8; ++s) {
        maps[s][static_cast<std::size_t>(x * g + y)] = images[s].first * g + images[s].second;
      }
    }
  }
  return maps;
}

Mask canonical_mask(Mask mask, const std::array<std::vector<int>, 8>& maps) {
  Mask best = mask;
  for (std::size_t s = 1; s < maps.size(); ++s) {
    Mask image = 0;
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      const int cell = __builtin_ctz(rest);
      image |= Mask{1} << maps[s][static_cast<std::size_t>(cell)];
    }
    best = std::min(best, image);
  }
  return best;
}

std::vector<GridPoint> points_of(Mask mask, int g) {
  std::vector<GridPoint> points;
  for (Mask rest = mask; rest != 0; rest &= rest - 1) {
    const int cell = __builtin_ctz(rest);
    points.push_back({cell / g, cell % g});
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

SearchRecord exhaustive_search(const ExhaustiveOptions& options) {
  const int g = options.grid_side;
  const std::size_t n = options.n;
  if (n < 2 || n > 8) throw SearchError("exhaustive_search: n must be in [2, 8]");
  if (g < 2 || g > 5) throw SearchError("exhaustive_search: grid side must be in [2, 5]");
  if (n > static_cast<std::size_t>(g * g)) throw SearchError("exhaustive_search: n exceeds grid size");
  if (options.cap < 2) throw SearchError("exhaustive_search: cap must be >= 2");

  const auto maps = square_symmetries(g);
  const int cells = g * g;
  SearchRecord record;
  record.method = "exhaustive";
  record.objective_kind = options.objective;
  record.n = n;
  record.cap = options.cap;
  record.extent = g;
  record.symmetry_pruning = options.symmetry_pruning;

  bool found = false;
  std::uint64_t best_value = 0;
  Mask best_mask = 0;

  std::vector<int> combo(n);
  for (std::size_t i = 0; i < n; ++i) combo[i] = static_cast<int>(i);
  while (true) {
    Mask mask = 0;
    for (int c : combo) mask |= Mask{1} << c;
    const Mask canon = canonical_mask(mask, maps);
    if (!options.symmetry_pruning || canon == mask) {
      ++record.iterations;
      const IntegerStats stats = integer_stats(points_of(mask, g));
      if (stats.max_collinear <= options.cap) {
        const std::uint64_t value = value_of(stats, options.objective);
        if (!found || value < best_value || (value == best_value && canon < best_mask)) {
          if (!found || value < best_value) {
            record.history.emplace_back(record.iterations, per_n_squared(value, n));
          }
          found = true;
          best_value = value;
          best_mask = canon;
        }
      }
    }
    // Next combination in lexicographic order.
    std::size_t i = n;
    while (i > 0 && combo[i - 1] == cells - static_cast<int>(n - i) - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < n; ++j) combo[j] = combo[j - 1] + 1;
  }
  if (!found) throw SearchError("exhaustive_search: no subset satisfies the collinearity cap");
  record.best_points = points_of(best_mask, g);
  record.best_value = best_value;
  record.objective = per_n_squared(best_value, n);
  return record;
}

// ---------------------------------------------------------------------------
// Local search

namespace {

struct RestartState {
  std::uint64_t restart = 0;
  std::uint64_t iteration = 0;
  std::string rng;
  std::vector<GridPoint> current;
  std::uint64_t current_value = 0;
  std::vector<GridPoint> best;
  std::uint64_t best_value = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> history;
  bool done = false;
};

json points_to_json(const std::vector<GridPoint>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back({p.x, p.y});
  return out;
}

std::vector<GridPoint> points_from_json(const json& j) {
  std::vector<GridPoint> points;
  for (const auto& p : j) points.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
  return points;
}

json state_to_json(const RestartState& s) {
  json h = json::array();
  for (const auto& [it, v] : s.history) h.push_back({it, v});
  return {{"restart", s.restart},        {"iteration", s.iteration},   {"rng", s.rng},
          {"current", points_to_json(s.current)}, {"current_value", s.current_value},
          {"best", points_to_json(s.best)},       {"best_value", s.best_value},
          {"history", h},                {"done", s.done}};
}

RestartState state_from_json(const json& j) {
  RestartState s;
  s.restart = j.at("restart").get<std::uint64_t>();
  s.iteration = j.at("iteration").get<std::uint64_t>();
  s.rng = j.at("rng").get<std::string>();
  s.current = points_from_json(j.at("current"));
  s.current_value = j.at("current_value").get<std::uint64_t>();
  s.best = points_from_json(j.at("best"));
  s.best_value = j.at("best_value").get<std::uint64_t>();
  for (const auto& e : j.at("history")) s.history.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>());
  s.done = j.at("done").get<bool>();
  return s;
}

json parameters_json(const LocalSearchOptions& o, std::int64_t bound) {
  return {{"n", o.n},
          {"bound", bound},
          {"cap", o.cap},
          {"iterations", o.iterations},
          {"restarts", o.restarts},
          {"seed", o.seed},
          {"objective", to_string(o.objective)},
          {"initial", o.initial ? points_to_json(*o.initial) : json()}};
}

std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t restart) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (restart + 1));
}

bool occupied(const std::vector<GridPoint>& points, const GridPoint& p) {
  return std::find(points.begin(), points.end(), p) != points.end();
}

std::vector<GridPoint> sorted(std::vector<GridPoint> points) {
  std::sort(points.begin(), points.end());
  return points;
}

class LocalSearchRun {
 public:
  LocalSearchRun(const LocalSearchOptions& options, std::int64_t bound)
      : options_(options), bound_(bound) {}

  void load_checkpoint() {
    if (options_.checkpoint_path.empty() || !std::filesystem::exists(options_.checkpoint_path)) return;
    std::ifstream in(options_.checkpoint_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw SearchError("checkpoint " + options_.checkpoint_path + " is not valid JSON: " + e.what());
    }
    if (j.value("parameters", json()) != parameters_json(options_, bound_)) {
      throw SearchError("checkpoint " + options_.checkpoint_path + " was written for different parameters");
    }
    for (const auto& s : j.at("restarts")) {
      RestartState state = state_from_json(s);
      states_[state.restart] = std::move(state);
    }
  }

  void run() {
    const unsigned workers = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(options_.threads, options_.restarts)));
    if (workers == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this, w, workers] { work(w, workers); });
      for (auto& t : pool) t.join();
    }
    if (first_error_) std::rethrow_exception(first_error_);
    save_checkpoint();
  }

  SearchRecord record() const {
    SearchRecord r;
    r.method = "local";
    r.objective_kind = options_.objective;
    r.n = options_.n;
    r.cap = options_.cap;
    r.extent = bound_;
    r.seed = options_.seed;
    r.restarts = options_.restarts;
    r.complete = true;
    bool have_best = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> history;
    for (std::uint64_t restart = 0; restart < options_.restarts; ++restart) {
      auto it = states_.find(restart);
      if (it == states_.end() || !it->second.done) r.complete = false;
      if (it == states_.end()) continue;
      const RestartState& s = it->second;
      r.iterations += s.iteration;
      history.insert(history.end(), s.history.begin(), s.history.end());
      const auto candidate = sorted(s.best);
      if (!have_best || s.best_value < r.best_value ||
          (s.best_value == r.best_value && candidate < r.best_points)) {
        have_best = true;
        r.best_value = s.best_value;
        r.best_points = candidate;
      }
    }
    if (!have_best) throw SearchError("local_search: no restart produced a configuration");
    std::sort(history.begin(), history.end());
    for (const auto& [it, v] : history) r.history.emplace_back(it, per_n_squared(v, options_.n));
    r.objective = per_n_squared(r.best_value, options_.n);
    return r;
  }

 private:
  std::uint64_t evaluate(const std::vector<GridPoint>& points, bool& feasible) const {
    const IntegerStats stats = integer_stats(points);
    feasible = stats.max_collinear <= options_.cap;
    return value_of(stats, options_.objective);
  }

  RestartState start(std::uint64_t restart) const {
    RestartState s;
    s.restart = restart;
    DeterministicRng rng(restart_seed(options_.seed, restart));
    bool feasible = false;
    if (restart == 0 && options_.initial) {
      s.current = *options_.initial;
      s.current_value = evaluate(s.current, feasible);
      if (!feasible) throw SearchError("local_search: initial configuration violates the cap");
    } else {
      const auto b = static_cast<std::uint64_t>(bound_);
      for (int attempt = 0; attempt < 10000 && !feasible; ++attempt) {
        s.current.clear();
        while (s.current.size() < options_.n) {
          const GridPoint p{static_cast<std::int64_t>(rng.below(b)), static_cast<std::int64_t>(rng.below(b))};
          if (!occupied(s.current, p)) s.current.push_back(p);
        }
        s.current_value = evaluate(s.current, feasible);
      }
      if (!feasible) throw SearchError("local_search: could not draw a start within the cap");
    }
    s.rng = rng.serialize();
    s.best = s.current;
    s.best_value = s.current_value;
    s.history.emplace_back(restart * options_.iterations, s.best_value);
    return s;
  }

  void work(unsigned worker, unsigned workers) {
    try {
      for (std::uint64_t restart = worker; restart < options_.restarts; restart += workers) {
        RestartState state;
        {
          std::lock_guard lock(mutex_);
          if (stopped_) return;
          auto it = states_.find(restart);
          if (it != states_.end() && it->second.done) continue;
          if (it != states_.end()) state = it->second;
        }
        if (state.rng.empty()) state = start(restart);
        if (!climb(state)) return;
      }
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!first_error_) first_error_ = std::current_exception();
      stopped_ = true;
    }
  }

  // Returns false when the evaluation budget ran out.
  bool climb(RestartState& state) {
    DeterministicRng rng = DeterministicRng::deserialize(state.rng);
    const auto b = static_cast<std::uint64_t>(bound_);
    bool finished = true;
    while (state.iteration < options_.iterations) {
      if (options_.stop_after != 0 && used_.fetch_add(1) >= options_.stop_after) {
        finished = false;
        break;
      }
      const std::size_t index = static_cast<std::size_t>(rng.below(options_.n));
      const GridPoint target{static_cast<std::int64_t>(rng.below(b)), static_cast<std::int64_t>(rng.below(b))};
      ++state.iteration;
      if (!occupied(state.current, target)) {
        std::vector<GridPoint> candidate = state.current;
        candidate[index] = target;
        bool feasible = false;
        const std::uint64_t value = evaluate(candidate, feasible);
        if (feasible && value <= state.current_value) {
          state.current = std::move(candidate);
          state.current_value = value;
          if (value < state.best_value) {
            state.best = state.current;
            state.best_value = value;
            state.history.emplace_back(state.restart * options_.iterations + state.iteration, value);
          }
        }
      }
      if (options_.checkpoint_every != 0 && state.iteration % options_.checkpoint_every == 0) {
        state.rng = rng.serialize();
        publish(state);
      }
    }
    state.rng = rng.serialize();
    state.done = finished;
    publish(state);
    if (!finished) {
      std::lock_guard lock(mutex_);
      stopped_ = true;
    }
    return finished;
  }

  void publish(const RestartState& state) {
    std::lock_guard lock(mutex_);
    states_[state.restart] = state;
    save_checkpoint_locked();
  }

  void save_checkpoint() {
    std::lock_guard lock(mutex_);
    save_checkpoint_locked();
  }

  void save_checkpoint_locked() const {
    if (options_.checkpoint_path.empty()) return;
    json restarts = json::array();
    for (const auto& [r, s] : states_) restarts.push_back(state_to_json(s));
    const json j = {{"format", "spanlines-local-search-checkpoint/1"},
                    {"parameters", parameters_json(options_, bound_)},
                    {"restarts", restarts}};
    const std::string tmp = options_.checkpoint_path + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw SearchError("cannot write checkpoint " + tmp);
      out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, options_.checkpoint_path);
  }

  const LocalSearchOptions& options_;
  std::int64_t bound_;
  std::map<std::uint64_t, RestartState> states_;
  std::atomic<std::uint64_t> used_{0};
  std::mutex mutex_;
  bool stopped_ = false;
  std::exception_ptr first_error_;
};

}  // namespace

SearchRecord local_search(const LocalSearchOptions& options) {
  if (options.n < 4) throw SearchError("local_search: n must be >= 4");
  if (options.cap < 2) throw SearchError("local_search: cap must be >= 2");
  if (options.restarts == 0) throw SearchError("local_search: restarts must be >= 1");
  const std::int64_t bound = options.bound == 0 ? 4 * static_cast<std::int64_t>(options.n) : options.bound;
  if (bound < 2 || bound >= kCoordinateLimit || static_cast<std::uint64_t>(bound * bound) < options.n) {
    throw SearchError("local_search: bound too small for n distinct points");
  }
  if (options.initial) {
    if (options.initial->size() != options.n) throw SearchError("local_search: initial size differs from n");
    std::set<GridPoint> unique(options.initial->begin(), options.initial->end());
    if (unique.size() != options.n) throw SearchError("local_search: initial configuration repeats a point");
  }
  LocalSearchRun run(options, bound);
  run.load_checkpoint();
  run.run();
  return run.record();
}

}  // namespace spanlines
