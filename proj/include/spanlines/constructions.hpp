#pragma once

// Generators for the named point configurations.  All are deterministic;
// random_config is deterministic in its seed.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "spanlines/projective.hpp"

namespace spanlines {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 3m points on the three coordinate axes of Q(zeta_m):
/// (1, -w^j, 0), (0, 1, -w^j), (-w^j, 0, 1).  Three of them, one per axis, are
/// collinear exactly when the exponents sum to 0 mod m.
Configuration fermat(int m);

/// m points on the unit circle and the m chord/tangent directions on the line
/// at infinity, over Q(zeta_L) with L = lcm(4, 2m).  Conic points a and b
/// span a line through direction point a + b (mod m); the tangent at a meets
/// direction 2a.
Configuration boroczky(int m);

/// Points (t, t^3, 1) for t = -k..-1, 1..k.  Three are collinear iff their
/// parameters sum to zero.
Configuration cuspidal_cubic(int k);

/// (j, 0, 1) and (0, j, 1) for j = 1..m.
Configuration two_lines(int m);

/// n - 1 points on y = 0 and the apex (0, 1, 1).
Configuration near_pencil(int n);

/// All (x, y, 1) with 0 <= x < a, 0 <= y < b.
Configuration grid(int a, int b);

/// n distinct integer points uniform in [0, bound)^2.  Requires bound >= n.
Configuration random_config(int n, std::uint64_t seed, std::int64_t bound);

enum class ConstructionName { fermat, boroczky, cuspidal_cubic, two_lines, near_pencil, grid, random };

struct ConstructionSpec {
  ConstructionName name = ConstructionName::fermat;
  int m = 3;            // fermat, boroczky, two_lines
  int k = 2;            // cuspidal_cubic
  int n = 3;            // near_pencil, random
  int a = 2;            // grid
  int b = 2;            // grid
  std::uint64_t seed = 0;
  std::int64_t bound = 0;  // random; 0 means 4n
};

ConstructionName parse_construction_name(const std::string& text);
std::string to_string(ConstructionName name);

Configuration generate(const ConstructionSpec& spec);

/// Closed-form spectrum a generator promises, when one exists.
struct ExpectedSpectrum {
  std::size_t n = 0;
  std::map<std::size_t, std::uint64_t> ell;
  std::uint64_t total_lines = 0;
  std::uint64_t incidences = 0;
  std::size_t max_collinear = 0;
  std::string formula;
};

std::optional<ExpectedSpectrum> expected_spectrum(const ConstructionSpec& spec);

/// mt19937_64 with a portable bounded draw (the standard distributions are
/// implementation-defined, which would make seeded runs platform dependent).
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  std::string serialize() const;
  static DeterministicRng deserialize(const std::string& state);

 private:
  std::mt19937_64 engine_;
};

}  // namespace spanlines
