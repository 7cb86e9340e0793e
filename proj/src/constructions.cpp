#include "spanlines/constructions.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace spanlines {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw ConstructionError(message);
}

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

std::uint64_t zero_sum_triples(int k) {
  // Triples a < b < c of nonzero integers in [-k, k] with a + b + c = 0.
  std::uint64_t count = 0;
  for (int a = -k; a <= k; ++a) {
    if (a == 0) continue;
    for (int b = a + 1; b <= k; ++b) {
      if (b == 0) continue;
      const int c = -a - b;
      if (c > b && c <= k && c != 0) ++count;
    }
  }
  return count;
}

}  // namespace

Configuration fermat(int m) {
  require(m >= 3, "fermat: m must be >= 3");
  const Field& f = Field::get(FieldDescriptor::cyclotomic(m));
  const FieldElement zero = FieldElement::zero(f);
  const FieldElement one = FieldElement::one(f);
  std::vector<ProjectivePoint> points;
  points.reserve(3 * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) points.emplace_back(one, -f.zeta_power(j), zero);
  for (int j = 0; j < m; ++j) points.emplace_back(zero, one, -f.zeta_power(j));
  for (int j = 0; j < m; ++j) points.emplace_back(-f.zeta_power(j), zero, one);
  return Configuration(f.descriptor(), std::move(points), "fermat(" + std::to_string(m) + ")");
}

Configuration boroczky(int m) {
  require(m >= 3, "boroczky: m must be >= 3");
  const std::int64_t L = std::lcm<std::int64_t>(4, 2 * static_cast<std::int64_t>(m));
  const Field& f = Field::get(FieldDescriptor::cyclotomic(L));
  const FieldElement half(f, Rational(1, 2));
  const FieldElement minus_i = f.zeta_power(-L / 4);
  auto cos_of = [&](std::int64_t e) { return (f.zeta_power(e) + f.zeta_power(-e)) * half; };
  auto sin_of = [&](std::int64_t e) { return (f.zeta_power(e) - f.zeta_power(-e)) * minus_i * half; };

  std::vector<ProjectivePoint> points;
  points.reserve(2 * static_cast<std::size_t>(m));
  // Angle 2*pi*j/m is exponent j*L/m of zeta_L.
  for (int j = 0; j < m; ++j) {
    const std::int64_t e = j * (L / m);
    points.emplace_back(cos_of(e), sin_of(e), FieldElement::one(f));
  }
  // Angle pi*k/m is exponent k*L/(2m).
  for (int k = 0; k < m; ++k) {
    const std::int64_t e = k * (L / (2 * m));
    points.emplace_back(-sin_of(e), cos_of(e), FieldElement::zero(f));
  }
  return Configuration(f.descriptor(), std::move(points), "boroczky(" + std::to_string(m) + ")");
}

Configuration cuspidal_cubic(int k) {
  require(k >= 2, "cuspidal_cubic: k must be >= 2");
  std::vector<ProjectivePoint> points;
  for (int t = -k; t <= k; ++t) {
    if (t == 0) continue;
    points.push_back(ProjectivePoint::rational(t, Rational(t) * t * t, 1));
  }
  return Configuration(FieldDescriptor::rational(), std::move(points),
                       "cuspidal_cubic(" + std::to_string(k) + ")");
}

Configuration two_lines(int m) {
  require(m >= 2, "two_lines: m must be >= 2");
  std::vector<ProjectivePoint> points;
  for (int j = 1; j <= m; ++j) points.push_back(ProjectivePoint::rational(j, 0, 1));
  for (int j = 1; j <= m; ++j) points.push_back(ProjectivePoint::rational(0, j, 1));
  return Configuration(FieldDescriptor::rational(), std::move(points),
                       "two_lines(" + std::to_string(m) + ")");
}

Configuration near_pencil(int n) {
  require(n >= 3, "near_pencil: n must be >= 3");
  std::vector<ProjectivePoint> points;
  for (int j = 1; j < n; ++j) points.push_back(ProjectivePoint::rational(j, 0, 1));
  points.push_back(ProjectivePoint::rational(0, 1, 1));
  return Configuration(FieldDescriptor::rational(), std::move(points),
                       "near_pencil(" + std::to_string(n) + ")");
}

Configuration grid(int a, int b) {
  require(a >= 1 && b >= 1 && a * b >= 2, "grid: need a, b >= 1 and a*b >= 2");
  std::vector<ProjectivePoint> points;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) points.push_back(ProjectivePoint::rational(x, y, 1));
  }
  return Configuration(FieldDescriptor::rational(), std::move(points),
                       "grid(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Configuration random_config(int n, std::uint64_t seed, std::int64_t bound) {
  require(n >= 2, "random_config: n must be >= 2");
  require(bound >= n, "random_config: bound must be >= n");
  DeterministicRng rng(seed);
  std::set<std::pair<std::uint64_t, std::uint64_t>> used;
  std::vector<ProjectivePoint> points;
  points.reserve(static_cast<std::size_t>(n));
  const auto b = static_cast<std::uint64_t>(bound);
  while (points.size() < static_cast<std::size_t>(n)) {
    const std::uint64_t x = rng.below(b);
    const std::uint64_t y = rng.below(b);
    if (!used.emplace(x, y).second) continue;
    points.push_back(ProjectivePoint::rational(Rational(static_cast<unsigned long>(x)),
                                               Rational(static_cast<unsigned long>(y)), 1));
  }
  std::ostringstream label;
  label << "random(" << n << "," << seed << "," << bound << ")";
  return Configuration(FieldDescriptor::rational(), std::move(points), label.str());
}

// ---------------------------------------------------------------------------

ConstructionName parse_construction_name(const std::string& text) {
  std::string t = text;
  for (auto& c : t) {
    if (c == '-') c = '_';
  }
  if (t == "fermat") return ConstructionName::fermat;
  if (t == "boroczky") return ConstructionName::boroczky;
  if (t == "cuspidal_cubic" || t == "cubic") return ConstructionName::cuspidal_cubic;
  if (t == "two_lines") return ConstructionName::two_lines;
  if (t == "near_pencil") return ConstructionName::near_pencil;
  if (t == "grid") return ConstructionName::grid;
  if (t == "random") return ConstructionName::random;
  throw ConstructionError("unknown construction: " + text);
}

std::string to_string(ConstructionName name) {
  switch (name) {
    case ConstructionName::fermat: return "fermat";
    case ConstructionName::boroczky: return "boroczky";
    case ConstructionName::cuspidal_cubic: return "cuspidal-cubic";
    case ConstructionName::two_lines: return "two-lines";
    case ConstructionName::near_pencil: return "near-pencil";
    case ConstructionName::grid: return "grid";
    case ConstructionName::random: return "random";
  }
  return "?";
}

Configuration generate(const ConstructionSpec& spec) {
  switch (spec.name) {
    case ConstructionName::fermat: return fermat(spec.m);
    case ConstructionName::boroczky: return boroczky(spec.m);
    case ConstructionName::cuspidal_cubic: return cuspidal_cubic(spec.k);
    case ConstructionName::two_lines: return two_lines(spec.m);
    case ConstructionName::near_pencil: return near_pencil(spec.n);
    case ConstructionName::grid: return grid(spec.a, spec.b);
    case ConstructionName::random:
      return random_config(spec.n, spec.seed, spec.bound == 0 ? 4 * static_cast<std::int64_t>(spec.n) : spec.bound);
  }
  throw ConstructionError("unknown construction");
}

std::optional<ExpectedSpectrum> expected_spectrum(const ConstructionSpec& spec) {
  ExpectedSpectrum e;
  switch (spec.name) {
    case ConstructionName::fermat: {
      const std::uint64_t m = static_cast<std::uint64_t>(spec.m);
      e.n = 3 * m;
      if (m == 3) {
        e.ell = {{3, 12}};
      } else {
        e.ell = {{3, m * m}, {m, 3}};
      }
      e.formula = "l2 = 0, |L| = n^2/9 + 3, I = n(n+3)/3, every degree (n+3)/3";
      break;
    }
    case ConstructionName::boroczky: {
      const std::uint64_t m = static_cast<std::uint64_t>(spec.m);
      e.n = 2 * m;
      if (m == 3) {
        e.ell = {{2, 3}, {3, 4}};
      } else if (m == 4) {
        e.ell = {{2, 4}, {3, 6}, {4, 1}};
      } else {
        e.ell = {{2, m}, {3, choose2(m)}, {m, 1}};
      }
      e.formula = "|L| = C(n/2,2) + n/2 + 1, I = 3n(n+2)/8, conic degrees n/2";
      break;
    }
    case ConstructionName::cuspidal_cubic: {
      const std::uint64_t n = 2 * static_cast<std::uint64_t>(spec.k);
      const std::uint64_t triples = zero_sum_triples(spec.k);
      e.n = n;
      e.ell[2] = choose2(n) - 3 * triples;
      if (triples > 0) e.ell[3] = triples;
      e.formula = "l3 = #{zero-sum parameter triples}, l2 = C(n,2) - 3 l3";
      break;
    }
    case ConstructionName::two_lines: {
      const std::uint64_t m = static_cast<std::uint64_t>(spec.m);
      e.n = 2 * m;
      if (m == 2) {
        e.ell = {{2, 6}};
      } else {
        e.ell = {{2, m * m}, {m, 2}};
      }
      e.formula = "I = n^2/2 + n";
      break;
    }
    case ConstructionName::near_pencil: {
      const std::uint64_t n = static_cast<std::uint64_t>(spec.n);
      e.n = n;
      if (n == 3) {
        e.ell = {{2, 3}};
      } else {
        e.ell = {{2, n - 1}, {n - 1, 1}};
      }
      e.formula = "l2 = n-1, l_{n-1} = 1";
      break;
    }
    case ConstructionName::grid:
    case ConstructionName::random:
      return std::nullopt;
  }
  for (const auto& [i, count] : e.ell) {
    e.total_lines += count;
    e.incidences += i * count;
    e.max_collinear = std::max(e.max_collinear, i);
  }
  return e;
}

// ---------------------------------------------------------------------------

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("DeterministicRng::below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

std::string DeterministicRng::serialize() const {
  std::ostringstream out;
  out << engine_;
  return out.str();
}

DeterministicRng DeterministicRng::deserialize(const std::string& state) {
  DeterministicRng rng(0);
  std::istringstream in(state);
  in >> rng.engine_;
  if (!in) throw std::invalid_argument("DeterministicRng: malformed state");
  return rng;
}

}  // namespace spanlines
