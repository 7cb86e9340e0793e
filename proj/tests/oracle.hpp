#pragma once

// Independent reference computations for the test suites.  Nothing here
// calls the library's geometry: points are rebuilt from their closed forms
// in floating point (or exact 128-bit integers) and lines are found by the
// cubic triple test.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Complex = std::complex<long double>;
using Homog = std::array<Complex, 3>;

struct Spectrum {
  std::size_t n = 0;
  std::map<std::size_t, std::uint64_t> ell;
  std::uint64_t lines = 0;
  std::uint64_t incidences = 0;
  std::size_t max_collinear = 0;
  std::vector<std::uint64_t> degrees;
};

inline Complex root_of_unity(long double numerator, long double denominator) {
  return std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * numerator / denominator);
}

inline std::vector<Homog> fermat_points(int m) {
  std::vector<Homog> out;
  for (int j = 0; j < m; ++j) out.push_back({1.0L, -root_of_unity(j, m), 0.0L});
  for (int j = 0; j < m; ++j) out.push_back({0.0L, 1.0L, -root_of_unity(j, m)});
  for (int j = 0; j < m; ++j) out.push_back({-root_of_unity(j, m), 0.0L, 1.0L});
  return out;
}

// m points on the unit circle and the m directions pi*k/m at infinity.
inline std::vector<Homog> boroczky_points(int m) {
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<Homog> out;
  for (int j = 0; j < m; ++j) out.push_back({std::cos(2 * pi * j / m), std::sin(2 * pi * j / m), 1.0L});
  for (int k = 0; k < m; ++k) out.push_back({-std::sin(pi * k / m), std::cos(pi * k / m), 0.0L});
  return out;
}

template <typename Collinear>
Spectrum spectrum_by_triples(std::size_t n, Collinear&& collinear) {
  Spectrum s;
  s.n = n;
  s.degrees.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> members = {i, j};
      bool first_pair = true;
      for (std::size_t k = 0; k < n && first_pair; ++k) {
        if (k == i || k == j || !collinear(i, j, k)) continue;
        if (k < j) first_pair = false;  // the line was already counted from a smaller pair
        members.push_back(k);
      }
      if (!first_pair) continue;
      ++s.ell[members.size()];
      ++s.lines;
      s.incidences += members.size();
      s.max_collinear = std::max(s.max_collinear, members.size());
      for (auto p : members) ++s.degrees[p];
    }
  }
  return s;
}

inline Spectrum numeric_spectrum(std::vector<Homog> points) {
  for (auto& p : points) {
    const long double norm = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
    for (auto& c : p) c /= norm;
  }
  auto det = [&](std::size_t a, std::size_t b, std::size_t c) {
    const auto& p = points[a];
    const auto& q = points[b];
    const auto& r = points[c];
    return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
           p[2] * (q[0] * r[1] - q[1] * r[0]);
  };
  return spectrum_by_triples(points.size(),
                             [&](std::size_t a, std::size_t b, std::size_t c) { return std::abs(det(a, b, c)) < 1e-12L; });
}

inline Spectrum integer_spectrum(const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
  return spectrum_by_triples(points.size(), [&](std::size_t a, std::size_t b, std::size_t c) {
    const __int128 ux = points[b].first - points[a].first;
    const __int128 uy = points[b].second - points[a].second;
    const __int128 vx = points[c].first - points[a].first;
    const __int128 vy = points[c].second - points[a].second;
    return ux * vy - uy * vx == 0;
  });
}

// Cyclotomic polynomial coefficients by the Moebius product formula
// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}, using integer series division.
inline int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

inline std::vector<std::int64_t> cyclotomic_moebius(int N) {
  // Work with power series in x truncated at degree N; all factors are
  // (1 - x^d) up to sign, and the sign of the product is fixed by Phi_N(0).
  std::vector<std::int64_t> series(N + 1, 0);
  series[0] = 1;
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    const int mu = moebius(N / d);
    if (mu == 1) {
      for (int e = N; e >= d; --e) series[e] -= series[e - d];  // multiply by (1 - x^d)
    } else if (mu == -1) {
      for (int e = d; e <= N; ++e) series[e] += series[e - d];  // divide by (1 - x^d)
    }
  }
  int degree = N;
  while (degree > 0 && series[degree] == 0) --degree;
  series.resize(degree + 1);
  if (series.back() < 0) {
    for (auto& c : series) c = -c;
  }
  return series;
}

}  // namespace oracle
