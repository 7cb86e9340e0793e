#include "spanlines/projective.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace spanlines {

namespace {

std::size_t hash_triple(const Triple& t) {
  std::size_t h = 0x51ed27;
  for (const auto& e : t) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void require_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field()) {
    throw FieldMismatchError("field mismatch: " + a.field().descriptor().to_string() + " vs " +
                             b.field().descriptor().to_string());
  }
}

// Lines through points[owner] that have no member of lower index, in the
// order of their smallest other member.
void lines_owned_by(const std::vector<ProjectivePoint>& points, std::size_t owner,
                    std::vector<SpannedLine>& out) {
  std::unordered_map<LineKey, std::vector<std::size_t>, LineKeyHash> groups;
  groups.reserve(points.size());
  std::vector<const LineKey*> order;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j == owner) continue;
    auto [it, inserted] = groups.try_emplace(line_through(points[owner], points[j]));
    it->second.push_back(j);
    if (inserted) order.push_back(&it->first);
  }
  for (const LineKey* key : order) {
    const auto& others = groups.find(*key)->second;
    if (others.front() < owner) continue;
    SpannedLine line{*key, {}};
    line.members.reserve(others.size() + 1);
    line.members.push_back(owner);
    line.members.insert(line.members.end(), others.begin(), others.end());
    out.push_back(std::move(line));
  }
}

template <typename Body>
void run_partitioned(std::size_t count, unsigned threads, Body body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    body(0u, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { body(w, count); });
  }
  for (auto& t : pool) t.join();
}

void sort_lines(LineMap& lines) {
  std::sort(lines.begin(), lines.end(),
            [](const SpannedLine& a, const SpannedLine& b) { return a.members < b.members; });
}

}  // namespace

Triple canonicalize(Triple coords) {
  require_field(coords[0], coords[1]);
  require_field(coords[0], coords[2]);
  std::size_t lead = 0;
  while (lead < 3 && coords[lead].is_zero()) ++lead;
  if (lead == 3) throw GeometryError("homogeneous coordinates are all zero");
  if (coords[lead].is_one()) return coords;
  const FieldElement scale = coords[lead].inv();
  coords[lead] = FieldElement::one(coords[lead].field());
  for (std::size_t i = lead + 1; i < 3; ++i) {
    if (!coords[i].is_zero()) coords[i] *= scale;
  }
  return coords;
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(Triple coords) : coords_(canonicalize(std::move(coords))) {}

ProjectivePoint ProjectivePoint::affine(const FieldElement& x, const FieldElement& y) {
  return ProjectivePoint(x, y, FieldElement::one(x.field()));
}

ProjectivePoint ProjectivePoint::rational(const Rational& x, const Rational& y, const Rational& z) {
  const Field& q = Field::rational();
  return ProjectivePoint(FieldElement(q, x), FieldElement(q, y), FieldElement(q, z));
}

bool ProjectivePoint::is_real() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_real(); });
}

std::size_t ProjectivePoint::hash() const { return hash_triple(coords_); }

LineKey::LineKey(Triple coeffs) : coeffs_(canonicalize(std::move(coeffs))) {}

bool LineKey::contains(const ProjectivePoint& p) const {
  FieldElement sum = coeffs_[0] * p[0];
  sum += coeffs_[1] * p[1];
  sum += coeffs_[2] * p[2];
  return sum.is_zero();
}

std::size_t LineKey::hash() const { return hash_triple(coeffs_); }

// ---------------------------------------------------------------------------

Configuration::Configuration(FieldDescriptor field, std::vector<ProjectivePoint> points,
                             std::string label)
    : field_(field), points_(std::move(points)), label_(std::move(label)) {
  if (points_.empty()) throw GeometryError("configuration needs at least one point");
  const Field& f = Field::get(field_);
  std::unordered_map<ProjectivePoint, std::size_t, ProjectivePointHash> seen;
  seen.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (&points_[i].field() != &f) {
      throw FieldMismatchError("point " + std::to_string(i) + " lives in " +
                               points_[i].field().descriptor().to_string() + ", expected " +
                               field_.to_string());
    }
    auto [it, inserted] = seen.emplace(points_[i], i);
    if (!inserted) {
      throw DuplicatePointError("duplicate point: index " + std::to_string(i) +
                                " repeats index " + std::to_string(it->second));
    }
  }
}

bool Configuration::is_real() const {
  return std::all_of(points_.begin(), points_.end(), [](const auto& p) { return p.is_real(); });
}

std::uint64_t LineSpectrum::max_degree() const {
  return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

// ---------------------------------------------------------------------------

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement determinant(const Triple& a, const Triple& b, const Triple& c) {
  const Triple bc = cross(b, c);
  FieldElement det = a[0] * bc[0];
  det += a[1] * bc[1];
  det += a[2] * bc[2];
  return det;
}

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
  return determinant(p.coords(), q.coords(), r.coords()).is_zero();
}

LineKey line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  require_field(p[0], q[0]);
  if (p == q) throw GeometryError("line_through: identical points");
  return LineKey(cross(p.coords(), q.coords()));
}

LineMap spanned_lines(const Configuration& config, ExecutionOptions options) {
  const auto& points = config.points();
  const std::size_t n = points.size();
  // Owner i goes to worker i % workers; per-worker output is merged by the
  // final sort, which is independent of the partition.
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  std::vector<LineMap> partial(workers);
  run_partitioned(n, workers, [&](unsigned w, std::size_t count) {
    for (std::size_t i = w; i < count; i += workers) lines_owned_by(points, i, partial[w]);
  });
  LineMap lines;
  for (auto& part : partial) {
    lines.insert(lines.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  sort_lines(lines);
  return lines;
}

LineMap oracle_spanned_lines(const Configuration& config) {
  const auto& points = config.points();
  const std::size_t n = points.size();
  LineMap lines;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> members;
      bool first_pair = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) {
          members.push_back(k);
          continue;
        }
        if (!collinear(points[i], points[j], points[k])) continue;
        // The pair (i, j) only reports the line if it is its two smallest members.
        if (k < j) {
          first_pair = false;
          break;
        }
        members.push_back(k);
      }
      if (!first_pair) continue;
      lines.push_back({line_through(points[i], points[j]), std::move(members)});
    }
  }
  sort_lines(lines);
  return lines;
}

LineSpectrum spectrum_from_lines(std::size_t n, const LineMap& lines) {
  LineSpectrum s;
  s.n = n;
  s.degrees.assign(n, 0);
  if (n < 2) return s;
  for (const auto& line : lines) {
    const std::size_t size = line.members.size();
    ++s.ell[size];
    ++s.total_lines;
    s.incidences += size;
    s.max_collinear = std::max(s.max_collinear, size);
    for (std::size_t m : line.members) ++s.degrees[m];
  }
  return s;
}

LineSpectrum spectrum(const Configuration& config, ExecutionOptions options) {
  const auto& points = config.points();
  const std::size_t n = points.size();
  LineSpectrum s;
  s.n = n;
  s.degrees.assign(n, 0);
  if (n < 2) return s;

  // Streamed per worker so that memory stays O(n) per owner; counters are
  // summed, so the result does not depend on the partition.
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  std::vector<LineSpectrum> partial(workers);
  run_partitioned(n, workers, [&](unsigned w, std::size_t count) {
    LineSpectrum& local = partial[w];
    local.degrees.assign(count, 0);
    std::vector<SpannedLine> buffer;
    for (std::size_t i = w; i < count; i += workers) {
      buffer.clear();
      lines_owned_by(points, i, buffer);
      for (const auto& line : buffer) {
        const std::size_t size = line.members.size();
        ++local.ell[size];
        ++local.total_lines;
        local.incidences += size;
        local.max_collinear = std::max(local.max_collinear, size);
        for (std::size_t m : line.members) ++local.degrees[m];
      }
    }
  });
  for (const auto& local : partial) {
    for (const auto& [i, count] : local.ell) s.ell[i] += count;
    s.total_lines += local.total_lines;
    s.incidences += local.incidences;
    s.max_collinear = std::max(s.max_collinear, local.max_collinear);
    for (std::size_t k = 0; k < n; ++k) s.degrees[k] += local.degrees[k];
  }
  return s;
}

Configuration apply_projective_map(const Configuration& config, const Matrix3& matrix) {
  if (determinant(matrix[0], matrix[1], matrix[2]).is_zero()) {
    throw GeometryError("apply_projective_map: singular matrix");
  }
  std::vector<ProjectivePoint> mapped;
  mapped.reserve(config.size());
  for (const auto& p : config.points()) {
    Triple image;
    for (std::size_t r = 0; r < 3; ++r) {
      FieldElement sum = matrix[r][0] * p[0];
      sum += matrix[r][1] * p[1];
      sum += matrix[r][2] * p[2];
      image[r] = std::move(sum);
    }
    mapped.emplace_back(std::move(image));
  }
  return Configuration(config.field(), std::move(mapped), config.label());
}

}  // namespace spanlines
