#pragma once

// Projective points and lines over an exact field, and the spanned-line
// spectrum of a finite point configuration.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanlines/field.hpp"

namespace spanlines {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicatePointError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

using Triple = std::array<FieldElement, 3>;

/// Scales a nonzero triple so its first nonzero entry is 1.
Triple canonicalize(Triple coords);

/// Point in the projective plane, stored with its first nonzero coordinate 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Triple coords);
  ProjectivePoint(const FieldElement& x, const FieldElement& y, const FieldElement& z)
      : ProjectivePoint(Triple{x, y, z}) {}

  // Affine point (x, y, 1).
  static ProjectivePoint affine(const FieldElement& x, const FieldElement& y);
  static ProjectivePoint rational(const Rational& x, const Rational& y, const Rational& z);

  const Triple& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const Field& field() const { return coords_[0].field(); }
  bool is_real() const;
  std::size_t hash() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  Triple coords_;
};

/// Line a x + b y + c z = 0 keyed by its canonical dual coordinates.
class LineKey {
 public:
  explicit LineKey(Triple coeffs);

  const Triple& coeffs() const { return coeffs_; }
  const FieldElement& operator[](std::size_t i) const { return coeffs_[i]; }
  bool contains(const ProjectivePoint& p) const;
  std::size_t hash() const;

  friend bool operator==(const LineKey&, const LineKey&) = default;

 private:
  Triple coeffs_;
};

struct ProjectivePointHash {
  std::size_t operator()(const ProjectivePoint& p) const { return p.hash(); }
};

struct LineKeyHash {
  std::size_t operator()(const LineKey& l) const { return l.hash(); }
};

class Configuration {
 public:
  // Throws DuplicatePointError on repeated points and FieldMismatchError when a
  // point lives in another field.
  Configuration(FieldDescriptor field, std::vector<ProjectivePoint> points, std::string label = "");

  const FieldDescriptor& field() const { return field_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  std::size_t size() const { return points_.size(); }

  // Every coordinate fixed by conjugation.
  bool is_real() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  FieldDescriptor field_;
  std::vector<ProjectivePoint> points_;
  std::string label_;
};

struct SpannedLine {
  LineKey key;
  std::vector<std::size_t> members;  // ascending point indices, size >= 2

  friend bool operator==(const SpannedLine&, const SpannedLine&) = default;
};

// Spanned lines ordered by their member lists.
using LineMap = std::vector<SpannedLine>;

struct LineSpectrum {
  std::size_t n = 0;
  std::map<std::size_t, std::uint64_t> ell;  // i -> number of lines with exactly i points
  std::uint64_t total_lines = 0;
  std::uint64_t incidences = 0;
  std::size_t max_collinear = 0;
  std::vector<std::uint64_t> degrees;

  std::uint64_t at(std::size_t i) const {
    auto it = ell.find(i);
    return it == ell.end() ? 0 : it->second;
  }
  std::uint64_t max_degree() const;
  bool collinear() const { return n >= 2 && total_lines == 1; }

  friend bool operator==(const LineSpectrum&, const LineSpectrum&) = default;
};

FieldElement determinant(const Triple& a, const Triple& b, const Triple& c);
Triple cross(const Triple& a, const Triple& b);

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

/// Throws GeometryError when p == q.
LineKey line_through(const ProjectivePoint& p, const ProjectivePoint& q);

struct ExecutionOptions {
  unsigned threads = 1;
};

LineMap spanned_lines(const Configuration& config, ExecutionOptions options = {});

/// O(n^3) brute force: every pair, every third point tested with the
/// determinant predicate.  Used to cross-check spanned_lines.
LineMap oracle_spanned_lines(const Configuration& config);

LineSpectrum spectrum(const Configuration& config, ExecutionOptions options = {});
LineSpectrum spectrum_from_lines(std::size_t n, const LineMap& lines);

using Matrix3 = std::array<Triple, 3>;

/// Maps every point by M and re-canonicalizes.  Throws GeometryError when
/// det(M) = 0.
Configuration apply_projective_map(const Configuration& config, const Matrix3& matrix);

}  // namespace spanlines
