#include "spanlines/field.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

namespace spanlines {

namespace {

std::int64_t positive_mod(std::int64_t k, std::int64_t n) {
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_integer(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors

bool is_squarefree(std::int64_t d) {
  std::int64_t m = d < 0 ? -d : d;
  if (m == 0) return false;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

std::int64_t euler_phi(std::int64_t N) {
  if (N < 1) throw FieldError("euler_phi: N must be >= 1");
  std::int64_t result = N;
  std::int64_t m = N;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d) {
  FieldDescriptor f{FieldKind::quadratic, d, 0};
  f.validate();
  return f;
}

FieldDescriptor FieldDescriptor::cyclotomic(std::int64_t N) {
  FieldDescriptor f{FieldKind::cyclotomic, 0, N};
  f.validate();
  return f;
}

void FieldDescriptor::validate() const {
  switch (kind) {
    case FieldKind::rational:
      return;
    case FieldKind::quadratic:
      if (d == 0 || d == 1 || !is_squarefree(d)) {
        throw FieldError("quadratic field needs squarefree d not in {0, 1}, got " +
                         std::to_string(d));
      }
      return;
    case FieldKind::cyclotomic:
      if (N < 1) throw FieldError("cyclotomic field needs N >= 1, got " + std::to_string(N));
      return;
  }
}

std::size_t FieldDescriptor::degree() const {
  switch (kind) {
    case FieldKind::rational:
      return 1;
    case FieldKind::quadratic:
      return 2;
    case FieldKind::cyclotomic:
      return static_cast<std::size_t>(euler_phi(N));
  }
  return 1;
}

std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::quadratic:
      return "Q(sqrt(" + std::to_string(d) + "))";
    case FieldKind::cyclotomic:
      return "Q(zeta_" + std::to_string(N) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Polynomials

namespace poly {

RationalPolynomial trim(RationalPolynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  RationalPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  const RationalPolynomial divisor = trim(b);
  if (divisor.empty()) throw DivisionByZeroError("polynomial division by zero");
  RationalPolynomial rem = trim(a);
  if (rem.size() < divisor.size()) return {{}, rem};
  RationalPolynomial quot(rem.size() - divisor.size() + 1);
  const Rational& lead = divisor.back();
  for (std::size_t i = rem.size(); i-- >= divisor.size();) {
    if (rem[i] == 0) continue;
    const Rational factor = rem[i] / lead;
    const std::size_t shift = i + 1 - divisor.size();
    quot[shift] = factor;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[shift + j] -= factor * divisor[j];
  }
  return {trim(std::move(quot)), trim(std::move(rem))};
}

IntegerPolynomial multiply(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntegerPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace poly

IntegerPolynomial cyclotomic_polynomial(std::int64_t N) {
  if (N < 1) throw FieldError("cyclotomic_polynomial: N must be >= 1");
  static std::mutex cache_mutex;
  static std::map<std::int64_t, IntegerPolynomial> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(N); it != cache.end()) return it->second;
  }

  IntegerPolynomial divisor_product{Integer(1)};
  for (std::int64_t d = 1; d < N; ++d) {
    if (N % d == 0) divisor_product = poly::multiply(divisor_product, cyclotomic_polynomial(d));
  }
  // x^N - 1 divided by a monic integer polynomial: synthetic division stays in Z.
  IntegerPolynomial rem(static_cast<std::size_t>(N) + 1);
  rem[0] = -1;
  rem[static_cast<std::size_t>(N)] = 1;
  const std::size_t dd = divisor_product.size() - 1;
  IntegerPolynomial quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer factor = rem[i];
    if (factor == 0) continue;
    const std::size_t shift = i - dd;
    quot[shift] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= factor * divisor_product[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw FieldError("cyclotomic_polynomial: inexact division");
  }

  std::lock_guard lock(cache_mutex);
  cache.emplace(N, quot);
  return quot;
}

// ---------------------------------------------------------------------------
// Field

const Field& Field::get(const FieldDescriptor& descriptor) {
  descriptor.validate();
  static std::mutex registry_mutex;
  static std::map<std::tuple<int, std::int64_t, std::int64_t>, std::unique_ptr<Field>> registry;
  const auto key = std::make_tuple(static_cast<int>(descriptor.kind), descriptor.d, descriptor.N);
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::unique_ptr<Field>(new Field(descriptor))).first;
  }
  return *it->second;
}

const Field& Field::rational() {
  static const Field& q = get(FieldDescriptor::rational());
  return q;
}

Field::Field(const FieldDescriptor& descriptor)
    : descriptor_(descriptor), degree_(descriptor.degree()) {
  if (descriptor_.kind != FieldKind::cyclotomic) return;
  const IntegerPolynomial phi = cyclotomic_polynomial(descriptor_.N);
  modulus_.reserve(phi.size());
  for (const auto& c : phi) modulus_.emplace_back(c);

  const auto n = static_cast<std::size_t>(descriptor_.N);
  powers_.reserve(n);
  std::vector<Rational> current(degree_);
  current[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    powers_.push_back(current);
    std::vector<Rational> shifted(degree_ + 1);
    for (std::size_t k = 0; k < degree_; ++k) shifted[k + 1] = current[k];
    reduce_product(shifted);
    current = std::move(shifted);
  }
}

void Field::reduce_product(std::vector<Rational>& product) const {
  // modulus_ is monic of degree degree_.
  for (std::size_t i = product.size(); i-- > degree_;) {
    if (product[i] == 0) continue;
    const Rational factor = product[i];
    const std::size_t shift = i - degree_;
    for (std::size_t j = 0; j < degree_; ++j) {
      if (modulus_[j] != 0) product[shift + j] -= factor * modulus_[j];
    }
    product[i] = 0;
  }
  product.resize(degree_);
}

FieldElement Field::zeta_power(std::int64_t k) const {
  if (descriptor_.kind != FieldKind::cyclotomic) {
    throw FieldError("zeta_power requires a cyclotomic field, got " + descriptor_.to_string());
  }
  return FieldElement(*this, powers_[static_cast<std::size_t>(positive_mod(k, descriptor_.N))]);
}

FieldElement Field::sqrt_d() const {
  if (descriptor_.kind != FieldKind::quadratic) {
    throw FieldError("sqrt_d requires a quadratic field, got " + descriptor_.to_string());
  }
  return FieldElement(*this, std::vector<Rational>{Rational(0), Rational(1)});
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : field_(&Field::rational()), coeffs_(1) {}

FieldElement::FieldElement(const Field& field, const Rational& value)
    : field_(&field), coeffs_(field.degree()) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

FieldElement::FieldElement(const Field& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field.degree()) {
    throw FieldError("element of " + field.descriptor().to_string() + " needs " +
                     std::to_string(field.degree()) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (field_ != other.field_) {
    throw FieldMismatchError("field mismatch: " + field_->descriptor().to_string() + " vs " +
                             other.field_->descriptor().to_string());
  }
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const { return coeffs_[0] == 1 && is_rational(); }

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(other);
  switch (field_->kind()) {
    case FieldKind::rational:
      coeffs_[0] *= other.coeffs_[0];
      return *this;
    case FieldKind::quadratic: {
      const Rational& a = coeffs_[0];
      const Rational& b = coeffs_[1];
      const Rational& c = other.coeffs_[0];
      const Rational& e = other.coeffs_[1];
      Rational real = a * c + b * e * field_->descriptor().d;
      Rational irr = a * e + b * c;
      coeffs_[0] = std::move(real);
      coeffs_[1] = std::move(irr);
      return *this;
    }
    case FieldKind::cyclotomic: {
      const std::size_t n = coeffs_.size();
      if (other.is_rational()) {
        for (auto& c : coeffs_) c *= other.coeffs_[0];
        return *this;
      }
      std::vector<Rational> product(2 * n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (other.coeffs_[j] != 0) product[i + j] += coeffs_[i] * other.coeffs_[j];
        }
      }
      field_->reduce_product(product);
      coeffs_ = std::move(product);
      return *this;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  require_same_field(other);
  if (other.is_rational()) {
    if (other.coeffs_[0] == 0) throw DivisionByZeroError("division by zero");
    for (auto& c : coeffs_) c /= other.coeffs_[0];
    return *this;
  }
  return *this *= other.inv();
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  switch (field_->kind()) {
    case FieldKind::rational:
      return FieldElement(*field_, Rational(1) / coeffs_[0]);
    case FieldKind::quadratic: {
      const Rational norm = coeffs_[0] * coeffs_[0] - coeffs_[1] * coeffs_[1] * field_->descriptor().d;
      return FieldElement(*field_, std::vector<Rational>{coeffs_[0] / norm, -coeffs_[1] / norm});
    }
    case FieldKind::cyclotomic: {
      if (is_rational()) return FieldElement(*field_, Rational(1) / coeffs_[0]);
      // Extended Euclid: find s with s * a = const (mod Phi_N).
      RationalPolynomial r0 = field_->modulus_;
      RationalPolynomial r1 = poly::trim(coeffs_);
      RationalPolynomial s0;
      RationalPolynomial s1{Rational(1)};
      while (!r1.empty()) {
        auto [q, r] = poly::divmod(r0, r1);
        RationalPolynomial qs = poly::multiply(q, s1);
        RationalPolynomial s2(std::max(s0.size(), qs.size()));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        s0 = std::move(s1);
        s1 = poly::trim(std::move(s2));
        r0 = std::move(r1);
        r1 = std::move(r);
      }
      // r0 is the gcd, a nonzero constant because Phi_N is irreducible.
      if (r0.size() != 1) throw FieldError("inverse: element not coprime to modulus");
      std::vector<Rational> out = poly::divmod(s0, field_->modulus_).second;
      for (auto& c : out) c /= r0[0];
      out.resize(coeffs_.size());
      return FieldElement(*field_, std::move(out));
    }
  }
  return *this;
}

FieldElement FieldElement::conjugate() const {
  switch (field_->kind()) {
    case FieldKind::rational:
      return *this;
    case FieldKind::quadratic:
      return FieldElement(*field_, std::vector<Rational>{coeffs_[0], -coeffs_[1]});
    case FieldKind::cyclotomic: {
      const std::int64_t N = field_->descriptor().N;
      std::vector<Rational> out(coeffs_.size());
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& image = field_->powers_[static_cast<std::size_t>(
            positive_mod(N - static_cast<std::int64_t>(k), N))];
        for (std::size_t j = 0; j < out.size(); ++j) {
          if (image[j] != 0) out[j] += coeffs_[k] * image[j];
        }
      }
      return FieldElement(*field_, std::move(out));
    }
  }
  return *this;
}

bool FieldElement::is_real() const {
  switch (field_->kind()) {
    case FieldKind::rational:
      return true;
    case FieldKind::quadratic:
      return field_->descriptor().d > 0 || coeffs_[1] == 0;
    case FieldKind::cyclotomic:
      return conjugate() == *this;
  }
  return false;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::size_t hash_rational(const Rational& q) {
  return mix(hash_integer(q.get_num_mpz_t()), hash_integer(q.get_den_mpz_t()));
}

std::size_t FieldElement::hash() const {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) h = mix(h, hash_rational(c));
  return h;
}

std::string FieldElement::to_string() const {
  switch (field_->kind()) {
    case FieldKind::rational:
      return coeffs_[0].get_str();
    case FieldKind::quadratic:
      return coeffs_[0].get_str() + " + " + coeffs_[1].get_str() + "*sqrt(" +
             std::to_string(field_->descriptor().d) + ")";
    case FieldKind::cyclotomic: {
      std::ostringstream out;
      bool first = true;
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << coeffs_[k].get_str();
        if (k == 1) out << "*z";
        if (k > 1) out << "*z^" << k;
      }
      if (first) out << "0";
      return out.str();
    }
  }
  return "?";
}

int real_sign(const FieldElement& value) {
  const auto& desc = value.field().descriptor();
  if (value.is_rational()) return sgn(value.coeffs()[0]);
  if (desc.kind != FieldKind::quadratic || desc.d < 0) {
    throw FieldError("real_sign: unsupported field " + desc.to_string());
  }
  const Rational& a = value.coeffs()[0];
  const Rational& b = value.coeffs()[1];
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d.
  const int cmp_sq = cmp(Rational(a * a), Rational(b * b * desc.d));
  return sa > 0 ? cmp_sq : -cmp_sq;
}

std::pair<double, double> approximate(const FieldElement& value) {
  const auto& desc = value.field().descriptor();
  const auto c = value.coeffs();
  switch (desc.kind) {
    case FieldKind::rational:
      return {c[0].get_d(), 0.0};
    case FieldKind::quadratic: {
      const double root = std::sqrt(std::abs(static_cast<double>(desc.d)));
      if (desc.d > 0) return {c[0].get_d() + c[1].get_d() * root, 0.0};
      return {c[0].get_d(), c[1].get_d() * root};
    }
    case FieldKind::cyclotomic: {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(desc.N);
        re += c[k].get_d() * std::cos(angle);
        im += c[k].get_d() * std::sin(angle);
      }
      return {re, im};
    }
  }
  return {0.0, 0.0};
}

}  // namespace spanlines
