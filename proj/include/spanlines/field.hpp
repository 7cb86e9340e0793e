#pragma once

// Exact arithmetic in Q, Q(sqrt d) and the cyclotomic fields Q(zeta_N).
//
// Elements are immutable values holding a pointer to an interned Field
// object.  Fields are created once per descriptor and live for the rest of
// the process, so element copies never touch a reference count.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spanlines {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public FieldError {
 public:
  using FieldError::FieldError;
};

class DivisionByZeroError : public FieldError {
 public:
  using FieldError::FieldError;
};

enum class FieldKind { rational, quadratic, cyclotomic };

struct FieldDescriptor {
  FieldKind kind = FieldKind::rational;
  std::int64_t d = 0;  // quadratic only
  std::int64_t N = 0;  // cyclotomic only

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor quadratic(std::int64_t d);
  static FieldDescriptor cyclotomic(std::int64_t N);

  // Throws FieldError if the descriptor breaks the squarefree / N >= 1 rules.
  void validate() const;
  std::size_t degree() const;
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// Polynomials over Q, coefficients low degree first, no trailing zeros.
using RationalPolynomial = std::vector<Rational>;
// Polynomials over Z, coefficients low degree first.
using IntegerPolynomial = std::vector<Integer>;

/// Monic minimal polynomial of a primitive N-th root of unity, obtained by
/// exact division of x^N - 1 by the product of Phi_d over proper divisors d.
IntegerPolynomial cyclotomic_polynomial(std::int64_t N);

std::int64_t euler_phi(std::int64_t N);
bool is_squarefree(std::int64_t d);

namespace poly {
RationalPolynomial trim(RationalPolynomial p);
RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b);
// Returns {quotient, remainder}; throws DivisionByZeroError on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
IntegerPolynomial multiply(const IntegerPolynomial& a, const IntegerPolynomial& b);
}  // namespace poly

class Field;

class FieldElement {
 public:
  // Rational zero.
  FieldElement();
  FieldElement(const Field& field, const Rational& value);
  FieldElement(const Field& field, std::vector<Rational> coeffs);

  static FieldElement zero(const Field& field) { return FieldElement(field, Rational(0)); }
  static FieldElement one(const Field& field) { return FieldElement(field, Rational(1)); }

  const Field& field() const { return *field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when every coefficient beyond the constant term is zero.
  bool is_rational() const;
  const Rational& rational_part() const { return coeffs_[0]; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inv() const;
  FieldElement conjugate() const;
  bool is_real() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void require_same_field(const FieldElement& other) const;

  const Field* field_;
  std::vector<Rational> coeffs_;
};

class Field {
 public:
  // Interned: one object per descriptor for the lifetime of the process.
  static const Field& get(const FieldDescriptor& descriptor);
  static const Field& rational();

  const FieldDescriptor& descriptor() const { return descriptor_; }
  std::size_t degree() const { return degree_; }
  FieldKind kind() const { return descriptor_.kind; }

  // zeta^k for cyclotomic fields (k may be negative).
  FieldElement zeta_power(std::int64_t k) const;
  // sqrt(d) for quadratic fields.
  FieldElement sqrt_d() const;
  FieldElement from_integer(long value) const { return FieldElement(*this, Rational(value)); }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  explicit Field(const FieldDescriptor& descriptor);

  friend class FieldElement;

  void reduce_product(std::vector<Rational>& product) const;

  FieldDescriptor descriptor_;
  std::size_t degree_;
  RationalPolynomial modulus_;                 // Phi_N as monic rational polynomial
  std::vector<std::vector<Rational>> powers_;  // zeta^j reduced, j = 0..N-1
};

/// Sign of a real element: rationals, and quadratic elements with d > 0 under
/// the embedding sqrt(d) > 0.  Other fields throw FieldError.
int real_sign(const FieldElement& value);

/// Approximate value under the standard complex embedding, for display only.
std::pair<double, double> approximate(const FieldElement& value);

struct FieldElementHash {
  std::size_t operator()(const FieldElement& e) const { return e.hash(); }
};

std::size_t hash_rational(const Rational& q);

}  // namespace spanlines
