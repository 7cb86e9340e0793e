#include <doctest.h>

#include <complex>
#include <random>

#include "oracle.hpp"
#include "spanlines/field.hpp"

using namespace spanlines;

namespace {

struct Sampler {
  std::mt19937_64 engine{12345};
  Rational rational() {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(engine), den(engine));
  }
  FieldElement element(const Field& f) {
    std::vector<Rational> c(f.degree());
    std::bernoulli_distribution sparse(0.3);
    for (auto& x : c) x = sparse(engine) ? Rational(0) : rational();
    return FieldElement(f, std::move(c));
  }
};

// Evaluate an element from its coefficients with an independent embedding.
oracle::Complex embed(const FieldElement& e) {
  const auto& d = e.field().descriptor();
  const auto c = e.coeffs();
  oracle::Complex out = c[0].get_d();
  if (d.kind == FieldKind::quadratic) {
    out += static_cast<long double>(c[1].get_d()) * std::sqrt(oracle::Complex(static_cast<long double>(d.d)));
  } else if (d.kind == FieldKind::cyclotomic) {
    for (std::size_t k = 1; k < c.size(); ++k) {
      out += static_cast<long double>(c[k].get_d()) * oracle::root_of_unity(static_cast<long double>(k), d.N);
    }
  }
  return out;
}

bool close(oracle::Complex a, oracle::Complex b) {
  return std::abs(a - b) <= 1e-7L * (1.0L + std::abs(a) + std::abs(b));
}

std::vector<FieldDescriptor> sample_fields() {
  return {FieldDescriptor::rational(),      FieldDescriptor::quadratic(2),   FieldDescriptor::quadratic(3),
          FieldDescriptor::quadratic(-1),   FieldDescriptor::quadratic(-15), FieldDescriptor::cyclotomic(3),
          FieldDescriptor::cyclotomic(4),   FieldDescriptor::cyclotomic(5),  FieldDescriptor::cyclotomic(7),
          FieldDescriptor::cyclotomic(8),   FieldDescriptor::cyclotomic(9),  FieldDescriptor::cyclotomic(12),
          FieldDescriptor::cyclotomic(20)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials agree with the Moebius product formula") {
  for (int N = 1; N <= 120; ++N) {
    const auto phi = cyclotomic_polynomial(N);
    const auto expected = oracle::cyclotomic_moebius(N);
    REQUIRE(phi.size() == expected.size());
    for (std::size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] == expected[i]);
    CHECK(static_cast<std::int64_t>(phi.size()) - 1 == euler_phi(N));
  }
}

TEST_CASE("known cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(12) == IntegerPolynomial{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == IntegerPolynomial{1, -1, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto phi105 = cyclotomic_polynomial(105);
  CHECK(phi105.size() == 49);
  CHECK(phi105[7] == -2);
  CHECK(phi105[41] == -2);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), FieldError);
}

TEST_CASE("Phi_N divides x^N - 1 and the divisor product recovers it") {
  auto to_rational = [](const IntegerPolynomial& p) {
    RationalPolynomial out;
    for (const auto& c : p) out.emplace_back(c);
    return out;
  };
  for (int N = 1; N <= 100; ++N) {
    RationalPolynomial xn(N + 1, Rational(0));
    xn[0] = -1;
    xn[N] = 1;
    const auto [quotient, remainder] = poly::divmod(xn, to_rational(cyclotomic_polynomial(N)));
    CHECK(poly::trim(remainder).empty());
    if (N <= 50) {
      IntegerPolynomial product{1};
      for (int d = 1; d <= N; ++d) {
        if (N % d == 0) product = poly::multiply(product, cyclotomic_polynomial(d));
      }
      IntegerPolynomial expected(N + 1, 0);
      expected[0] = -1;
      expected[N] = 1;
      CHECK(product == expected);
    }
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(FieldDescriptor::quadratic(4), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::quadratic(1), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::quadratic(0), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::cyclotomic(0), FieldError);
  CHECK(FieldDescriptor::cyclotomic(12).degree() == 4);
  CHECK(FieldDescriptor::quadratic(-3).degree() == 2);
  CHECK(&Field::get(FieldDescriptor::cyclotomic(7)) == &Field::get(FieldDescriptor::cyclotomic(7)));
}

TEST_CASE("field axioms, inverses and conjugation on random elements") {
  Sampler sampler;
  for (const auto& desc : sample_fields()) {
    CAPTURE(desc.to_string());
    const Field& f = Field::get(desc);
    const FieldElement one = FieldElement::one(f);
    for (int trial = 0; trial < 1000; ++trial) {
      const FieldElement a = sampler.element(f);
      const FieldElement b = sampler.element(f);
      const FieldElement c = sampler.element(f);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == FieldElement::zero(f));
      REQUIRE(close(embed(a * b), embed(a) * embed(b)));
      REQUIRE(close(embed(a + b), embed(a) + embed(b)));
      REQUIRE(a.conjugate().conjugate() == a);
      REQUIRE((a * b).conjugate() == a.conjugate() * b.conjugate());
      REQUIRE((a + b).conjugate() == a.conjugate() + b.conjugate());
      if (!a.is_zero()) {
        REQUIRE(a * a.inv() == one);
        REQUIRE((b / a) * a == b);
        REQUIRE(close(embed(a.inv()), 1.0L / embed(a)));
      }
      REQUIRE((a * a.conjugate()).is_real());
      if (desc.kind == FieldKind::cyclotomic || (desc.kind == FieldKind::quadratic && desc.d < 0)) {
        REQUIRE(close(embed(a.conjugate()), std::conj(embed(a))));
      }
      if (desc.kind == FieldKind::quadratic && desc.d > 0) REQUIRE(a.is_real());
      if (a == b) REQUIRE(a.hash() == b.hash());
    }
  }
}

TEST_CASE("roots of unity") {
  for (int N : {3, 4, 5, 8, 12, 76}) {
    const Field& f = Field::get(FieldDescriptor::cyclotomic(N));
    CHECK(f.zeta_power(N).is_one());
    CHECK(f.zeta_power(0).is_one());
    CHECK(f.zeta_power(1) * f.zeta_power(-1) == FieldElement::one(f));
    if (N % 2 == 0) CHECK(f.zeta_power(N / 2) == -FieldElement::one(f));
    CHECK(close(embed(f.zeta_power(N - 1)), oracle::root_of_unity(N - 1, N)));
    CHECK_FALSE(f.zeta_power(1).is_real());
    CHECK((f.zeta_power(1) + f.zeta_power(-1)).is_real());
  }
  const Field& q2 = Field::get(FieldDescriptor::quadratic(2));
  CHECK(q2.sqrt_d() * q2.sqrt_d() == q2.from_integer(2));
}

TEST_CASE("errors") {
  const Field& f3 = Field::get(FieldDescriptor::cyclotomic(3));
  const Field& f5 = Field::get(FieldDescriptor::cyclotomic(5));
  CHECK_THROWS_AS(FieldElement::one(f3) + FieldElement::one(f5), FieldMismatchError);
  CHECK_THROWS_AS(FieldElement::zero(f3).inv(), DivisionByZeroError);
  CHECK_THROWS_AS(FieldElement::one(f3) / FieldElement::zero(f3), DivisionByZeroError);
  CHECK_THROWS_AS(FieldElement(f5, std::vector<Rational>{1, 2}), FieldError);
}

TEST_CASE("exact sign of a + b sqrt d") {
  const Field& f = Field::get(FieldDescriptor::quadratic(3));
  auto element = [&](Rational a, Rational b) { return FieldElement(f, std::vector<Rational>{a, b}); };
  CHECK(real_sign(element(0, 0)) == 0);
  CHECK(real_sign(element(2, -1)) == 1);     // 2 > sqrt 3
  CHECK(real_sign(element(-2, 1)) == -1);
  CHECK(real_sign(element(Rational(173, 100), -1)) == -1);  // 1.73 < sqrt 3
  CHECK(real_sign(element(Rational(1733, 1000), -1)) == 1);
  CHECK(real_sign(element(5, 0)) == 1);
  CHECK_THROWS_AS(real_sign(Field::get(FieldDescriptor::cyclotomic(5)).zeta_power(1)), FieldError);
}
