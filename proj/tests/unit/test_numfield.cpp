#include <gtest/gtest.h>

#include <mpfr.h>

#include "crb/errors.hpp"
#include "crb/numfield.hpp"
#include "support.hpp"

using namespace crb;

namespace {

NumberField q15() { return NumberField::define({15, 0, 1}, 0, {0, -1}); }

FieldElement A01(const NumberField& f) { return f.element({Rational(-1, 8), Rational(1, 8)}); }

FieldElement random_element(std::mt19937& rng, const NumberField& f) {
  return f.element({crbtest::random_rational(rng), crbtest::random_rational(rng)});
}

}  // namespace

TEST(NumField, DefinesImaginaryQuadratics) {
  NumberField f = q15();
  EXPECT_EQ(f.degree(), 2);
  ComplexBall g = f.gen().embed(128);
  EXPECT_TRUE(g.im.positive());
  EXPECT_EQ(f.gen().conj(), -f.gen());

  NumberField f7 = NumberField::define({7, 0, 1}, 0, {0, -1});
  EXPECT_EQ(f7.gen() * f7.gen(), f7.from_rational(-7));
  EXPECT_TRUE(f7.gen().embed(128).im.positive());
}

TEST(NumField, RejectsReducibleMinpoly) {
  try {
    NumberField::define({-1, 0, 1}, 0, {0, -1});
    FAIL() << "x^2 - 1 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
  }
}

TEST(NumField, RejectsNonAutomorphism) {
  EXPECT_THROW(NumberField::define({15, 0, 1}, 0, {1, 0}), Error);
}

TEST(NumField, Arithmetic) {
  NumberField f = q15();
  FieldElement g = f.gen();
  FieldElement a32 = Rational(1, 2) - g / Rational(6);
  EXPECT_EQ(a32 * a32.conj(), f.from_rational(Rational(2, 3)));
  EXPECT_EQ(f.from_rational(-2).inv(), f.from_rational(Rational(-1, 2)));
  EXPECT_EQ(A01(f) + A01(f).conj(), f.from_rational(Rational(-1, 4)));
  EXPECT_THROW(f.zero().inv(), Error);
}

TEST(NumField, EmbeddingMatchesSquareRootOracle) {
  NumberField f = q15();
  ComplexBall g = f.gen().embed(128);
  mpfr_t s, d;
  mpfr_inits2(256, s, d, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(s, 15, MPFR_RNDN);
  mpfr_sqrt(s, s, MPFR_RNDN);
  mpfr_sub(d, g.im.mid().get(), s, MPFR_RNDN);
  EXPECT_LT(std::fabs(mpfr_get_d(d, MPFR_RNDN)), std::ldexp(1.0, -100));
  EXPECT_LT(g.im.rad().to_double(), std::ldexp(1.0, -100));
  EXPECT_TRUE(g.re.contains_zero());
  mpfr_clears(s, d, static_cast<mpfr_ptr>(nullptr));

  ComplexBall z = f.zero().embed(128);
  EXPECT_TRUE(z.re.is_exact_zero());
  EXPECT_TRUE(z.im.is_exact_zero());
}

TEST(NumField, ConjugationFixesRationalsAndMatchesKnownValue) {
  NumberField f = q15();
  EXPECT_EQ(f.from_rational(-2).conj(), f.from_rational(-2));
  EXPECT_EQ(A01(f).conj(), f.element({Rational(-1, 8), Rational(-1, 8)}));
}

TEST(NumField, Valuations) {
  NumberField f = q15();
  auto above2 = primes_above(f, 2);
  ASSERT_EQ(above2.size(), 2u);
  EXPECT_EQ(valuations(f.from_rational(4), above2), (std::vector<long>{2, 2}));
  EXPECT_EQ(valuations(f.from_rational(-1), above2), (std::vector<long>{0, 0}));
  NumberField q = NumberField::rationals();
  EXPECT_EQ(valuations(q.from_rational(Rational(1, 2)), primes_above(q, 2)), (std::vector<long>{-1}));
  EXPECT_THROW(valuations(f.zero(), above2), Error);
}

TEST(NumFieldProperty, FieldAxiomsOnRandomElements) {
  NumberField f = q15();
  auto r = crbtest::run_property(200, 11, [&](std::mt19937& rng, int) -> std::string {
    FieldElement a = random_element(rng, f), b = random_element(rng, f);
    if (a.is_zero() || b.is_zero()) return "";
    if (!(a * b - b * a).is_zero()) return "commutativity";
    if ((a * b) / b != a) return "division";
    if ((a + b).conj() != a.conj() + b.conj() || (a * b).conj() != a.conj() * b.conj()) return "sigma";
    if (a.conj().conj() != a) return "involution";
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(NumFieldProperty, EmbeddingRespectsArithmeticAndConjugation) {
  NumberField f = q15();
  auto r = crbtest::run_property(200, 12, [&](std::mt19937& rng, int k) -> std::string {
    long prec = 64 + 32 * (k % 4);
    FieldElement a = random_element(rng, f), b = random_element(rng, f);
    ComplexBall ea = a.embed(prec), eb = b.embed(prec), eab = (a * b).embed(prec);
    ComplexBall prod = ea * eb;
    if (!(eab.re - prod.re).contains_zero() || !(eab.im - prod.im).contains_zero()) return "product";
    ComplexBall c = a.conj().embed(prec);
    if (!(c.re - ea.re).contains_zero() || !(c.im + ea.im).contains_zero()) return "conjugation";
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(NumFieldProperty, ValuationAdditivity) {
  NumberField f = q15();
  std::vector<PrimeIdealLabel> primes;
  for (int p : {2, 3, 5, 17}) {
    for (auto& P : primes_above(f, p)) primes.push_back(P);
  }
  auto r = crbtest::run_property(100, 13, [&](std::mt19937& rng, int) -> std::string {
    FieldElement a = random_element(rng, f), b = random_element(rng, f);
    if (a.is_zero() || b.is_zero()) return "";
    auto va = valuations(a, primes), vb = valuations(b, primes), vab = valuations(a * b, primes);
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (vab[k] != va[k] + vb[k]) return primes[k].to_string();
    }
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}
