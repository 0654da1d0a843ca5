#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crb/ball.hpp"
#include "crb/rational.hpp"

namespace crb {

struct FieldImpl;
class FieldElement;

// Q[x]/(m(x)) with a designated complex root and the automorphism that
// realizes complex conjugation. Cheap to copy; the state is shared and
// immutable.
class NumberField {
 public:
  // minpoly: ascending coefficients, monic. sigma_image: power-basis
  // coordinates of sigma(gen). Roots are indexed by (imag desc, real asc).
  static NumberField define(const QPoly& minpoly, int embedding_index, const std::vector<Rational>& sigma_image);
  static NumberField rationals();
  // Q(sqrt(d)) for d < 0 via x^2 - d, generator embedded with
  // positive imaginary part, sigma(gen) = -gen.
  static NumberField imaginary_quadratic(long d);

  int degree() const;
  const QPoly& minpoly() const;
  int embedding_index() const;
  const std::vector<Rational>& sigma_image() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_rational(const Rational& q) const;
  // Pads or rejects (FieldMismatch) coefficient vectors of the wrong length.
  FieldElement element(const std::vector<Rational>& coeffs) const;

  // Element i with i^2 = -1, sigma(i) = -i, embedding +i; nullopt if absent.
  std::optional<FieldElement> sqrt_minus_one() const;

  // Certified enclosure of the designated root (prec >= 32).
  ComplexBall root(long prec) const;
  // All roots in index order.
  std::vector<ComplexBall> roots(long prec) const;

  bool same_as(const NumberField& other) const;
  std::string describe() const;

  const std::shared_ptr<const FieldImpl>& impl() const { return impl_; }
  explicit NumberField(std::shared_ptr<const FieldImpl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const FieldImpl> impl_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::shared_ptr<const FieldImpl> field, std::vector<Rational> coeffs);

  NumberField field() const;
  const std::shared_ptr<const FieldImpl>& field_impl() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator+(const FieldElement& a, const Rational& b);
  friend FieldElement operator+(const Rational& a, const FieldElement& b) { return b + a; }
  friend FieldElement operator-(const FieldElement& a, const Rational& b);
  friend FieldElement operator-(const Rational& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& b);
  friend FieldElement operator*(const Rational& a, const FieldElement& b) { return b * a; }
  friend FieldElement operator/(const FieldElement& a, const Rational& b);
  friend FieldElement operator/(const Rational& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inv() const;
  FieldElement pow(long e) const;
  FieldElement conj() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool is_sigma_fixed() const { return conj() == *this; }
  bool is_sigma_antifixed() const { return conj() == -*this; }

  ComplexBall embed(long prec) const;
  ComplexBall embed_at(const ComplexBall& root) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  // Total order (field identity, then coefficients); used for map keys.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  // e.g. "-1/8 + 1/8*g"
  std::string to_string() const;

 private:
  std::shared_ptr<const FieldImpl> field_;
  std::vector<Rational> c_;
};

// Throws FieldMismatch unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);
bool same_field(const FieldImpl* a, const FieldImpl* b);

// Prime ideal of Q or of an imaginary quadratic field.
struct PrimeIdealLabel {
  enum class Kind { Rational, Split, Inert, Ramified };
  Integer p;
  Kind kind = Kind::Rational;
  // For split/ramified primes: r with omega = r (mod P), where omega is the
  // standard integral generator of the maximal order.
  Integer residue;

  std::string to_string() const;
  friend bool operator==(const PrimeIdealLabel& a, const PrimeIdealLabel& b) {
    return a.p == b.p && a.kind == b.kind && a.residue == b.residue;
  }
  friend bool operator<(const PrimeIdealLabel& a, const PrimeIdealLabel& b);
};

// Primes of the field above the rational prime p. UnsupportedField unless
// the field is Q or imaginary quadratic.
std::vector<PrimeIdealLabel> primes_above(const NumberField& f, const Integer& p);
// v_P(a) for each P. ZeroElement for a = 0.
std::vector<long> valuations(const FieldElement& a, const std::vector<PrimeIdealLabel>& primes);
// Rational primes below the support of a (sorted).
std::vector<Integer> support_primes(const FieldElement& a);

// Integer factorization helpers (trial division plus Pollard rho).
bool is_probable_prime(const Integer& n);
std::vector<Integer> prime_factors(Integer n);  // distinct, sorted; n != 0
long valuation_int(Integer n, const Integer& p);  // n != 0

}  // namespace crb
