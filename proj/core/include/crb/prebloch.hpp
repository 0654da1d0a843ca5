#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crb/crgeom.hpp"
#include "crb/numfield.hpp"

namespace crb {

// Finite sum of symbols [z], z not in {0, 1}, plus an integer multiple of the
// symbolic constant c_F = [x] + [1 - x].
class PreBlochElement {
 public:
  PreBlochElement() = default;
  static PreBlochElement symbol(const FieldElement& z, long n = 1);
  static PreBlochElement c_f(long n = 1);

  // DegenerateArgument for z in {0, 1}.
  void add(const FieldElement& z, long n);
  void add_cf(long n) { cf_ += n; }

  const std::map<FieldElement, long>& terms() const { return terms_; }
  long cf() const { return cf_; }
  long coeff(const FieldElement& z) const;
  bool is_zero() const { return terms_.empty() && cf_ == 0; }
  // Field of the symbols, if any.
  std::optional<NumberField> field() const;

  PreBlochElement operator-() const;
  friend PreBlochElement operator+(const PreBlochElement& a, const PreBlochElement& b);
  friend PreBlochElement operator-(const PreBlochElement& a, const PreBlochElement& b);
  friend PreBlochElement operator*(long n, const PreBlochElement& a);
  PreBlochElement& operator+=(const PreBlochElement& b) { return *this = *this + b; }
  PreBlochElement& operator-=(const PreBlochElement& b) { return *this = *this - b; }
  friend bool operator==(const PreBlochElement& a, const PreBlochElement& b) {
    return a.terms_ == b.terms_ && a.cf_ == b.cf_;
  }

  // Conjugates every symbol; c_F is fixed.
  PreBlochElement sigma() const;

  // e.g. "4[-2] + 2[-1/8 + 1/8*g] - c_F"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<FieldElement, long> terms_;
  long cf_ = 0;
};

// [z01] + [z10] + [z23] + [z32].
PreBlochElement beta_config(const Quadruple& q);

enum class RelationKind { FiveTerm, InvPair, OneMinus, Square, SixC, CZero };

std::string relation_name(RelationKind k);
// Parse error for unknown names.
RelationKind parse_relation_name(const std::string& name);

struct RelationInstance {
  RelationKind kind;
  long mult = 1;
  std::vector<FieldElement> args;
};

using Certificate = std::vector<RelationInstance>;

// The element each relation asserts to vanish:
//   five_term(x, y)  [x] - [y] + [y/x] - [(1-1/x)/(1-1/y)] + [(1-x)/(1-y)]
//   inv_pair(z)      2[z] + 2[1/z]
//   one_minus(z)     [z] + [1-z] - c_F
//   square(z)        2[z^2] - 4[z] - 4[-z]
//   six_c            6 c_F
//   c_zero           c_F  (holds in P(C) only)
// DegenerateArgument on degenerate arguments.
PreBlochElement relation_value(const RelationInstance& r);

// strict: five_term only. extended: the cited identities in P(F).
// complex: extended plus c_zero, i.e. equality in P(C) with c_F = 0.
enum class Mode { Strict, Extended, Complex };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name);

// start - end == sum mult * relation_value, exactly. Throws
// IllegalRelationInMode and FieldMismatch.
bool verify_certificate(const PreBlochElement& start, const PreBlochElement& end, const Certificate& cert,
                        Mode mode = Mode::Extended);

// Integer multipliers m with start - end == sum m_i * value(candidates[i]),
// found by exact linear algebra; nullopt when no integral solution exists.
// Zero multipliers are dropped from the result.
std::optional<Certificate> solve_certificate(const PreBlochElement& start, const PreBlochElement& end,
                                             const std::vector<RelationInstance>& candidates);

// Candidate relations built from the symbols of `e`: inv_pair and one_minus
// on each symbol and on 1 - z, 1/z; five_term on ordered pairs of symbols.
std::vector<RelationInstance> candidate_relations(const PreBlochElement& e, Mode mode);

// Convenience search: candidate_relations then solve_certificate.
std::optional<Certificate> search_certificate(const PreBlochElement& start, const PreBlochElement& end, Mode mode);

// One branch of the figure-eight family at parameter beta, with
// r = sqrt(5 - 8 beta) and alpha^2 = 2 - 4 beta^2 + 2r, over Q(sqrt(-alpha^2)).
struct Fig8Family {
  Rational beta, r, alpha2;
  NumberField field{NumberField::rationals()};
  FieldElement w12, z12;
};

// OutsideFamily unless 5 - 8 beta is a rational square and alpha^2 > 0.
Fig8Family fig8_family(const Rational& beta);
// w12 / (w12 - 1) == conj(z12), exactly.
bool pairing_identity_check(const Rational& beta);

}  // namespace crb
