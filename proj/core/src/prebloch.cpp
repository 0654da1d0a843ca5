#include "crb/prebloch.hpp"

#include <set>

#include "crb/errors.hpp"

namespace crb {

namespace {

void require_nondegenerate(const FieldElement& z, const char* what) {
  if (z.is_zero() || z.is_one()) {
    throw Error(ErrorKind::DegenerateArgument, std::string(what) + " takes the value " + z.to_string());
  }
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

PreBlochElement PreBlochElement::symbol(const FieldElement& z, long n) {
  PreBlochElement e;
  e.add(z, n);
  return e;
}

PreBlochElement PreBlochElement::c_f(long n) {
  PreBlochElement e;
  e.cf_ = n;
  return e;
}

void PreBlochElement::add(const FieldElement& z, long n) {
  require_nondegenerate(z, "symbol");
  if (!terms_.empty() && !same_field(terms_.begin()->first.field_impl().get(), z.field_impl().get())) {
    throw Error(ErrorKind::FieldMismatch, "symbols from different fields");
  }
  if (n == 0) return;
  auto it = terms_.find(z);
  if (it == terms_.end()) {
    terms_.emplace(z, n);
    return;
  }
  it->second += n;
  if (it->second == 0) terms_.erase(it);
}

long PreBlochElement::coeff(const FieldElement& z) const {
  auto it = terms_.find(z);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<NumberField> PreBlochElement::field() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.field();
}

PreBlochElement PreBlochElement::operator-() const { return -1 * *this; }

PreBlochElement operator+(const PreBlochElement& a, const PreBlochElement& b) {
  PreBlochElement r = a;
  for (const auto& [z, n] : b.terms_) r.add(z, n);
  r.cf_ += b.cf_;
  return r;
}

PreBlochElement operator-(const PreBlochElement& a, const PreBlochElement& b) { return a + (-1) * b; }

PreBlochElement operator*(long n, const PreBlochElement& a) {
  PreBlochElement r;
  if (n == 0) return r;
  for (const auto& [z, c] : a.terms_) r.terms_.emplace(z, c * n);
  r.cf_ = a.cf_ * n;
  return r;
}

PreBlochElement PreBlochElement::sigma() const {
  PreBlochElement r;
  for (const auto& [z, n] : terms_) r.add(z.conj(), n);
  r.cf_ = cf_;
  return r;
}

std::string PreBlochElement::to_string() const {
  std::string out;
  auto emit = [&out](long n, const std::string& body) {
    if (out.empty()) {
      if (n < 0) out += "-";
    } else {
      out += n < 0 ? " - " : " + ";
    }
    long m = n < 0 ? -n : n;
    if (m != 1) out += std::to_string(m);
    out += body;
  };
  for (const auto& [z, n] : terms_) emit(n, "[" + z.to_string() + "]");
  if (cf_ != 0) emit(cf_, "c_F");
  return out.empty() ? "0" : out;
}

PreBlochElement beta_config(const Quadruple& q) {
  PreBlochElement e;
  for (const auto* z : {&q.z01, &q.z10, &q.z23, &q.z32}) e.add(*z, 1);
  return e;
}

std::string relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::FiveTerm:
      return "five_term";
    case RelationKind::InvPair:
      return "inv_pair";
    case RelationKind::OneMinus:
      return "one_minus";
    case RelationKind::Square:
      return "square";
    case RelationKind::SixC:
      return "six_c";
    case RelationKind::CZero:
      return "c_zero";
  }
  return "?";
}

RelationKind parse_relation_name(const std::string& name) {
  for (RelationKind k : {RelationKind::FiveTerm, RelationKind::InvPair, RelationKind::OneMinus, RelationKind::Square,
                         RelationKind::SixC, RelationKind::CZero}) {
    if (relation_name(k) == name) return k;
  }
  throw Error(ErrorKind::Parse, "unknown relation kind '" + name + "'");
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Strict:
      return "strict";
    case Mode::Extended:
      return "extended";
    case Mode::Complex:
      return "complex";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  for (Mode m : {Mode::Strict, Mode::Extended, Mode::Complex}) {
    if (mode_name(m) == name) return m;
  }
  throw Error(ErrorKind::Parse, "unknown mode '" + name + "'");
}

PreBlochElement relation_value(const RelationInstance& r) {
  auto arity = [&](std::size_t n) {
    if (r.args.size() != n) {
      throw Error(ErrorKind::Parse, relation_name(r.kind) + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  PreBlochElement e;
  switch (r.kind) {
    case RelationKind::FiveTerm: {
      arity(2);
      const FieldElement& x = r.args[0];
      const FieldElement& y = r.args[1];
      require_nondegenerate(x, "five_term x");
      require_nondegenerate(y, "five_term y");
      FieldElement t3 = y / x;
      require_nondegenerate(t3, "five_term y/x");
      FieldElement t4 = (Rational(1) - x.inv()) / (Rational(1) - y.inv());
      FieldElement t5 = (Rational(1) - x) / (Rational(1) - y);
      require_nondegenerate(t4, "five_term (1-1/x)/(1-1/y)");
      require_nondegenerate(t5, "five_term (1-x)/(1-y)");
      e.add(x, 1);
      e.add(y, -1);
      e.add(t3, 1);
      e.add(t4, -1);
      e.add(t5, 1);
      return e;
    }
    case RelationKind::InvPair: {
      arity(1);
      const FieldElement& z = r.args[0];
      require_nondegenerate(z, "inv_pair z");
      e.add(z, 2);
      e.add(z.inv(), 2);
      return e;
    }
    case RelationKind::OneMinus: {
      arity(1);
      const FieldElement& z = r.args[0];
      require_nondegenerate(z, "one_minus z");
      e.add(z, 1);
      e.add(Rational(1) - z, 1);
      e.add_cf(-1);
      return e;
    }
    case RelationKind::Square: {
      arity(1);
      const FieldElement& z = r.args[0];
      require_nondegenerate(z, "square z");
      if ((z + Rational(1)).is_zero()) throw Error(ErrorKind::DegenerateArgument, "square needs z != -1");
      e.add(z * z, 2);
      e.add(z, -4);
      e.add(-z, -4);
      return e;
    }
    case RelationKind::SixC:
      arity(0);
      e.add_cf(6);
      return e;
    case RelationKind::CZero:
      arity(0);
      e.add_cf(1);
      return e;
  }
  return e;
}

namespace {

void check_mode(const RelationInstance& r, Mode mode) {
  bool ok = true;
  if (mode == Mode::Strict) ok = r.kind == RelationKind::FiveTerm;
  if (mode == Mode::Extended) ok = r.kind != RelationKind::CZero;
  if (!ok) {
    throw Error(ErrorKind::IllegalRelationInMode, relation_name(r.kind) + " is not admitted in " + mode_name(mode) + " mode");
  }
}

void check_fields(const PreBlochElement& a, const PreBlochElement& b) {
  auto fa = a.field(), fb = b.field();
  if (fa && fb && !fa->same_as(*fb)) throw Error(ErrorKind::FieldMismatch, "elements over different fields");
}

}  // namespace

bool verify_certificate(const PreBlochElement& start, const PreBlochElement& end, const Certificate& cert, Mode mode) {
  check_fields(start, end);
  PreBlochElement diff = start - end;
  for (const auto& r : cert) {
    check_mode(r, mode);
    PreBlochElement v = relation_value(r);
    check_fields(diff, v);
    diff -= r.mult * v;
  }
  return diff.is_zero();
}

std::optional<Certificate> solve_certificate(const PreBlochElement& start, const PreBlochElement& end,
                                             const std::vector<RelationInstance>& candidates) {
  PreBlochElement target = start - end;
  std::vector<PreBlochElement> values;
  std::map<FieldElement, std::size_t> row_of;
  for (const auto& [z, n] : target.terms()) row_of.emplace(z, 0);
  for (const auto& c : candidates) {
    values.push_back(relation_value(c));
    for (const auto& [z, n] : values.back().terms()) row_of.emplace(z, 0);
  }
  std::size_t rows = 0;
  for (auto& [z, idx] : row_of) idx = rows++;
  const std::size_t cf_row = rows++;
  const std::size_t cols = candidates.size();
  // Augmented matrix [A | b].
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [z, n] : values[j].terms()) m[row_of[z]][j] = n;
    m[cf_row][j] = values[j].cf();
  }
  for (const auto& [z, n] : target.terms()) m[row_of[z]][cols] = n;
  m[cf_row][cols] = target.cf();

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;
  }
  Certificate cert;
  for (std::size_t i = 0; i < r; ++i) {
    const Rational& v = m[i][cols];
    if (v == 0) continue;
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    RelationInstance inst = candidates[pivot_col[i]];
    inst.mult = v.get_num().get_si();
    cert.push_back(inst);
  }
  if (!verify_certificate(start, end, cert, Mode::Complex)) return std::nullopt;
  return cert;
}

std::vector<RelationInstance> candidate_relations(const PreBlochElement& e, Mode mode) {
  std::vector<RelationInstance> out;
  std::set<FieldElement> seen;
  std::vector<FieldElement> keys;
  for (const auto& [z, n] : e.terms()) keys.push_back(z);
  auto push_unary = [&](const FieldElement& z) {
    if (z.is_zero() || z.is_one() || !seen.insert(z).second) return;
    out.push_back({RelationKind::InvPair, 1, {z}});
    out.push_back({RelationKind::OneMinus, 1, {z}});
  };
  if (mode != Mode::Strict) {
    for (const auto& z : keys) {
      push_unary(z);
      push_unary(Rational(1) - z);
      push_unary(z.inv());
      push_unary(Rational(1) - z.inv());
    }
    // c_zero ahead of six_c so that the pivot on the c_F row is unimodular.
    if (mode == Mode::Complex) out.push_back({RelationKind::CZero, 1, {}});
    out.push_back({RelationKind::SixC, 1, {}});
  }
  for (const auto& x : keys) {
    for (const auto& y : keys) {
      if (x == y) continue;
      RelationInstance r{RelationKind::FiveTerm, 1, {x, y}};
      try {
        relation_value(r);
        out.push_back(r);
      } catch (const Error&) {
      }
    }
  }
  return out;
}

std::optional<Certificate> search_certificate(const PreBlochElement& start, const PreBlochElement& end, Mode mode) {
  PreBlochElement both = start + end;
  if (mode == Mode::Complex) {
    // Reach end + j c_F in P(F), then drop the c_F multiple.
    auto pool = candidate_relations(both, Mode::Extended);
    for (long j : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L}) {
      auto cert = solve_certificate(start, end + PreBlochElement::c_f(j), pool);
      if (!cert) continue;
      if (j != 0) cert->push_back({RelationKind::CZero, j, {}});
      if (verify_certificate(start, end, *cert, mode)) return cert;
    }
    return std::nullopt;
  }
  auto cert = solve_certificate(start, end, candidate_relations(both, mode));
  if (cert && !verify_certificate(start, end, *cert, mode)) return std::nullopt;
  return cert;
}

Fig8Family fig8_family(const Rational& beta) {
  Fig8Family f;
  f.beta = beta;
  auto r = rational_sqrt(5 - 8 * beta);
  if (!r) throw Error(ErrorKind::OutsideFamily, "5 - 8*beta is not the square of a rational");
  f.r = *r;
  f.alpha2 = 2 - 4 * beta * beta + 2 * f.r;
  if (f.alpha2 <= 0) throw Error(ErrorKind::OutsideFamily, "alpha^2 = " + format_rational(f.alpha2) + " is not positive");
  // g = alpha * i
  f.field = NumberField::define({f.alpha2, Rational(0), Rational(1)}, 0, {Rational(0), Rational(-1)});
  FieldElement g = f.field.gen();
  f.w12 = g / Rational(2) + beta;
  Rational den = f.r + 3 - 4 * beta;
  if (den == 0) throw Error(ErrorKind::OutsideFamily, "z12 has a vanishing denominator");
  f.z12 = (g + (f.r - 2 * beta + 1)) / den;
  return f;
}

bool pairing_identity_check(const Rational& beta) {
  Fig8Family f = fig8_family(beta);
  return f.w12 / (f.w12 - Rational(1)) == f.z12.conj();
}

}  // namespace crb
