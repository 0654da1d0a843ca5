// Valuations and S-unit bases for Q and imaginary quadratic fields.
#include <algorithm>
#include <climits>
#include <map>
#include <tuple>

#include "crb/errors.hpp"
#include "crb/numfield.hpp"
#include "crb/sunits.hpp"

namespace crb {

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer isqrt_exact(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Square root of a modulo an odd prime p (a is a square).
Integer sqrt_mod(const Integer& a_in, const Integer& p) {
  Integer a = mod_pos(a_in, p);
  if (a == 0) return 0;
  Integer q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer m_c, c, t, r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  Integer e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  long m = s;
  while (t != 1) {
    long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

// Ring of integers Z[w] with w^2 = T w - N and discriminant T^2 - 4N.
struct Quad {
  Integer delta, dsf, T, N;
  Rational c1, f;
  FieldElement omega;
};

Quad quad_data(const NumberField& field) {
  if (field.degree() != 2) throw Error(ErrorKind::UnsupportedField, "valuations need Q or an imaginary quadratic field");
  const QPoly& m = field.minpoly();
  Quad q;
  q.c1 = m[1];
  Rational disc = m[1] * m[1] - 4 * m[0];
  if (disc >= 0) throw Error(ErrorKind::UnsupportedField, "real quadratic fields are not supported");
  Integer num = disc.get_num() * disc.get_den();  // same squarefree part
  Integer d = -1;
  for (const auto& p : prime_factors(num)) {
    if (valuation_int(num, p) % 2 == 1) d *= p;
  }
  q.dsf = d;
  Rational f2 = disc / Rational(d);
  q.f = Rational(isqrt_exact(f2.get_num()), isqrt_exact(f2.get_den()));
  FieldElement sqrt_d = (field.gen() * Rational(2) + q.c1) / q.f;
  if (mod_pos(d, 4) == 1) {
    q.delta = d;
    q.T = 1;
    q.N = (1 - d) / 4;
    q.omega = (sqrt_d + Rational(1)) / Rational(2);
  } else {
    q.delta = 4 * d;
    q.T = 0;
    q.N = -d;
    q.omega = sqrt_d;
  }
  return q;
}

// Coordinates (x, y) of a = x + y*w.
std::pair<Rational, Rational> to_xy(const Quad& q, const FieldElement& a) {
  const auto& c = a.coeffs();
  Rational u = c[0] - c[1] * q.c1 / 2;
  Rational w = c[1] * q.f / 2;
  if (q.T == 1) return {u - w, 2 * w};
  return {u, w};
}

struct QI {
  Integer x, y;
};

QI qmul(const Quad& q, const QI& a, const QI& b) {
  return {a.x * b.x - q.N * a.y * b.y, a.x * b.y + a.y * b.x + q.T * a.y * b.y};
}

Integer qnorm(const Quad& q, const QI& a) { return a.x * a.x + q.T * a.x * a.y + q.N * a.y * a.y; }

long val_p(const Integer& n, const Integer& p) { return n == 0 ? 0 : valuation_int(n, p); }

long val_int_elem(const Quad& q, const QI& a, const PrimeIdealLabel& P) {
  using K = PrimeIdealLabel::Kind;
  switch (P.kind) {
    case K::Inert:
      return std::min(a.x == 0 ? LONG_MAX : val_p(a.x, P.p), a.y == 0 ? LONG_MAX : val_p(a.y, P.p));
    case K::Ramified:
      return valuation_int(qnorm(q, a), P.p);
    case K::Split: {
      long m = std::min(a.x == 0 ? LONG_MAX : val_p(a.x, P.p), a.y == 0 ? LONG_MAX : val_p(a.y, P.p));
      Integer pm;
      mpz_pow_ui(pm.get_mpz_t(), P.p.get_mpz_t(), static_cast<unsigned long>(m));
      QI b{a.x / pm, a.y / pm};
      if (mod_pos(b.x + b.y * P.residue, P.p) != 0) return m;
      return m + valuation_int(qnorm(q, b), P.p);
    }
    case K::Rational:
      break;
  }
  throw Error(ErrorKind::FieldMismatch, "rational prime label used in a quadratic field");
}

// Ideal aZ + (b + c w)Z.
struct Ideal {
  Integer a, b, c;
};

Ideal hnf(const Quad&, const std::vector<QI>& gens) {
  Integer a = 0, b = 0, c = 0;
  for (const auto& g : gens) {
    Integer x = g.x, y = g.y;
    if (y == 0) {
      mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
      continue;
    }
    Integer gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), y.get_mpz_t());
    Integer nb = s * b + t * x;
    Integer rest = (c / gg) * x - (y / gg) * b;
    mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), rest.get_mpz_t());
    b = nb;
    c = gg;
  }
  a = abs(a);
  if (c < 0) {
    c = -c;
    b = -b;
  }
  if (a != 0) b = mod_pos(b, a);
  return {a, b, c};
}

Ideal imul(const Quad& q, const Ideal& I, const Ideal& J) {
  QI i1{I.a, 0}, i2{I.b, I.c}, j1{J.a, 0}, j2{J.b, J.c};
  return hnf(q, {qmul(q, i1, j1), qmul(q, i1, j2), qmul(q, i2, j1), qmul(q, i2, j2)});
}

Ideal prime_ideal(const PrimeIdealLabel& P) {
  if (P.kind == PrimeIdealLabel::Kind::Inert) return {P.p, 0, P.p};
  return {P.p, mod_pos(-P.residue, P.p), 1};
}

PrimeIdealLabel conj_label(const Quad& q, const PrimeIdealLabel& P) {
  if (P.kind != PrimeIdealLabel::Kind::Split) return P;
  PrimeIdealLabel c = P;
  c.residue = mod_pos(q.T - P.residue, P.p);
  return c;
}

struct Form {
  Integer A, B, C;
};

Form reduce_form(const Quad& q, Form f) {
  for (;;) {
    Integer two_a = 2 * f.A;
    Integer r = mod_pos(f.B, two_a);
    if (r > f.A) r -= two_a;
    f.B = r;
    f.C = (f.B * f.B - q.delta) / (4 * f.A);
    if (f.A > f.C) {
      std::swap(f.A, f.C);
      f.B = -f.B;
      continue;
    }
    if (f.A == f.C && f.B < 0) f.B = -f.B;
    return f;
  }
}

// Reduced form labelling the class of a nonzero ideal.
Form ideal_form(const Quad& q, const Ideal& I) {
  Integer A = I.a / I.c, bp = I.b / I.c;
  Form f{A, 2 * bp + q.T, 0};
  return reduce_form(q, f);
}

Ideal form_ideal(const Quad& q, const Form& f) {
  Integer bp = (f.B - q.T) / 2;
  return {f.A, mod_pos(bp, f.A), 1};
}

Ideal canon(const Quad& q, const Ideal& I) { return form_ideal(q, ideal_form(q, I)); }

using FormKey = std::pair<Integer, Integer>;
FormKey key_of(const Quad& q, const Ideal& I) {
  Form f = ideal_form(q, I);
  return {f.A, f.B};
}

Integer qnorm2_inner(const Quad& q, const QI& u, const QI& v) {
  // 2 * <u, v> for the bilinear form attached to the norm
  return 2 * u.x * v.x + q.T * (u.x * v.y + u.y * v.x) + 2 * q.N * u.y * v.y;
}

// Shortest nonzero element of the lattice spanned by u and v.
QI shortest(const Quad& q, QI u, QI v) {
  for (;;) {
    if (qnorm(q, u) > qnorm(q, v)) std::swap(u, v);
    Integer nu = qnorm(q, u);
    Integer ip = qnorm2_inner(q, u, v);  // 2<u,v>
    // mu = round(<u,v>/N(u)) = round(ip / (2 nu))
    Integer num = 2 * ip + 2 * nu;
    Integer den = 4 * nu;
    Integer mu;
    mpz_fdiv_q(mu.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (mu == 0) return u;
    v = {v.x - mu * u.x, v.y - mu * u.y};
    if (qnorm(q, v) >= nu) return u;
  }
}

FieldElement qi_to_field(const Quad& q, const QI& a) {
  return q.omega * Rational(a.y) + Rational(a.x);
}

std::vector<long> valuations_quadratic(const Quad& q, const FieldElement& a, const std::vector<PrimeIdealLabel>& primes) {
  auto [x, y] = to_xy(q, a);
  Integer den;
  mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
  QI alpha{x.get_num() * (den / x.get_den()), y.get_num() * (den / y.get_den())};
  std::vector<long> out;
  for (const auto& P : primes) {
    long e = P.kind == PrimeIdealLabel::Kind::Ramified ? 2 : 1;
    out.push_back(val_int_elem(q, alpha, P) - e * valuation_int(den, P.p));
  }
  return out;
}

}  // namespace

std::string PrimeIdealLabel::to_string() const {
  switch (kind) {
    case Kind::Rational:
      return p.get_str();
    case Kind::Inert:
      return "(" + p.get_str() + ")";
    case Kind::Split:
    case Kind::Ramified:
      break;
  }
  return "(" + p.get_str() + ", w - " + residue.get_str() + ")";
}

bool operator<(const PrimeIdealLabel& a, const PrimeIdealLabel& b) {
  return std::tie(a.p, a.kind, a.residue) < std::tie(b.p, b.kind, b.residue);
}

std::vector<PrimeIdealLabel> primes_above(const NumberField& f, const Integer& p) {
  using K = PrimeIdealLabel::Kind;
  if (f.degree() == 1) return {PrimeIdealLabel{p, K::Rational, 0}};
  Quad q = quad_data(f);
  int k = mpz_kronecker(q.delta.get_mpz_t(), p.get_mpz_t());
  if (k == -1) return {PrimeIdealLabel{p, K::Inert, 0}};
  // root of x^2 - T x + N mod p
  Integer r;
  if (p == 2) {
    for (r = 0; r < 2; ++r) {
      if (mod_pos(r * r - q.T * r + q.N, 2) == 0) break;
    }
  } else {
    Integer inv2 = (p + 1) / 2;
    r = mod_pos((q.T + sqrt_mod(q.delta, p)) * inv2, p);
  }
  if (k == 0) return {PrimeIdealLabel{p, K::Ramified, r}};
  Integer r2 = mod_pos(q.T - r, p);
  if (r2 < r) std::swap(r, r2);
  return {PrimeIdealLabel{p, K::Split, r}, PrimeIdealLabel{p, K::Split, r2}};
}

std::vector<long> valuations(const FieldElement& a, const std::vector<PrimeIdealLabel>& primes) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "valuation of 0");
  NumberField F = a.field();
  if (F.degree() == 1) {
    Rational v = a.rational_value();
    std::vector<long> out;
    for (const auto& P : primes) out.push_back(val_p(v.get_num(), P.p) - val_p(v.get_den(), P.p));
    return out;
  }
  return valuations_quadratic(quad_data(F), a, primes);
}

std::vector<Integer> support_primes(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "support of 0");
  NumberField F = a.field();
  Integer n;
  if (F.degree() == 1) {
    Rational v = a.rational_value();
    n = v.get_num() * v.get_den();
  } else {
    Quad q = quad_data(F);
    auto [x, y] = to_xy(q, a);
    Integer den;
    mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    QI alpha{x.get_num() * (den / x.get_den()), y.get_num() * (den / y.get_den())};
    n = qnorm(q, alpha) * den;
  }
  std::vector<Integer> out;
  for (const auto& p : prime_factors(n)) {
    for (long v : valuations(a, primes_above(F, p))) {
      if (v != 0) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

SUnitBasis s_unit_basis(const NumberField& F, const std::vector<PrimeIdealLabel>& primes) {
  SUnitBasis out;
  out.field = F;
  out.primes = primes;
  const std::size_t k = primes.size();
  if (F.degree() == 1) {
    out.zeta = F.from_rational(-1);
    out.zeta_order = 2;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<long> row(k, 0);
      row[i] = 1;
      out.lattice.push_back(row);
      out.generators.push_back(F.from_rational(Rational(primes[i].p)));
    }
    return out;
  }
  Quad q = quad_data(F);
  if (q.delta == -4) {
    out.zeta = q.omega;
    out.zeta_order = 4;
  } else if (q.delta == -3) {
    out.zeta = q.omega;
    out.zeta_order = 6;
  } else {
    out.zeta = F.from_rational(-1);
    out.zeta_order = 2;
  }

  // Subgroup of the class group generated by the primes, with one exponent
  // vector per class.
  std::map<FormKey, std::pair<Ideal, std::vector<long>>> table;
  Ideal unit{1, 0, 1};
  table[key_of(q, unit)] = {canon(q, unit), std::vector<long>(k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    Ideal P = prime_ideal(primes[i]);
    Ideal cur = canon(q, P);
    long n = 1;
    while (!table.count(key_of(q, cur))) {
      cur = canon(q, imul(q, cur, P));
      ++n;
    }
    std::vector<long> rel(k, 0);
    const auto& w = table[key_of(q, cur)].second;
    for (std::size_t j = 0; j < k; ++j) rel[j] = -w[j];
    rel[i] += n;
    out.lattice.push_back(rel);
    if (n > 1) {
      auto grown = table;
      for (const auto& [key, entry] : table) {
        Ideal I = entry.first;
        for (long j = 1; j < n; ++j) {
          I = canon(q, imul(q, I, P));
          std::vector<long> v = entry.second;
          v[i] += j;
          grown[key_of(q, I)] = {I, v};
        }
      }
      table = std::move(grown);
    }
  }

  for (const auto& rel : out.lattice) {
    Ideal J{1, 0, 1};
    Integer content = 1;
    Integer scale = 1;
    for (std::size_t j = 0; j < k; ++j) {
      long e = rel[j];
      if (e == 0) continue;
      const PrimeIdealLabel& label = e > 0 ? primes[j] : conj_label(q, primes[j]);
      Ideal P = prime_ideal(label);
      for (long t = 0; t < std::labs(e); ++t) {
        J = imul(q, J, P);
        Integer c = J.c;
        content *= c;
        J = {J.a / c, J.b / c, 1};
      }
      if (e < 0) {
        Integer norm = primes[j].kind == PrimeIdealLabel::Kind::Inert ? primes[j].p * primes[j].p : primes[j].p;
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), norm.get_mpz_t(), static_cast<unsigned long>(-e));
        scale *= pw;
      }
    }
    QI g = shortest(q, QI{J.a, 0}, QI{J.b, J.c});
    if (qnorm(q, g) != J.a * J.c) {
      throw Error(ErrorKind::UnfactoredElement, "relation ideal is not principal");
    }
    FieldElement gen = qi_to_field(q, g) * Rational(content) / Rational(scale);
    if (valuations_quadratic(q, gen, primes) != rel) {
      throw Error(ErrorKind::UnfactoredElement, "generator does not realize its divisor");
    }
    out.generators.push_back(gen);
  }
  return out;
}

SUnitCoords s_unit_coords(const SUnitBasis& basis, const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "0 is not an S-unit");
  std::vector<long> v = valuations(a, basis.primes);
  const std::size_t k = basis.primes.size();
  SUnitCoords out;
  out.exponents.assign(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    long diag = basis.lattice[i][i];
    if (v[i] % diag != 0) {
      throw Error(ErrorKind::UnfactoredElement, a.to_string() + " has a divisor outside the principal lattice");
    }
    long c = v[i] / diag;
    out.exponents[i] = c;
    for (std::size_t j = 0; j < k; ++j) v[j] -= c * basis.lattice[i][j];
  }
  FieldElement rest = a;
  for (std::size_t i = 0; i < k; ++i) {
    if (out.exponents[i] != 0) rest = rest / basis.generators[i].pow(out.exponents[i]);
  }
  FieldElement z = basis.field.one();
  for (int j = 0; j < basis.zeta_order; ++j) {
    if (rest == z) {
      out.zeta_exp = j;
      return out;
    }
    z = z * basis.zeta;
  }
  throw Error(ErrorKind::UnfactoredElement, a.to_string() + " is not a unit times the chosen generators");
}

}  // namespace crb
