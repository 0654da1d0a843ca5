#include "crb/wedge.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "crb/errors.hpp"

namespace crb {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void WedgeElement::add(const FieldElement& a, const FieldElement& b, long n) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroElement, "wedge entries must be nonzero");
  if (n != 0) terms_.push_back({a, b, n});
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& w) {
  terms_.insert(terms_.end(), w.terms_.begin(), w.terms_.end());
  return *this;
}

WedgeElement operator*(long n, const WedgeElement& w) {
  WedgeElement r;
  if (n == 0) return r;
  for (const auto& t : w.terms_) r.terms_.push_back({t.a, t.b, n * t.n});
  return r;
}

WedgeElement delta_map(const PreBlochElement& e) {
  WedgeElement w;
  for (const auto& [z, n] : e.terms()) w.add(z, Rational(1) - z, n);
  if (e.cf() != 0) {
    NumberField F = e.field().value_or(NumberField::rationals());
    FieldElement h = F.from_rational(Rational(1, 2));
    w.add(h, h, 2 * e.cf());
  }
  return w;
}

std::vector<FieldElement> wedge_entries(const WedgeElement& w) {
  std::vector<FieldElement> out;
  for (const auto& t : w.terms()) {
    out.push_back(t.a);
    out.push_back(t.b);
  }
  return out;
}

MultiplicativeBasis MultiplicativeBasis::build(const std::vector<FieldElement>& elements, const NumberField& f) {
  std::set<Integer> ps;
  for (const auto& a : elements) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "cannot factor 0");
    for (const auto& p : support_primes(a)) ps.insert(p);
  }
  std::vector<PrimeIdealLabel> primes;
  for (const auto& p : ps) {
    for (auto& P : primes_above(f, p)) primes.push_back(std::move(P));
  }
  MultiplicativeBasis b;
  b.b_ = s_unit_basis(f, primes);
  return b;
}

const SUnitCoords& MultiplicativeBasis::coords(const FieldElement& a) const {
  // Rationals from Q (e.g. the 1/2 in c_F) embed in every field.
  if (a.field().degree() == 1 && !same_field(a.field_impl().get(), b_.field.impl().get())) {
    return coords(b_.field.from_rational(a.rational_value()));
  }
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(a, s_unit_coords(b_, a)).first->second;
}

CanonicalWedge::CanonicalWedge(std::size_t n, int order)
    : rank(n), m(order), free(n, std::vector<long>(n, 0)), diag(n, 0), tors(n, 0) {}

bool CanonicalWedge::is_zero() const {
  auto nz = [](long x) { return x != 0; };
  for (const auto& row : free) {
    if (std::any_of(row.begin(), row.end(), nz)) return false;
  }
  return std::none_of(diag.begin(), diag.end(), nz) && std::none_of(tors.begin(), tors.end(), nz) && zeta_bit == 0;
}

CanonicalWedge& CanonicalWedge::operator+=(const CanonicalWedge& o) {
  for (std::size_t j = 0; j < rank; ++j) {
    for (std::size_t l = j + 1; l < rank; ++l) free[j][l] += o.free[j][l];
    diag[j] = (diag[j] + o.diag[j]) % 2;
    tors[j] = mod(tors[j] + o.tors[j], m);
  }
  if (m % 2 == 0) zeta_bit = (zeta_bit + o.zeta_bit) % 2;
  return *this;
}

CanonicalWedge wedge_reduce(const WedgeElement& w, const MultiplicativeBasis& b) {
  const std::size_t n = b.rank();
  const int m = b.torsion_order();
  CanonicalWedge c(n, m);
  for (const auto& t : w.terms()) {
    const SUnitCoords& x = b.coords(t.a);
    const SUnitCoords& y = b.coords(t.b);
    for (std::size_t j = 0; j < n; ++j) {
      if (x.exponents[j] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        long v = t.n * x.exponents[j] * y.exponents[l];
        if (j < l) {
          c.free[j][l] += v;
        } else if (j > l) {
          c.free[l][j] -= v;
        } else {
          c.diag[j] = static_cast<int>(mod(c.diag[j] + v, 2));
        }
      }
    }
    for (std::size_t l = 0; l < n; ++l) {
      c.tors[l] = mod(c.tors[l] + t.n * x.zeta_exp * y.exponents[l] - t.n * x.exponents[l] * y.zeta_exp, m);
    }
    if (m % 2 == 0) c.zeta_bit = static_cast<int>(mod(c.zeta_bit + t.n * x.zeta_exp * y.zeta_exp, 2));
  }
  return c;
}

bool wedge_is_zero(const WedgeElement& w, const MultiplicativeBasis& b) { return wedge_reduce(w, b).is_zero(); }

std::string wedge_report(const CanonicalWedge& c, const MultiplicativeBasis& b) {
  const SUnitBasis& s = b.sunits();
  std::ostringstream os;
  os << "basis: zeta = " << s.zeta.to_string() << " (order " << s.zeta_order << ")";
  for (std::size_t j = 0; j < s.generators.size(); ++j) os << ", g" << j << " = " << s.generators[j].to_string();
  os << "\n";
  if (!s.primes.empty()) {
    os << "primes:";
    for (const auto& P : s.primes) os << " " << P.to_string();
    os << "\n";
  }
  for (std::size_t j = 0; j < c.rank; ++j) {
    for (std::size_t l = j + 1; l < c.rank; ++l) {
      if (c.free[j][l] != 0) os << "free g" << j << "^g" << l << ": " << c.free[j][l] << "\n";
    }
  }
  for (std::size_t j = 0; j < c.rank; ++j) {
    if (c.diag[j] != 0) os << "diag g" << j << "^g" << j << ": 1 (mod 2)\n";
    if (c.tors[j] != 0) os << "torsion zeta^g" << j << ": " << c.tors[j] << " (mod " << c.m << ")\n";
  }
  if (c.zeta_bit != 0) os << "torsion zeta^zeta: 1 (mod 2)\n";
  os << "canonical form: " << (c.is_zero() ? "zero" : "nonzero") << "\n";
  return os.str();
}

}  // namespace crb
