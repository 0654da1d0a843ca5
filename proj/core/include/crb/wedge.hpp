#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crb/numfield.hpp"
#include "crb/prebloch.hpp"
#include "crb/sunits.hpp"

namespace crb {

// Formal sum of a ^ b, kept verbatim until reduction.
class WedgeElement {
 public:
  struct Term {
    FieldElement a, b;
    long n;
  };

  // ZeroElement for a or b zero.
  void add(const FieldElement& a, const FieldElement& b, long n = 1);
  const std::vector<Term>& terms() const { return terms_; }
  WedgeElement& operator+=(const WedgeElement& w);
  friend WedgeElement operator*(long n, const WedgeElement& w);

 private:
  std::vector<Term> terms_;
};

// sum n_z z ^ (1 - z); c_F contributes x^(1-x) + (1-x)^x at x = 1/2.
WedgeElement delta_map(const PreBlochElement& e);

class MultiplicativeBasis {
 public:
  // S-unit basis for the primes dividing the given elements.
  // UnsupportedField, ZeroElement.
  static MultiplicativeBasis build(const std::vector<FieldElement>& elements, const NumberField& f);

  const SUnitBasis& sunits() const { return b_; }
  std::size_t rank() const { return b_.generators.size(); }
  int torsion_order() const { return b_.zeta_order; }
  // Cached; UnfactoredElement when a is not a unit over the basis.
  const SUnitCoords& coords(const FieldElement& a) const;

 private:
  SUnitBasis b_;
  mutable std::map<FieldElement, SUnitCoords> cache_;
};

// Elements of every term of w.
std::vector<FieldElement> wedge_entries(const WedgeElement& w);
inline MultiplicativeBasis build_mult_basis(const std::vector<FieldElement>& elements, const NumberField& f) {
  return MultiplicativeBasis::build(elements, f);
}

// Coordinates of an element of the exterior square of mu_m x Z^n, where
// 2 x^x = 0 but x^x itself need not vanish:
//   free[j][l] (j < l)  coefficient of g_j ^ g_l
//   diag[j]   (mod 2)   g_j ^ g_j
//   tors[l]   (mod m)   zeta ^ g_l
//   zeta_bit  (mod 2)   zeta ^ zeta, only when m is even
struct CanonicalWedge {
  std::size_t rank = 0;
  int m = 2;
  std::vector<std::vector<long>> free;
  std::vector<int> diag;
  std::vector<long> tors;
  int zeta_bit = 0;

  CanonicalWedge() = default;
  CanonicalWedge(std::size_t n, int order);

  bool is_zero() const;
  // Requires equal rank and order.
  CanonicalWedge& operator+=(const CanonicalWedge& o);
  friend bool operator==(const CanonicalWedge& a, const CanonicalWedge& b) {
    return a.rank == b.rank && a.m == b.m && a.free == b.free && a.diag == b.diag && a.tors == b.tors &&
           a.zeta_bit == b.zeta_bit;
  }
};

CanonicalWedge wedge_reduce(const WedgeElement& w, const MultiplicativeBasis& b);
bool wedge_is_zero(const WedgeElement& w, const MultiplicativeBasis& b);

// Basis list, nonzero free entries and torsion bits, one item per line.
std::string wedge_report(const CanonicalWedge& c, const MultiplicativeBasis& b);

}  // namespace crb
