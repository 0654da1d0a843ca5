#pragma once

#include <array>
#include <optional>
#include <vector>

#include "crb/numfield.hpp"

namespace crb {

// Point of S^3 = Heisenberg group + {infinity}. A finite point (z, t) is
// stored as (z, h) with h = i*t, so that h is sigma-antifixed and fields
// without a square root of -1 can still carry it.
struct Point {
  bool infinity = false;
  FieldElement z, h;

  static Point at_infinity() { return Point{true, {}, {}}; }
  // Throws Sigma unless h is sigma-antifixed.
  static Point from_zh(const FieldElement& z, const FieldElement& h);
  // t must be sigma-fixed; requires i in the field (FieldLacksI).
  static Point from_zt(const FieldElement& z, const FieldElement& t);

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  std::string to_string() const;
};

struct Lift {
  std::array<FieldElement, 3> v;
};

// ((-|z|^2 + i t)/2, z, 1) or (1, 0, 0).
Lift lift_point(const Point& p, const NumberField& field);
// <u, v> = v^* J u with J the antidiagonal identity.
FieldElement herm(const Lift& u, const Lift& v);
Lift box(const Lift& v, const Lift& w);
Lift scale(const Lift& v, const FieldElement& s);

// -<p0,p1><p1,p2><p2,p0>.
FieldElement triple_product(const Lift& p0, const Lift& p1, const Lift& p2);

// tan of Cartan's angular invariant, times i: tau = (T - sT)/(T + sT).
struct CartanTangent {
  FieldElement tau;
  friend bool operator==(const CartanTangent& a, const CartanTangent& b) { return a.tau == b.tau; }
};

// Throws NotGeneric when the triple lies on a C-circle or has repeats.
CartanTangent cartan_tangent(const Point& p0, const Point& p1, const Point& p2, const NumberField& field);
bool is_generic(const std::vector<Point>& points, const NumberField& field);

struct Quadruple {
  FieldElement z01, z10, z23, z32;
  friend bool operator==(const Quadruple& a, const Quadruple& b) {
    return a.z01 == b.z01 && a.z10 == b.z10 && a.z23 == b.z23 && a.z32 == b.z32;
  }
};

// The 24 cross-ratios of an ordered tetrahedron generated from a quadruple
// by the similarity relations. X(i,j,k,l) = z_ij for an even ordering and
// 1/z_ij for an odd one.
class CrossRatioTable {
 public:
  explicit CrossRatioTable(const Quadruple& q);
  const FieldElement& z(int i, int j) const { return z_[i][j]; }
  FieldElement X(int i, int j, int k, int l) const;

 private:
  std::array<std::array<FieldElement, 4>, 4> z_;
};

bool is_even_ordering(int i, int j, int k, int l);

// <p_l, c_ij><p_k, p_i> / (<p_k, c_ij><p_l, p_i>) with c_ij = p_i [x] p_j.
FieldElement geometric_cross_ratio(const std::array<Lift, 4>& lifts, int i, int j, int k, int l);

// Four generic points with their quadruple of invariants.
struct ConfigFour {
  std::array<Point, 4> points;
  Quadruple q;
  // NotGeneric, DegenerateCrossRatio.
  static ConfigFour make(const std::array<Point, 4>& points, const NumberField& field);
};

Quadruple cross_ratios(const std::array<Point, 4>& points, const NumberField& field);

// (z, s, t) in tau form: tau_s = i*s, tau_t = i*t.
struct NormalizedParams {
  FieldElement z, tau_s, tau_t;
};

// OutsideK when (z, s, t) leaves K or the taus are not sigma-antifixed.
Quadruple invariants_from_params(const NormalizedParams& p);
// (infinity, 0, (1, t), (z, s|z|^2)).
std::array<Point, 4> normalized_points(const NormalizedParams& p);
NormalizedParams normalize_config(const std::array<Point, 4>& points, const NumberField& field);
// t = s or t + s - 2(s Re z + Im z) = 0.
bool is_symmetric(const NormalizedParams& p);
void require_in_k(const NormalizedParams& p);

// -e^{2iA} = -(1 + tau)/(1 - tau).
FieldElement minus_exp_2iA(const CartanTangent& c);

// -e^{2iA} of the ordered face (f0, f1, f2) computed from the cross-ratio
// table alone: z_{f0 l} z_{f1 l} z_{f2 l} or its inverse, by parity.
FieldElement face_invariant(const Quadruple& q, const std::array<int, 3>& face);
// tau = (x + 1)/(x - 1) for x = -e^{2iA}; inverse of minus_exp_2iA.
FieldElement tau_from_minus_exp(const FieldElement& x);

// Exact check of -e^{2iA(p_i,p_j,p_k)} = z_il z_jl z_kl for an odd ordering
// [i,j,k,l] such as the boundary faces (1,2,3), (0,3,2), (0,1,3), (0,2,1);
// the reciprocal for an even one.
bool face_identity_exact(const ConfigFour& c, const std::array<int, 3>& face, const NumberField& field);
// Same identity with A computed numerically as an argument; PrecisionExhausted
// below 32 bits.
bool verify_face_identity(const ConfigFour& c, const std::array<int, 3>& face, const NumberField& field, long prec);

}  // namespace crb
