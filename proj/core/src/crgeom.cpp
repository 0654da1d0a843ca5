#include "crb/crgeom.hpp"

#include "crb/errors.hpp"

namespace crb {

namespace {

bool is_zero_or_one(const FieldElement& x) { return x.is_zero() || x.is_one(); }

}  // namespace

Point Point::from_zh(const FieldElement& z, const FieldElement& h) {
  require_same_field(z, h);
  if (!h.is_sigma_antifixed()) throw Error(ErrorKind::Sigma, "height i*t must be sigma-antifixed");
  return Point{false, z, h};
}

Point Point::from_zt(const FieldElement& z, const FieldElement& t) {
  require_same_field(z, t);
  if (!t.is_sigma_fixed()) throw Error(ErrorKind::Sigma, "height t must be sigma-fixed");
  auto i = z.field().sqrt_minus_one();
  if (!i) throw Error(ErrorKind::FieldLacksI, "field has no square root of -1; give i*t instead");
  return Point{false, z, *i * t};
}

bool operator==(const Point& a, const Point& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.z == b.z && a.h == b.h;
}

std::string Point::to_string() const {
  if (infinity) return "inf";
  return "(" + z.to_string() + ", i*t = " + h.to_string() + ")";
}

Lift lift_point(const Point& p, const NumberField& field) {
  if (p.infinity) return Lift{{field.one(), field.zero(), field.zero()}};
  FieldElement v0 = (p.h - p.z * p.z.conj()) / Rational(2);
  return Lift{{v0, p.z, field.one()}};
}

FieldElement herm(const Lift& u, const Lift& v) {
  return u.v[0] * v.v[2].conj() + u.v[1] * v.v[1].conj() + u.v[2] * v.v[0].conj();
}

Lift box(const Lift& v, const Lift& w) {
  FieldElement v0 = v.v[0].conj(), v1 = v.v[1].conj(), v2 = v.v[2].conj();
  FieldElement w0 = w.v[0].conj(), w1 = w.v[1].conj(), w2 = w.v[2].conj();
  return Lift{{v0 * w1 - v1 * w0, v2 * w0 - v0 * w2, v1 * w2 - v2 * w1}};
}

Lift scale(const Lift& v, const FieldElement& s) { return Lift{{v.v[0] * s, v.v[1] * s, v.v[2] * s}}; }

FieldElement triple_product(const Lift& p0, const Lift& p1, const Lift& p2) {
  return -(herm(p0, p1) * herm(p1, p2) * herm(p2, p0));
}

CartanTangent cartan_tangent(const Point& p0, const Point& p1, const Point& p2, const NumberField& field) {
  FieldElement T = triple_product(lift_point(p0, field), lift_point(p1, field), lift_point(p2, field));
  FieldElement re2 = T + T.conj();
  if (re2.is_zero()) throw Error(ErrorKind::NotGeneric, "triple lies on a C-circle or repeats a point");
  return CartanTangent{(T - T.conj()) / re2};
}

bool is_generic(const std::vector<Point>& points, const NumberField& field) {
  const std::size_t n = points.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (points[a] == points[b]) return false;
    }
  }
  std::vector<Lift> lifts;
  for (const auto& p : points) lifts.push_back(lift_point(p, field));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        FieldElement T = triple_product(lifts[a], lifts[b], lifts[c]);
        if ((T + T.conj()).is_zero()) return false;
      }
    }
  }
  return true;
}

bool is_even_ordering(int i, int j, int k, int l) {
  int a[4] = {i, j, k, l};
  int inv = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) inv += a[x] > a[y];
  }
  return inv % 2 == 0;
}

CrossRatioTable::CrossRatioTable(const Quadruple& q) {
  auto sim = [](const FieldElement& x) { return (Rational(1) - x).inv(); };
  z_[0][1] = q.z01;
  z_[0][2] = sim(z_[0][1]);
  z_[0][3] = sim(z_[0][2]);
  z_[1][0] = q.z10;
  z_[1][3] = sim(z_[1][0]);
  z_[1][2] = sim(z_[1][3]);
  z_[2][3] = q.z23;
  z_[2][0] = sim(z_[2][3]);
  z_[2][1] = sim(z_[2][0]);
  z_[3][2] = q.z32;
  z_[3][1] = sim(z_[3][2]);
  z_[3][0] = sim(z_[3][1]);
}

FieldElement CrossRatioTable::X(int i, int j, int k, int l) const {
  return is_even_ordering(i, j, k, l) ? z_[i][j] : z_[i][j].inv();
}

FieldElement geometric_cross_ratio(const std::array<Lift, 4>& p, int i, int j, int k, int l) {
  Lift c = box(p[i], p[j]);
  FieldElement num = herm(p[l], c) * herm(p[k], p[i]);
  FieldElement den = herm(p[k], c) * herm(p[l], p[i]);
  if (num.is_zero() || den.is_zero()) throw Error(ErrorKind::NotGeneric, "degenerate polar data");
  return num / den;
}

Quadruple cross_ratios(const std::array<Point, 4>& points, const NumberField& field) {
  if (!is_generic({points.begin(), points.end()}, field)) {
    throw Error(ErrorKind::NotGeneric, "configuration is not generic");
  }
  std::array<Lift, 4> l;
  for (int a = 0; a < 4; ++a) l[a] = lift_point(points[a], field);
  Quadruple q{geometric_cross_ratio(l, 0, 1, 2, 3), geometric_cross_ratio(l, 1, 0, 3, 2),
              geometric_cross_ratio(l, 2, 3, 0, 1), geometric_cross_ratio(l, 3, 2, 1, 0)};
  for (const auto* x : {&q.z01, &q.z10, &q.z23, &q.z32}) {
    if (is_zero_or_one(*x)) throw Error(ErrorKind::DegenerateCrossRatio, "cross-ratio " + x->to_string());
  }
  return q;
}

ConfigFour ConfigFour::make(const std::array<Point, 4>& points, const NumberField& field) {
  return ConfigFour{points, cross_ratios(points, field)};
}

void require_in_k(const NormalizedParams& p) {
  require_same_field(p.z, p.tau_s);
  require_same_field(p.z, p.tau_t);
  if (!p.tau_s.is_sigma_antifixed() || !p.tau_t.is_sigma_antifixed()) {
    throw Error(ErrorKind::OutsideK, "s and t must be real");
  }
  if (is_zero_or_one(p.z)) throw Error(ErrorKind::OutsideK, "z must avoid 0 and 1");
  if (p.z.conj() * (p.tau_s - Rational(1)) == p.tau_t - Rational(1)) {
    throw Error(ErrorKind::OutsideK, "conj(z)(s+i)/(t+i) = 1");
  }
}

Quadruple invariants_from_params(const NormalizedParams& p) {
  require_in_k(p);
  const FieldElement& z = p.z;
  FieldElement zb = z.conj();
  FieldElement ts = p.tau_s, tt = p.tau_t;
  FieldElement gap = (tt - Rational(1)) - zb * (ts - Rational(1));
  Quadruple q;
  q.z01 = z;
  q.z10 = zb * (ts - Rational(1)) / (tt - Rational(1));
  q.z23 = z * gap / ((z - Rational(1)) * (tt + Rational(1)));
  q.z32 = zb * (z - Rational(1)) * (ts + Rational(1)) / gap;
  for (const auto* x : {&q.z10, &q.z23, &q.z32}) {
    if (is_zero_or_one(*x)) throw Error(ErrorKind::DegenerateCrossRatio, "cross-ratio " + x->to_string());
  }
  return q;
}

std::array<Point, 4> normalized_points(const NormalizedParams& p) {
  require_in_k(p);
  NumberField F = p.z.field();
  return {Point::at_infinity(), Point{false, F.zero(), F.zero()}, Point{false, F.one(), p.tau_t},
          Point{false, p.z, p.tau_s * p.z * p.z.conj()}};
}

NormalizedParams normalize_config(const std::array<Point, 4>& points, const NumberField& field) {
  Quadruple q = cross_ratios(points, field);
  NormalizedParams p{q.z01, cartan_tangent(points[0], points[1], points[3], field).tau,
                     cartan_tangent(points[0], points[1], points[2], field).tau};
  require_in_k(p);
  return p;
}

bool is_symmetric(const NormalizedParams& p) {
  if (p.tau_s == p.tau_t) return true;
  // i * (t + s - 2 s Re z - 2 Im z) with 2 Re z = z + conj z and
  // 2 i Im z = z - conj z.
  FieldElement w = p.tau_t + p.tau_s - p.tau_s * (p.z + p.z.conj()) - (p.z - p.z.conj());
  return w.is_zero();
}

FieldElement minus_exp_2iA(const CartanTangent& c) {
  return -(c.tau + Rational(1)) / (Rational(1) - c.tau);
}

namespace {

int remaining_index(const std::array<int, 3>& f) {
  for (int l = 0; l < 4; ++l) {
    if (l != f[0] && l != f[1] && l != f[2]) return l;
  }
  throw Error(ErrorKind::Parse, "face indices must be distinct in 0..3");
}

}  // namespace

FieldElement face_invariant(const Quadruple& q, const std::array<int, 3>& f) {
  int l = remaining_index(f);
  CrossRatioTable t(q);
  FieldElement prod = t.z(f[0], l) * t.z(f[1], l) * t.z(f[2], l);
  return is_even_ordering(f[0], f[1], f[2], l) ? prod.inv() : prod;
}

FieldElement tau_from_minus_exp(const FieldElement& x) { return (x + Rational(1)) / (x - Rational(1)); }

namespace {

FieldElement face_product(const ConfigFour& c, const std::array<int, 3>& f) { return face_invariant(c.q, f); }

}  // namespace

bool face_identity_exact(const ConfigFour& c, const std::array<int, 3>& f, const NumberField& field) {
  CartanTangent a = cartan_tangent(c.points[f[0]], c.points[f[1]], c.points[f[2]], field);
  return minus_exp_2iA(a) == face_product(c, f);
}

bool verify_face_identity(const ConfigFour& c, const std::array<int, 3>& f, const NumberField& field, long prec) {
  require_precision(prec);
  FieldElement T = triple_product(lift_point(c.points[f[0]], field), lift_point(c.points[f[1]], field),
                                  lift_point(c.points[f[2]], field));
  RealBall A = T.embed(prec).arg();
  RealBall two_a = A * RealBall::exact(2, prec + kGuardBits);
  ComplexBall lhs{-two_a.cos(), -two_a.sin()};
  ComplexBall rhs = face_product(c, f).embed(prec);
  return lhs.overlaps(rhs);
}

}  // namespace crb
