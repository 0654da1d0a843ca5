#include <gtest/gtest.h>

#include "crb/crgeom.hpp"
#include "crb/errors.hpp"
#include "support.hpp"

using namespace crb;

namespace {

NumberField F() { return crbtest::gaussian(); }
FieldElement I() { return F().gen(); }
FieldElement q(const Rational& r) { return F().from_rational(r); }
Point pt(const Rational& x, const Rational& y, const Rational& t) {
  return Point::from_zt(F().element({x, y}), q(t));
}

NormalizedParams params(const FieldElement& z, const Rational& s, const Rational& t) {
  return {z, I() * s, I() * t};
}

bool same_lift(const Lift& a, const Lift& b) { return a.v == b.v; }

}  // namespace

TEST(CrGeom, Lifts) {
  Lift inf = lift_point(Point::at_infinity(), F());
  EXPECT_TRUE(same_lift(inf, Lift{{q(1), q(0), q(0)}}));
  EXPECT_TRUE(same_lift(lift_point(pt(0, 0, 0), F()), Lift{{q(0), q(0), q(1)}}));
  Rational t(3, 5);
  Lift l = lift_point(pt(1, 0, t), F());
  EXPECT_TRUE(same_lift(l, Lift{{(q(-1) + I() * t) / Rational(2), q(1), q(1)}}));
  EXPECT_TRUE(herm(l, l).is_zero());
}

TEST(CrGeom, Hermitian) {
  Lift inf = lift_point(Point::at_infinity(), F());
  EXPECT_EQ(herm(lift_point(pt(0, 0, 0), F()), inf), q(1));
  EXPECT_EQ(herm(lift_point(pt(1, 0, Rational(7, 2)), F()), inf), q(1));
}

TEST(CrGeom, Box) {
  Lift e0{{q(1), q(0), q(0)}}, e2{{q(0), q(0), q(1)}};
  EXPECT_TRUE(same_lift(box(e0, e2), Lift{{q(0), q(-1), q(0)}}));
}

TEST(CrGeom, CartanTangent) {
  Rational t(5, 3);
  CartanTangent c = cartan_tangent(Point::at_infinity(), pt(0, 0, 0), pt(1, 0, t), F());
  EXPECT_EQ(c.tau, I() * t);
  EXPECT_TRUE(cartan_tangent(Point::at_infinity(), pt(0, 0, 0), pt(1, 0, 0), F()).tau.is_zero());
  auto p = normalized_points(params(q(2), 0, 0));
  EXPECT_TRUE(cartan_tangent(p[1], p[2], p[3], F()).tau.is_zero());
}

TEST(CrGeom, Genericity) {
  EXPECT_TRUE(is_generic({Point::at_infinity(), pt(0, 0, 0), pt(1, 0, 0)}, F()));
  EXPECT_FALSE(is_generic({Point::at_infinity(), pt(0, 0, 0), pt(0, 0, 1)}, F()));
  EXPECT_FALSE(is_generic({pt(1, 1, 0), pt(1, 1, 0), pt(0, 0, 0)}, F()));
  EXPECT_THROW(cartan_tangent(Point::at_infinity(), pt(0, 0, 0), pt(0, 0, 1), F()), Error);
}

TEST(CrGeom, CrossRatiosOfNormalizedConfigurationMatchClosedForm) {
  auto r = crbtest::run_property(50, 21, [](std::mt19937& rng, int) -> std::string {
    FieldElement z = crbtest::random_qi(rng, F());
    Rational s = crbtest::random_rational(rng), t = crbtest::random_rational(rng);
    Quadruple got;
    try {
      got = cross_ratios(normalized_points(params(z, s, t)), F());
    } catch (const Error&) {
      return "";
    }
    FieldElement i = I(), zb = z.conj();
    FieldElement ti = t + i, si = s + i;
    Quadruple want{z, zb * si / ti, z * (ti - zb * si) / ((z - Rational(1)) * (t - i)),
                   zb * (z - Rational(1)) * (s - i) / (ti - zb * si)};
    if (!(got == want)) return "closed form differs at z = " + z.to_string();
    if (!(invariants_from_params(params(z, s, t)) == want)) return "invariants_from_params";
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
  Quadruple two{q(2), q(2), q(2), q(2)};
  EXPECT_EQ(invariants_from_params(params(q(2), 0, 0)), two);
  EXPECT_EQ(cross_ratios(normalized_points(params(q(2), 0, 0)), F()), two);
}

TEST(CrGeom, NormalizeConfig) {
  NormalizedParams p = normalize_config({Point::at_infinity(), pt(0, 0, 0), pt(1, 0, 0), pt(2, 0, 0)}, F());
  EXPECT_EQ(p.z, q(2));
  EXPECT_TRUE(p.tau_s.is_zero());
  EXPECT_TRUE(p.tau_t.is_zero());
  auto r = crbtest::run_property(200, 22, [](std::mt19937& rng, int) -> std::string {
    ConfigFour c = crbtest::random_config(rng, F());
    NormalizedParams n = normalize_config(c.points, F());
    if (!(invariants_from_params(n) == c.q)) return "round trip";
    NormalizedParams again = normalize_config(normalized_points(n), F());
    if (again.z != n.z || again.tau_s != n.tau_s || again.tau_t != n.tau_t) return "idempotence";
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(CrGeom, Symmetry) {
  EXPECT_TRUE(is_symmetric(params(F().element({3, 1}), Rational(1, 2), Rational(1, 2))));
  NormalizedParams two = params(q(2), 0, 0);
  EXPECT_TRUE(is_symmetric(two));
  Quadruple qq = invariants_from_params(two);
  EXPECT_EQ(qq.z01 * qq.z01.conj(), q(4));
  EXPECT_EQ(qq.z32 * qq.z32.conj(), q(4));
  EXPECT_FALSE(is_symmetric(params(I(), 1, 0)));
}

TEST(CrGeom, FaceIdentityAtTwoZeroZero) {
  ConfigFour c = ConfigFour::make(normalized_points(params(q(2), 0, 0)), F());
  for (auto f : std::vector<std::array<int, 3>>{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}) {
    EXPECT_TRUE(verify_face_identity(c, f, F(), 128));
    EXPECT_TRUE(face_identity_exact(c, f, F()));
  }
  EXPECT_THROW(verify_face_identity(c, {1, 2, 3}, F(), 16), Error);
}

TEST(CrGeomProperty, NullLiftsAndBoxOrthogonality) {
  auto r = crbtest::run_property(200, 23, [](std::mt19937& rng, int) -> std::string {
    Lift u = lift_point(crbtest::random_point(rng, F()), F());
    Lift w = lift_point(crbtest::random_point(rng, F()), F());
    if (!herm(u, u).is_zero()) return "lift not null";
    if (!herm(u, box(u, w)).is_zero() || !herm(w, box(u, w)).is_zero()) return "box not orthogonal";
    FieldElement lam = crbtest::random_qi(rng, F());
    Lift a = box(scale(u, lam), w), b = scale(box(u, w), lam.conj());
    if (a.v != b.v) return "box not conjugate-linear";
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(CrGeomProperty, CrossRatiosInvariantUnderLiftRescaling) {
  auto r = crbtest::run_property(200, 24, [](std::mt19937& rng, int) -> std::string {
    ConfigFour c = crbtest::random_config(rng, F());
    std::array<Lift, 4> l, s;
    for (int k = 0; k < 4; ++k) {
      l[k] = lift_point(c.points[k], F());
      s[k] = scale(l[k], crbtest::random_qi(rng, F()));
    }
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      if (geometric_cross_ratio(l, p[0], p[1], p[2], p[3]) != geometric_cross_ratio(s, p[0], p[1], p[2], p[3])) {
        return "rescaling changed a cross-ratio";
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}
