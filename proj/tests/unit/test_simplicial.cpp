#include <gtest/gtest.h>

#include "crb/dilog.hpp"
#include "crb/errors.hpp"
#include "crb/simplicial.hpp"
#include "crbcli/catalog.hpp"
#include "crbcli/moves.hpp"
#include "support.hpp"

using namespace crb;

namespace {

NumberField F() { return crbtest::gaussian(); }
FieldElement q(const Rational& r) { return F().from_rational(r); }

bool has_line(const ValidationReport& r, const std::string& prefix, CheckLine::Status s) {
  for (const auto& l : r.lines) {
    if (l.id.rfind(prefix, 0) == 0 && l.status == s) return true;
  }
  return false;
}

// Heisenberg translation by (zeta, v) on lifts ((-|z|^2 + i t)/2, z, 1).
PairingMap translation(const FieldElement& zeta, const Rational& v) {
  FieldElement i = F().gen();
  PairingMap m;
  m.m = {{{q(1), -zeta.conj(), (-(zeta * zeta.conj()) + i * v) / Rational(2)}, {q(0), q(1), zeta}, {q(0), q(0), q(1)}}};
  return m;
}

// M = lambda * T for a single nonzero lambda.
bool proportional(const PairingMap& M, const PairingMap& T) {
  std::optional<FieldElement> lam;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (T.m[r][c].is_zero() != M.m[r][c].is_zero()) return false;
      if (T.m[r][c].is_zero()) continue;
      FieldElement x = M.m[r][c] / T.m[r][c];
      if (lam && *lam != x) return false;
      lam = x;
    }
  }
  return lam.has_value();
}

std::array<Point, 3> image(const PairingMap& m, const std::array<Point, 3>& p) {
  std::array<Point, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = point_from_lift(m.apply(lift_point(p[k], F())));
  return out;
}

}  // namespace

TEST(Simplicial, ValidateWhiteheadAndSingleTet) {
  auto wh = cli::catalog_entry("whitehead");
  ValidationReport r = validate_structure(wh.tri);
  EXPECT_TRUE(r.ok()) << r.to_string();
  for (int s = 0; s < 4; ++s) {
    EXPECT_TRUE(has_line(r, "tet " + std::to_string(s) + ": opposite-edge", CheckLine::Status::Pass));
  }
  NumberField f = wh.tri.field;
  FieldElement a01 = wh.tri.tets[0].q.z01, a10 = wh.tri.tets[0].q.z10;
  EXPECT_EQ(a01 * a10, Rational(1, 4) - f.gen() / Rational(4));

  Triangulation one{wh.tri.field, {wh.tri.tets[0]}, std::nullopt};
  ValidationReport r1 = validate_structure(one);
  EXPECT_TRUE(r1.ok());
  EXPECT_TRUE(has_line(r1, "edge class", CheckLine::Status::Open));
  EXPECT_FALSE(has_line(r1, "edge class", CheckLine::Status::Pass));
}

TEST(Simplicial, CorruptedValueIsLocalized) {
  auto wh = cli::catalog_entry("whitehead");
  wh.tri.tets[2].q.z01 = wh.tri.tets[2].q.z01 + Rational(1, 3);
  ValidationReport r = validate_structure(wh.tri);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_line(r, "tet 2: opposite-edge 01|23", CheckLine::Status::Fail));
  EXPECT_FALSE(has_line(r, "tet 0: opposite-edge", CheckLine::Status::Fail));
  EXPECT_FALSE(has_line(r, "tet 1: opposite-edge", CheckLine::Status::Fail));
}

TEST(Simplicial, BetaTriangulation) {
  auto wh = cli::catalog_entry("whitehead");
  NumberField f = wh.tri.field;
  FieldElement g = f.gen();
  FieldElement a01 = (g - Rational(1)) / Rational(8), a23 = (g - Rational(3)) / Rational(4),
               a32 = Rational(1, 2) - g / Rational(6);
  PreBlochElement want = PreBlochElement::symbol(f.from_rational(-2), 4);
  for (const auto& x : {a01, a23, a32}) want += PreBlochElement::symbol(x, 2) + PreBlochElement::symbol(x.conj(), 2);
  EXPECT_EQ(beta_triangulation(wh.tri), want);

  auto r1 = cli::catalog_entry("fig8-rep1");
  NumberField f7 = r1.tri.field;
  FieldElement w12 = Rational(3, 8) + f7.gen() / Rational(8), w21 = Rational(5, 4) + f7.gen() / Rational(4);
  PreBlochElement b1;
  for (const auto& x : {w12, w21, w12.conj(), w21.conj()}) b1 += PreBlochElement::symbol(x, 2);
  EXPECT_EQ(beta_triangulation(r1.tri), b1);
  EXPECT_TRUE(beta_triangulation(Triangulation{}).is_zero());
}

TEST(Simplicial, BoundaryCheck) {
  auto d = cli::catalog_entry("synthetic-double");
  EXPECT_TRUE(boundary_check(d.tri));
  Triangulation one = d.tri;
  one.tets.pop_back();
  one.pairings = std::vector<Pairing>{};
  EXPECT_FALSE(boundary_check(one));
  one.pairings.reset();
  try {
    boundary_check(one);
    FAIL() << "no MissingPairings";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingPairings);
  }
}

TEST(Simplicial, TwoThreeOnClosedComplexPreservesBoundaryCheck) {
  auto d = cli::catalog_entry("synthetic-double");
  Triangulation t = cli::apply_move_14(d.tri, 0, Point::from_zh(F().element({Rational(1, 5), 2}), F().gen() * 3));
  ASSERT_TRUE(boundary_check(t));
  ASSERT_TRUE(validate_structure(t).ok());
  // A pairing between two tetrahedra of the new star.
  std::size_t k = 0;
  for (; k < t.pairings->size(); ++k) {
    const auto& p = (*t.pairings)[k];
    if (p.face.tet >= 1 && p.mate.tet >= 1) break;
  }
  ASSERT_LT(k, t.pairings->size());
  Triangulation u = cli::apply_move_23(t, k);
  EXPECT_EQ(u.tets.size(), t.tets.size() + 1);
  EXPECT_TRUE(boundary_check(u));
  EXPECT_TRUE(validate_structure(u).ok()) << validate_structure(u).to_string();
  RealBall dd = D_of_element(beta_triangulation(u), 128) - D_of_element(beta_triangulation(t), 128);
  EXPECT_TRUE(crbtest::near_zero(dd, 1e-25));
}

TEST(Simplicial, DevelopSingleTetrahedron) {
  Triangulation t;
  t.field = F();
  t.tets.push_back(TetRecord{{0, 1, 2, 3}, Quadruple{q(2), q(2), q(2), q(2)}, std::nullopt, 1});
  Triangulation d = develop(t);
  ASSERT_TRUE(d.tets[0].points.has_value());
  const auto& p = *d.tets[0].points;
  EXPECT_TRUE(p[0].infinity);
  EXPECT_EQ(p[1], Point::from_zh(q(0), q(0)));
  EXPECT_EQ(p[2], Point::from_zh(q(1), q(0)));
  EXPECT_EQ(p[3], Point::from_zh(q(2), q(0)));
}

TEST(Simplicial, DevelopTwoTetrahedraConsistently) {
  std::mt19937 rng(61);
  for (int k = 0; k < 20; ++k) {
    Triangulation t = cli::random_bipyramid(rng);
    for (auto& s : t.tets) s.points.reset();
    Triangulation d = develop(t);
    for (const auto& s : d.tets) EXPECT_EQ(cross_ratios(*s.points, t.field), s.q);
    const Pairing& p = d.pairings->front();
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ((*d.tets[p.face.tet].points)[p.face.v[j]], (*d.tets[p.mate.tet].points)[p.mate.v[j]]);
    }
  }
}

TEST(Simplicial, DevelopDetectsCorruption) {
  std::mt19937 rng(62);
  Triangulation t = cli::random_bipyramid(rng);
  for (auto& s : t.tets) s.points.reset();
  // Second tetrahedron taken from an unrelated draw; the gluing stays.
  Triangulation other = cli::random_bipyramid(rng);
  t.tets[1].q = other.tets[1].q;
  try {
    develop(t);
    FAIL() << "corruption not detected";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentStructure);
  }
}

TEST(Simplicial, PachnerExamples) {
  std::mt19937 rng(63);
  auto u = crbtest::random_five(rng, F());
  PachnerSides s = pachner_23(u, F());
  EXPECT_EQ(s.before.size(), 2u);
  EXPECT_EQ(s.after.size(), 3u);
  // Inverse move has the same two simplices.
  PachnerSides back = pachner_32(u, F());
  EXPECT_EQ(back.after, s.before);
  EXPECT_THROW(pachner_14({u[0], u[1], u[2], u[3]}, u[2], F()), Error);
  try {
    pachner_14({u[0], u[1], u[2], u[3]}, u[0], F());
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotGeneric);
  }
}

TEST(Simplicial, MoveRoundTripRestoresInvariants) {
  std::mt19937 rng(64);
  for (int k = 0; k < 20; ++k) {
    Triangulation t = cli::random_bipyramid(rng);
    Triangulation a = cli::apply_move_23(t, 0);
    ASSERT_EQ(a.tets.size(), 3u);
    Triangulation b = cli::apply_move_32(a, 0);
    ASSERT_EQ(b.tets.size(), 2u);
    for (int s = 0; s < 2; ++s) {
      EXPECT_EQ(b.tets[s].q, t.tets[s].q);
      EXPECT_EQ(b.tets[s].sign, t.tets[s].sign);
      EXPECT_EQ(b.tets[s].verts, t.tets[s].verts);
    }
    EXPECT_EQ(beta_triangulation(b), beta_triangulation(t));
  }
}

TEST(Simplicial, SidePairings) {
  std::array<Point, 3> src{Point::at_infinity(), Point::from_zh(q(0), q(0)), Point::from_zt(q(1), q(Rational(2, 3)))};
  PairingMap id = side_pairing(src, src, F());
  PairingMap one;
  one.m = {{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}}};
  EXPECT_TRUE(proportional(id, one));

  PairingMap T = translation(q(1), Rational(5, 2));
  std::array<Point, 3> dst = image(T, src);
  EXPECT_TRUE(dst[0].infinity);
  EXPECT_EQ(dst[1], Point::from_zt(q(1), q(Rational(5, 2))));
  PairingMap m = side_pairing(src, dst, F());
  EXPECT_TRUE(proportional(m, T));
  EXPECT_TRUE(preserves_form(m));

  std::array<Point, 3> bad{Point::at_infinity(), Point::from_zh(q(0), q(0)), Point::from_zt(q(1), q(1))};
  try {
    side_pairing(src, bad, F());
    FAIL() << "mismatched tangents accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CartanMismatch);
  }
}

TEST(SimplicialProperty, SidePairingInverseFixesLifts) {
  auto r = crbtest::run_property(200, 65, [](std::mt19937& rng, int) -> std::string {
    ConfigFour c = crbtest::random_config(rng, F());
    std::array<Point, 3> src{c.points[0], c.points[1], c.points[2]};
    PairingMap T = translation(crbtest::random_qi(rng, F()), crbtest::random_rational(rng));
    PairingMap m = side_pairing(src, image(T, src), F());
    if (!proportional(m, T)) return "not the translation";
    if (!preserves_form(m)) return "form not preserved";
    PairingMap e = m.inverse() * m;
    std::optional<FieldElement> lam;
    for (const auto& p : src) {
      Lift l = lift_point(p, F());
      Lift x = e.apply(l);
      for (int k = 0; k < 3; ++k) {
        if (l.v[k].is_zero() != x.v[k].is_zero()) return "not a multiple";
        if (l.v[k].is_zero()) continue;
        FieldElement ratio = x.v[k] / l.v[k];
        if (lam && *lam != ratio) return "scalars differ";
        lam = ratio;
      }
    }
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(SimplicialProperty, ClosedDoublesHaveVanishingD) {
  auto r = crbtest::run_property(200, 66, [](std::mt19937& rng, int) -> std::string {
    Triangulation t = cli::random_double(rng);
    for (const auto& s : t.tets) {
      if (!(cross_ratios(*s.points, t.field) == s.q)) return "stored quadruple differs from points";
    }
    if (!validate_structure(t).ok()) return "validation failed";
    if (!boundary_check(t)) return "boundary check failed";
    RealBall d = D_of_element(beta_triangulation(t), 128);
    return crbtest::near_zero(d, 1e-25) ? "" : d.to_string();
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}
