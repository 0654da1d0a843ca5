#include <gtest/gtest.h>

#include "crb/dilog.hpp"
#include "crb/errors.hpp"
#include "crb/prebloch.hpp"
#include "crbcli/catalog.hpp"
#include "support.hpp"

using namespace crb;
using crb::cli::catalog_entry;

namespace {

using R = RelationKind;

struct Whitehead {
  NumberField f = NumberField::define({15, 0, 1}, 0, {0, -1});
  FieldElement g = f.gen();
  FieldElement a01 = (g - Rational(1)) / Rational(8);
  FieldElement a10 = f.from_rational(-2);
  FieldElement a23 = (g - Rational(3)) / Rational(4);
  FieldElement a32 = Rational(1, 2) - g / Rational(6);
};

}  // namespace

TEST(PreBloch, BetaConfig) {
  Whitehead w;
  PreBlochElement b = beta_config(Quadruple{w.a01, w.a10, w.a23, w.a32});
  PreBlochElement want = PreBlochElement::symbol(w.a01) + PreBlochElement::symbol(w.a10) +
                         PreBlochElement::symbol(w.a23) + PreBlochElement::symbol(w.a32);
  EXPECT_EQ(b, want);
  NumberField q = NumberField::rationals();
  FieldElement two = q.from_rational(2);
  EXPECT_EQ(beta_config(Quadruple{two, two, two, two}), PreBlochElement::symbol(two, 4));
  EXPECT_THROW(PreBlochElement::symbol(q.from_rational(1)), Error);
}

TEST(PreBloch, Fig8FamilyAtHalfIsSixthRootSum) {
  Fig8Family fam = fig8_family(Rational(1, 2));
  FieldElement zeta = (Rational(1) + fam.field.gen()) / Rational(2);
  ASSERT_EQ(fam.field.gen() * fam.field.gen(), fam.field.from_rational(-3));
  auto e = catalog_entry("fig8-family", Rational(1, 2));
  EXPECT_EQ(beta_triangulation(e.tri), PreBlochElement::symbol(zeta, 4) + PreBlochElement::symbol(zeta.conj(), 4));
}

TEST(PreBloch, Sigma) {
  Whitehead w;
  EXPECT_EQ(PreBlochElement::symbol(w.a01).sigma(), PreBlochElement::symbol(w.a01.conj()));
  PreBlochElement bw = beta_triangulation(catalog_entry("whitehead").tri);
  EXPECT_EQ(bw.sigma(), bw);
  EXPECT_EQ(bw.sigma().sigma(), bw);
}

TEST(PreBloch, RelationValues) {
  Whitehead w;
  PreBlochElement ft = relation_value({R::FiveTerm, 1, {w.a01, w.f.from_rational(Rational(1, 4))}});
  EXPECT_NE(ft.coeff(w.a23.inv()), 0);
  EXPECT_NE(ft.coeff(Rational(1) - w.a23.conj().inv()), 0);
  FieldElement z = w.a32;
  EXPECT_EQ(relation_value({R::InvPair, 1, {z}}), PreBlochElement::symbol(z, 2) + PreBlochElement::symbol(z.inv(), 2));
  FieldElement half = w.f.from_rational(Rational(1, 2));
  EXPECT_EQ(relation_value({R::OneMinus, 1, {half}}), PreBlochElement::symbol(half, 2) - PreBlochElement::c_f());
  EXPECT_EQ(relation_value({R::SixC, 1, {}}), PreBlochElement::c_f(6));
}

TEST(PreBloch, Certificates) {
  auto wh = catalog_entry("whitehead");
  PreBlochElement bw = beta_triangulation(wh.tri);
  const auto& stage1 = wh.certificate->stages[0];
  EXPECT_TRUE(verify_certificate(bw, *stage1.target, stage1.relations, Mode::Extended));
  Whitehead w;
  EXPECT_EQ(*stage1.target, PreBlochElement::symbol(w.f.from_rational(Rational(1, 2)), 4));
  EXPECT_THROW(verify_certificate(bw, *stage1.target, stage1.relations, Mode::Strict), Error);
  EXPECT_TRUE(verify_certificate(bw, bw, {}, Mode::Strict));
  EXPECT_FALSE(verify_certificate(bw, PreBlochElement{}, {}, Mode::Extended));
  // c_zero is admitted only in complex mode.
  EXPECT_THROW(verify_certificate(PreBlochElement::c_f(), {}, {{R::CZero, 1, {}}}, Mode::Extended), Error);
  EXPECT_TRUE(verify_certificate(PreBlochElement::c_f(), {}, {{R::CZero, 1, {}}}, Mode::Complex));
}

TEST(PreBloch, Fig8HalfCertificateUsesPairingIdentity) {
  Fig8Family fam = fig8_family(Rational(1, 2));
  EXPECT_EQ(fam.w12 / (fam.w12 - Rational(1)), fam.z12.conj());
  auto e = catalog_entry("fig8-family", Rational(1, 2));
  auto out = cli::run_certificate(beta_triangulation(e.tri), *e.certificate, Mode::Extended);
  EXPECT_TRUE(out.verified);
  EXPECT_TRUE(out.stages.back().reduced.is_zero());
}

TEST(PreBloch, PairingIdentity) {
  for (Rational b : {Rational(1, 2), Rational(-1, 2), Rational(1, 8)}) EXPECT_TRUE(pairing_identity_check(b)) << b;
  Fig8Family m = fig8_family(Rational(-1, 2));
  EXPECT_EQ(m.alpha2, Rational(7));
  Fig8Family e = fig8_family(Rational(1, 8));
  EXPECT_EQ(e.alpha2, Rational(95, 16));
  EXPECT_THROW(fig8_family(Rational(1, 3)), Error);
}

TEST(PreBloch, Rep2ChainThroughFourCMinusBeta1) {
  auto r1 = catalog_entry("fig8-rep1");
  auto r2 = catalog_entry("fig8-rep2");
  PreBlochElement b1 = beta_triangulation(r1.tri), b2 = beta_triangulation(r2.tri);
  const auto& st = r2.certificate->stages;
  ASSERT_EQ(st.size(), 3u);
  EXPECT_EQ(*st[0].target, PreBlochElement::c_f(4) - b1);
  EXPECT_EQ(*st[1].target, PreBlochElement::c_f(6));
  auto out = cli::run_certificate(b2, *r2.certificate, Mode::Extended);
  EXPECT_TRUE(out.verified);
}

TEST(PreBloch, SearchFindsOneMinusCertificate) {
  NumberField q = NumberField::rationals();
  FieldElement x = q.from_rational(Rational(1, 3));
  PreBlochElement start = PreBlochElement::symbol(x) + PreBlochElement::symbol(Rational(1) - x);
  auto c = search_certificate(start, PreBlochElement::c_f(), Mode::Extended);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify_certificate(start, PreBlochElement::c_f(), *c, Mode::Extended));
}

TEST(PreBlochProperty, CertificateConcatenation) {
  NumberField f = crbtest::gaussian();
  auto r = crbtest::run_property(200, 31, [&](std::mt19937& rng, int) -> std::string {
    auto rel = [&]() -> RelationInstance {
      std::uniform_int_distribution<int> kind(0, 3), mult(-3, 3);
      while (true) {
        RelationInstance ri;
        switch (kind(rng)) {
          case 0:
            ri = {R::FiveTerm, mult(rng), {crbtest::random_qi(rng, f), crbtest::random_qi(rng, f)}};
            break;
          case 1:
            ri = {R::InvPair, mult(rng), {crbtest::random_qi(rng, f)}};
            break;
          case 2:
            ri = {R::OneMinus, mult(rng), {crbtest::random_qi(rng, f)}};
            break;
          default:
            ri = {R::Square, mult(rng), {crbtest::random_qi(rng, f)}};
            break;
        }
        try {
          relation_value(ri);
          return ri;
        } catch (const Error&) {
        }
      }
    };
    Certificate c1{rel(), rel()}, c2{rel(), rel(), rel()};
    PreBlochElement start = PreBlochElement::symbol(crbtest::random_qi(rng, f) + Rational(3, 7), 2);
    PreBlochElement mid = start, fin;
    for (const auto& x : c1) mid -= x.mult * relation_value(x);
    fin = mid;
    for (const auto& x : c2) fin -= x.mult * relation_value(x);
    Certificate all = c1;
    all.insert(all.end(), c2.begin(), c2.end());
    bool a = verify_certificate(start, mid, c1), b = verify_certificate(mid, fin, c2);
    if (!a || !b) return "stage certificate rejected";
    if (!verify_certificate(start, fin, all)) return "concatenation rejected";
    return "";
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(PreBlochProperty, EveryRelationKindHasVanishingD) {
  NumberField f = crbtest::gaussian();
  auto r = crbtest::run_property(200, 32, [&](std::mt19937& rng, int k) -> std::string {
    RelationInstance ri;
    FieldElement x = crbtest::random_qi(rng, f), y = crbtest::random_qi(rng, f);
    switch (k % 6) {
      case 0:
        ri = {R::FiveTerm, 1, {x, y}};
        break;
      case 1:
        ri = {R::InvPair, 1, {x}};
        break;
      case 2:
        ri = {R::OneMinus, 1, {x}};
        break;
      case 3:
        ri = {R::Square, 1, {x}};
        break;
      case 4:
        ri = {R::SixC, 1, {}};
        break;
      default:
        ri = {R::CZero, 1, {}};
        break;
    }
    PreBlochElement v;
    try {
      v = relation_value(ri);
    } catch (const Error&) {
      return "";  // degenerate draw
    }
    RealBall d = D_of_element(v, 128);
    return crbtest::near_zero(d, 1e-25) ? "" : relation_name(ri.kind) + ": " + d.to_string();
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(PreBlochProperty, SymmetricConfigurationsAreConjugationInvariantUnderD) {
  NumberField f = crbtest::gaussian();
  FieldElement i = f.gen();
  auto r = crbtest::run_property(200, 33, [&](std::mt19937& rng, int k) -> std::string {
    FieldElement z = crbtest::random_qi(rng, f);
    Rational s = crbtest::random_rational(rng);
    Rational t = k % 2 ? s : Rational(2) * (s * z.coeffs()[0] + z.coeffs()[1]) - s;
    NormalizedParams p{z, i * s, i * t};
    Quadruple q;
    try {
      q = invariants_from_params(p);
    } catch (const Error&) {
      return "";
    }
    if (!is_symmetric(p)) return "constructed parameters not symmetric";
    PreBlochElement T = beta_config(q);
    RealBall d = D_of_element(T.sigma() - T, 128);
    return crbtest::near_zero(d, 1e-25) ? "" : "D(sigma T - T) = " + d.to_string();
  });
  EXPECT_TRUE(r.ok()) << r.summary();
}
