#include "crbcli/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "crb/errors.hpp"

namespace crb::cli {

namespace {

using R = RelationKind;

RelationInstance rel(R kind, long mult, std::vector<FieldElement> args = {}) { return {kind, mult, std::move(args)}; }

TetRecord tet(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) {
  return TetRecord{{0, 1, 2, 3}, Quadruple{a, b, c, d}, std::nullopt, 1};
}

Certificate scaled(const Certificate& c, long k) {
  Certificate out = c;
  for (auto& r : out) r.mult *= k;
  return out;
}

PreBlochElement sym(const FieldElement& z, long n) { return PreBlochElement::symbol(z, n); }

CatalogEntry whitehead() {
  NumberField F = NumberField::define({15, 0, 1}, 0, {0, -1});
  FieldElement g = F.gen();
  FieldElement A01 = (g - Rational(1)) / Rational(8), A10 = F.from_rational(-2), A23 = (g - Rational(3)) / Rational(4),
               A32 = Rational(1, 2) - g / Rational(6);
  CatalogEntry e;
  e.name = "whitehead";
  e.summary = "Whitehead link complement, four tetrahedra over Q(sqrt(-15))";
  e.symbol = "β(W)";
  e.tri.field = F;
  e.tri.tets = {tet(A01, A10, A23, A32), tet(A10, A01.conj(), A32.conj(), A23.conj()),
                tet(A01.conj(), A10, A23.conj(), A32.conj()), tet(A10, A01, A32, A23)};

  FieldElement half = F.from_rational(Rational(1, 2));
  Certificate to_half = {
      rel(R::OneMinus, 2, {A32}),
      rel(R::FiveTerm, 2, {A01, F.from_rational(Rational(1, 4))}),
      rel(R::OneMinus, -2, {A23.conj().inv()}),
      rel(R::InvPair, 1, {A23}),
      rel(R::InvPair, 1, {A23.conj()}),
      rel(R::Square, 1, {half}),
      rel(R::InvPair, 2, {F.from_rational(-2)}),
  };
  CertificateFile c;
  c.stages.push_back({std::nullopt, sym(half, 4), to_half});
  c.stages.push_back({std::nullopt, PreBlochElement::c_f(2), {rel(R::OneMinus, 2, {half})}});
  e.certificate = c;

  CertificateFile t;
  t.stages.push_back({std::nullopt, sym(half, 12), scaled(to_half, 3)});
  t.stages.push_back({std::nullopt, PreBlochElement::c_f(6), {rel(R::OneMinus, 6, {half})}});
  t.stages.push_back({std::nullopt, PreBlochElement{}, {rel(R::SixC, 1)}});
  e.torsion = t;
  return e;
}

CatalogEntry fig8_family_entry(const Rational& beta) {
  Fig8Family fam = fig8_family(beta);
  const FieldElement& w = fam.w12;
  const FieldElement& z = fam.z12;
  CatalogEntry e;
  e.name = "fig8-family";
  e.summary = "figure-eight knot complement, one-parameter family at beta = " + format_rational(beta);
  e.symbol = "β(K)";
  e.beta = beta;
  e.tri.field = fam.field;
  e.tri.tets = {tet(w, w.conj(), w, w.conj()), tet(z, z.conj(), z, z.conj())};
  CertificateFile c;
  if (beta == Rational(1, 2)) {
    // w = z = (1 + sqrt(-3))/2 and 1/w = conj(w).
    c.stages.push_back({std::nullopt, sym(w, 4) + sym(w.conj(), 4), {}});
    c.stages.push_back({std::nullopt, PreBlochElement{}, {rel(R::InvPair, 2, {w})}});
  } else {
    // conj(z) = w/(w - 1) = 1/(1 - 1/w), so 2[w] + 2[conj z] = -2 c_F.
    Certificate rels;
    for (const FieldElement& x : {w, w.conj()}) {
      rels.push_back(rel(R::InvPair, 1, {x}));
      rels.push_back(rel(R::InvPair, 1, {Rational(1) - x.inv()}));
      rels.push_back(rel(R::OneMinus, -2, {x.inv()}));
    }
    c.stages.push_back({std::nullopt, PreBlochElement::c_f(-4), rels});
    c.stages.push_back({Mode::Complex, PreBlochElement{}, {rel(R::CZero, -4)}});
  }
  e.certificate = c;
  return e;
}

struct Rep {
  NumberField F;
  FieldElement w12, w21, w34, w43;
};

Rep rep_field() {
  NumberField F = NumberField::define({7, 0, 1}, 0, {0, -1});
  FieldElement g = F.gen();
  FieldElement w12 = Rational(3, 8) + g / Rational(8), w21 = Rational(5, 4) + g / Rational(4);
  return {F, w12, w21, w12.conj(), w21.conj()};
}

// beta_1 = -2 c_F along a = w34, b = w43, five_term(1/2, b/2) and
// s = (1 - 1/2)/(1 - b/2).
Certificate rep1_relations(const Rep& r) {
  const FieldElement& a = r.w34;
  const FieldElement& b = r.w43;
  FieldElement half = r.F.from_rational(Rational(1, 2));
  FieldElement s = (Rational(1) - half) / (Rational(1) - half * b);
  return {
      rel(R::OneMinus, 2, {a.conj()}),
      rel(R::OneMinus, 2, {a}),
      rel(R::FiveTerm, 2, {half, half * b}),
      rel(R::FiveTerm, 2, {half, half * b.conj()}),
      rel(R::OneMinus, -2, {half}),
      rel(R::InvPair, 1, {Rational(1) - s}),
      rel(R::InvPair, 1, {Rational(1) - s.conj()}),
      rel(R::OneMinus, -2, {s}),
      rel(R::OneMinus, -2, {s.conj()}),
  };
}

CatalogEntry fig8_rep1() {
  Rep r = rep_field();
  CatalogEntry e;
  e.name = "fig8-rep1";
  e.summary = "figure-eight knot complement, first representation over Q(sqrt(-7))";
  e.symbol = "β₁(K)";
  e.tri.field = r.F;
  e.tri.tets = {tet(r.w12, r.w21, r.w34, r.w43), tet(r.w12, r.w21, r.w34, r.w43)};
  CertificateFile c;
  c.stages.push_back({std::nullopt, PreBlochElement::c_f(-2), rep1_relations(r)});
  e.certificate = c;
  CertificateFile t;
  t.stages.push_back({std::nullopt, PreBlochElement::c_f(-6), scaled(rep1_relations(r), 3)});
  t.stages.push_back({std::nullopt, PreBlochElement{}, {rel(R::SixC, -1)}});
  e.torsion = t;
  return e;
}

CatalogEntry fig8_rep2() {
  Rep r = rep_field();
  FieldElement g = r.F.gen();
  FieldElement t12 = Rational(3, 2) + g / Rational(2), t21 = Rational(-1, 4) - g / Rational(4);
  FieldElement t34 = t12.conj(), t43 = t21.conj();
  CatalogEntry e;
  e.name = "fig8-rep2";
  e.summary = "figure-eight knot complement, second representation over Q(sqrt(-7))";
  e.symbol = "β₂(K)";
  e.tri.field = r.F;
  e.tri.tets = {tet(t12, t21, t34, t43), tet(t12, t21, t34, t43)};
  PreBlochElement beta1 = 2 * beta_config(Quadruple{r.w12, r.w21, r.w34, r.w43});
  // t43 = 1 - w43, t21 = 1 - w21, t12 = 1/w34, t34 = 1/w12.
  CertificateFile c;
  c.stages.push_back({std::nullopt, PreBlochElement::c_f(4) - beta1,
                      {rel(R::OneMinus, 2, {r.w43}), rel(R::OneMinus, 2, {r.w21}), rel(R::InvPair, 1, {r.w34}),
                       rel(R::InvPair, 1, {r.w12})}});
  c.stages.push_back({std::nullopt, PreBlochElement::c_f(6), scaled(rep1_relations(r), -1)});
  c.stages.push_back({std::nullopt, PreBlochElement{}, {rel(R::SixC, 1)}});
  e.certificate = c;
  return e;
}

Triangulation double_of(const NumberField& F, const std::array<Point, 4>& p) {
  Triangulation t;
  t.field = F;
  t.tets.push_back(TetRecord::from_points({0, 1, 2, 3}, p, F));
  t.tets.push_back(TetRecord::from_points({1, 0, 2, 3}, {p[1], p[0], p[2], p[3]}, F));
  t.pairings = pair_by_vertex_ids(t.tets);
  return t;
}

CatalogEntry synthetic_double() {
  NumberField F = NumberField::imaginary_quadratic(-1);
  FieldElement i = F.gen();
  auto pt = [&](Rational x, Rational y, Rational t) { return Point::from_zh(x + i * y, i * t); };
  CatalogEntry e;
  e.name = "synthetic-double";
  e.summary = "double of one tetrahedron over Q(i), glued along all four faces";
  e.symbol = "β(M)";
  e.tri = double_of(F, {pt(0, 0, 0), pt(1, 0, Rational(1, 2)), pt(Rational(1, 3), 1, -1),
                        pt(-2, Rational(1, 2), Rational(3, 4))});
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"whitehead", "fig8-family", "fig8-rep1", "fig8-rep2", "synthetic-double"};
}

CatalogEntry catalog_entry(const std::string& name, const std::optional<Rational>& beta) {
  if (name == "whitehead") return whitehead();
  if (name == "fig8-family") return fig8_family_entry(beta.value_or(Rational(1, 2)));
  if (name == "fig8-rep1") return fig8_rep1();
  if (name == "fig8-rep2") return fig8_rep2();
  if (name == "synthetic-double") return synthetic_double();
  throw Error(ErrorKind::Parse, "unknown catalog entry '" + name + "'");
}

Triangulation random_double(std::mt19937& rng) {
  NumberField F = NumberField::imaginary_quadratic(-1);
  FieldElement i = F.gen();
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  auto coord = [&] { return Rational(num(rng), den(rng)); };
  while (true) {
    std::array<Point, 4> p;
    for (auto& x : p) x = Point::from_zh(coord() + i * coord(), i * coord());
    if (!is_generic({p.begin(), p.end()}, F)) continue;
    try {
      return double_of(F, p);
    } catch (const Error&) {
      // degenerate cross-ratio; draw again
    }
  }
}

Triangulation random_bipyramid(std::mt19937& rng) {
  NumberField F = NumberField::imaginary_quadratic(-1);
  FieldElement i = F.gen();
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  auto coord = [&] { return Rational(num(rng), den(rng)); };
  while (true) {
    std::array<Point, 5> u;
    for (auto& x : u) x = Point::from_zh(coord() + i * coord(), i * coord());
    try {
      Triangulation t;
      t.field = F;
      t.tets = pachner_23(u, F).before;
      t.pairings = pair_by_vertex_ids(t.tets);
      return t;
    } catch (const Error&) {
      // not generic; draw again
    }
  }
}

CertificateOutcome run_certificate(const PreBlochElement& start, const CertificateFile& cert, Mode mode) {
  CertificateOutcome out;
  PreBlochElement cur = start;
  for (const auto& st : cert.stages) {
    StageOutcome so;
    so.mode = st.mode ? std::max(*st.mode, mode) : mode;
    try {
      PreBlochElement sum;
      for (const auto& r : st.relations) sum += r.mult * relation_value(r);
      PreBlochElement end = st.target ? *st.target : cur - sum;
      so.ok = verify_certificate(cur, end, st.relations, so.mode);
      so.reduced = end;
      if (!so.ok) so.detail = "relations do not account for " + (cur - end - sum).to_string();
    } catch (const Error& e) {
      so.detail = e.what();
    }
    out.stages.push_back(so);
    if (!so.ok) return out;
    cur = so.reduced;
  }
  out.verified = true;
  return out;
}

std::string CertificateOutcome::modes() const {
  std::vector<Mode> ms;
  for (const auto& st : stages) {
    if (std::find(ms.begin(), ms.end(), st.mode) == ms.end()) ms.push_back(st.mode);
  }
  if (ms.size() == 1) return mode_name(ms[0]) + " mode";
  std::ostringstream os;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    os << (k ? ", " : "") << "stage " << k + 1 << " " << mode_name(stages[k].mode);
  }
  return os.str();
}

}  // namespace crb::cli
