// Runs acceptance criteria 1-8 and prints one verdict line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "crb/dilog.hpp"
#include "crb/errors.hpp"
#include "crb/wedge.hpp"
#include "crbcli/catalog.hpp"
#include "crbcli/commands.hpp"
#include "support.hpp"
#include "wedge_oracle.hpp"

using namespace crb;
using namespace crb::cli;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool delta_zero(const PreBlochElement& e, const NumberField& f) {
  WedgeElement w = delta_map(e);
  return wedge_is_zero(w, build_mult_basis(wedge_entries(w), f));
}

bool d_vanishes(const PreBlochElement& e, long prec, double tol) {
  for (const auto& v : D_per_embedding(e, prec)) {
    if (!crbtest::near_zero(v.value, tol)) return false;
  }
  return true;
}

// Stage-by-stage run; returns the reduced form after stage k (1-based).
CertificateOutcome certify(const CatalogEntry& e, const PreBlochElement& start, const CertificateFile& c) {
  return run_certificate(start, c, Mode::Extended);
}

void criterion1(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  CatalogEntry e = catalog_entry("whitehead");
  PreBlochElement b = beta_triangulation(e.tri);
  auto out = certify(e, b, *e.certificate);
  FieldElement half = e.tri.field.from_rational(Rational(1, 2));
  v.require(out.verified, "certificate");
  v.require(out.stages.size() == 2 && out.stages[0].reduced == PreBlochElement::symbol(half, 4), "4[1/2]");
  v.require(out.stages.size() == 2 && out.stages[1].reduced == PreBlochElement::c_f(2), "2c_F");
  v.require(out.stages.size() == 2 && out.stages[0].mode == Mode::Extended && out.stages[1].mode == Mode::Extended,
            "extended mode");
  v.require(delta_zero(b, e.tri.field), "delta zero");
  v.require(d_vanishes(b, 128, 1e-30), "D radius < 1e-30");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(secs < 10, "runtime");
  v.detail << "β(W) = 4[1/2] = 2c_F verified, δ(β(W)) = 0, |D| < 1e-30, " << secs << " s";
}

void criterion2(Verdict& v) {
  CatalogEntry e = catalog_entry("whitehead");
  PreBlochElement b = beta_triangulation(e.tri);
  auto out = run_certificate(3 * b, *e.torsion, Mode::Extended);
  v.require(out.verified && out.stages.back().reduced.is_zero(), "3β(W) -> 0");
  bool six_c = false;
  for (const auto& r : e.torsion->stages.back().relations) six_c |= r.kind == RelationKind::SixC;
  v.require(six_c, "six_c used");
  std::ostringstream rep, err;
  cmd_invariant("catalog:whitehead", Options{}, rep, err);
  v.require(rep.str().find("order divides 3 (verified); order exactly 3 per paper (not machine-verified)") !=
                std::string::npos,
            "report wording");
  v.detail << "3β(W) = 0 via six_c; exact order 3 reported as cited, not machine-verified";
}

void criterion3(Verdict& v) {
  for (Rational beta : {Rational(1, 2), Rational(-1, 2), Rational(1, 8)}) {
    std::string tag = "β=" + format_rational(beta);
    v.require(pairing_identity_check(beta), tag + " pairing identity");
    CatalogEntry e = catalog_entry("fig8-family", beta);
    auto out = run_certificate(beta_triangulation(e.tri), *e.certificate, Mode::Extended);
    v.require(out.verified && out.stages.back().reduced.is_zero(), tag + " certificate");
    if (beta == Rational(1, 2)) {
      FieldElement zeta = (Rational(1) + e.tri.field.gen()) / Rational(2);
      v.require(e.tri.field.gen() * e.tri.field.gen() == e.tri.field.from_rational(-3), "Q(sqrt(-3))");
      v.require(out.stages.front().reduced ==
                    PreBlochElement::symbol(zeta, 4) + PreBlochElement::symbol(zeta.conj(), 4),
                "intermediate 4([ζ]+[σζ])");
    }
  }
  v.detail << "β ∈ {1/2, -1/2, 1/8}: pairing identity exact, β(K) = 0 certified; β = 1/2 passes through "
              "4([ζ]+[σζ])";
}

void criterion4(Verdict& v) {
  CatalogEntry r1 = catalog_entry("fig8-rep1"), r2 = catalog_entry("fig8-rep2");
  PreBlochElement b1 = beta_triangulation(r1.tri), b2 = beta_triangulation(r2.tri);
  auto o1 = run_certificate(b1, *r1.certificate, Mode::Extended);
  v.require(o1.verified && o1.stages.back().reduced == PreBlochElement::c_f(-2), "β₁ = -2c_F");
  FieldElement half = r1.tri.field.from_rational(Rational(1, 2));
  bool worked_step = false;
  for (const auto& r : r1.certificate->stages[0].relations) {
    if (r.kind == RelationKind::FiveTerm && r.args[0] == half && r.args[1] == half * r1.tri.tets[0].q.z32) {
      worked_step = true;
    }
  }
  v.require(worked_step, "five_term(1/2, b/2)");
  auto o2 = run_certificate(b2, *r2.certificate, Mode::Extended);
  v.require(o2.verified && o2.stages.back().reduced.is_zero(), "β₂ = 0");
  v.require(delta_zero(b1, r1.tri.field), "δ(β₁) = 0");
  auto t = run_certificate(3 * b1, *r1.torsion, Mode::Extended);
  v.require(t.verified && t.stages.back().reduced.is_zero(), "3β₁ -> 0");
  v.detail << "β₁(K) = -2c_F and β₂(K) = 0 certified over Q(sqrt(-7)); δ(β₁(K)) = 0; 3β₁(K) = 0";
}

void criterion5(Verdict& v) {
  int entries = 0;
  for (const auto& n : catalog_names()) {
    std::vector<std::optional<Rational>> params{std::nullopt};
    if (n == "fig8-family") params = {Rational(1, 2), Rational(-1, 2), Rational(1, 8)};
    for (const auto& p : params) {
      CatalogEntry e = catalog_entry(n, p);
      v.require(d_vanishes(beta_triangulation(e.tri), 128, 1e-25), n);
      ++entries;
    }
  }
  std::mt19937 rng(501);
  int doubles = 0;
  for (int k = 0; k < 50; ++k) {
    Triangulation t = random_double(rng);
    bool ok = boundary_check(t) && d_vanishes(beta_triangulation(t), 128, 1e-25);
    v.require(ok, "double #" + std::to_string(k));
    doubles += ok;
  }
  v.detail << entries << " catalog instances and " << doubles << "/50 random doubles with |D| < 1e-25";
}

void criterion6(Verdict& v) {
  using P = std::function<crbtest::PropertyResult()>;
  const double tol = 1e-25;
  std::vector<std::pair<std::string, P>> suites{
      {"opposite-edge", [] { return crbtest::prop_opposite_edge(200, 601); }},
      {"similarity", [] { return crbtest::prop_similarity_closure(200, 602); }},
      {"symmetry equivalence", [] { return crbtest::prop_symmetric_equivalence(200, 603); }},
      {"five-term D", [&] { return crbtest::prop_five_term_D(200, 604, tol); }},
      {"Cartan cocycle", [&] { return crbtest::prop_cartan_cocycle(200, 605, tol); }},
      {"face identity", [&] { return crbtest::prop_face_identity(200, 606, tol); }},
      {"2-3 move", [&] { return crbtest::prop_pachner23(200, 607, tol); }},
      {"1-4 move", [&] { return crbtest::prop_pachner14(200, 608, tol); }},
  };
  for (const auto& [name, run] : suites) {
    crbtest::PropertyResult r = run();
    v.require(r.ok() && r.instances >= 200, name + ": " + r.summary());
    v.detail << name << " " << r.instances - r.failures << "/" << r.instances << "; ";
  }
}

void criterion7(Verdict& v) {
  crbtest::OracleRun r = crbtest::run_wedge_oracle(500, 701);
  v.require(r.agreements == r.sums && r.sums == 500, r.first_disagreement);
  v.detail << r.agreements << "/" << r.sums << " sums agree with the tensor oracle (" << r.zero_sums << " zero)";
}

void criterion8(Verdict& v) {
  std::ostringstream rep, err;
  cmd_invariant("catalog:fig8-rep1", Options{}, rep, err);
  v.require(rep.str().find("not machine-verified") != std::string::npos, "torsion claim labeled");
  v.detail << "declared out of scope: non-triviality of the order-3 elements, equality in P(C) beyond its D "
              "shadow, CS(M); the reports label the order-3 claim as not machine-verified";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Verdict&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Verdict v;
    try {
      run(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    std::cout << "criterion " << n << ": " << (v.ok ? "PASS" : "FAIL") << "  " << v.detail.str() << std::endl;
    failed += !v.ok;
  }
  return failed ? 1 : 0;
}
