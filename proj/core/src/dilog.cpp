#include "crb/dilog.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <mutex>

#include "crb/errors.hpp"

namespace crb {

namespace {

// B_n / (n+1)! with B_1 = -1/2, cached.
Rational bernoulli_coeff(std::size_t n) {
  static std::mutex mu;
  static std::vector<Rational> bern{Rational(1)};
  static std::vector<Rational> coeff{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (coeff.size() <= n) {
    const std::size_t m = bern.size();
    // sum_{k<=m} C(m+1, k) B_k = 0
    Rational s = 0;
    Integer binom = 1;
    for (std::size_t k = 0; k < m; ++k) {
      s += Rational(binom) * bern[k];
      binom = binom * static_cast<long>(m + 1 - k) / static_cast<long>(k + 1);
    }
    bern.push_back(-s / Rational(static_cast<long>(m + 1)));
    Integer fact = 1;
    for (std::size_t k = 2; k <= m + 1; ++k) fact *= static_cast<long>(k);
    coeff.push_back(bern.back() / Rational(fact));
  }
  return coeff[n];
}

ComplexBall cone(mpfr_prec_t p) { return ComplexBall::exact(Rational(1), Rational(0), p); }

// The six images of z under the anharmonic group, with the sign of D.
struct Transform {
  std::complex<double> (*approx)(std::complex<double>);
  ComplexBall (*apply)(const ComplexBall&);
  int sign;
};

const Transform kTransforms[] = {
    {[](std::complex<double> z) { return z; }, [](const ComplexBall& z) { return z; }, 1},
    {[](std::complex<double> z) { return 1.0 / z; }, [](const ComplexBall& z) { return cone(z.prec()) / z; }, -1},
    {[](std::complex<double> z) { return 1.0 - z; }, [](const ComplexBall& z) { return cone(z.prec()) - z; }, -1},
    {[](std::complex<double> z) { return 1.0 / (1.0 - z); },
     [](const ComplexBall& z) { return cone(z.prec()) / (cone(z.prec()) - z); }, 1},
    {[](std::complex<double> z) { return 1.0 - 1.0 / z; },
     [](const ComplexBall& z) { return cone(z.prec()) - cone(z.prec()) / z; }, 1},
    {[](std::complex<double> z) { return z / (z - 1.0); },
     [](const ComplexBall& z) { return z / (z - cone(z.prec())); }, -1},
};

Mpfr pow2(long e, mpfr_prec_t p) {
  Mpfr r(p);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDU);
  return r;
}

double upper_double(const Mpfr& x) { return mpfr_get_d(x.get(), MPFR_RNDU); }

ComplexBall widen(const ComplexBall& z, const Mpfr& e) { return {z.re.widen(e), z.im.widen(e)}; }

// |w| <= 1/2: tail after n terms is below 2^-n.
ComplexBall li2_taylor(const ComplexBall& w, mpfr_prec_t wp) {
  const long n = wp + 2;
  ComplexBall sum = ComplexBall::exact(Rational(0), Rational(0), wp);
  ComplexBall pw = w;
  for (long k = 1; k <= n; ++k) {
    sum += pw * RealBall::exact(Rational(1, k * k), wp);
    pw *= w;
  }
  return widen(sum, pow2(-n, wp));
}

// Li2(w) = sum B_n u^{n+1}/(n+1)!, u = -log(1 - w), valid for |u| < 2 pi.
// With |B_n|/n! <= 4 (2 pi)^-n the tail after N terms is at most
// 4|u| q^{N+1}/(1 - q), q = |u|/(2 pi).
ComplexBall li2_bernoulli(const ComplexBall& w, mpfr_prec_t wp) {
  ComplexBall u = -(cone(wp) - w).log();
  double q = upper_double(u.abs().mag()) / (2 * M_PI) * (1 + 1e-12);
  if (!(q < 0.75)) throw Error(ErrorKind::PrecisionExhausted, "dilogarithm argument too wide");
  const double au = upper_double(u.abs().mag());
  const long n = static_cast<long>(std::ceil((wp + 4 + std::log2(4 * au + 1) - std::log2(1 - q)) / -std::log2(q)));
  ComplexBall sum = u;
  ComplexBall pw = u;
  for (long k = 1; k <= n; ++k) {
    pw *= u;
    Rational c = bernoulli_coeff(static_cast<std::size_t>(k));
    if (c != 0) sum += pw * RealBall::exact(c, wp);
  }
  double log_tail = std::log2(4 * au + 1e-300) + (n + 1) * std::log2(q) - std::log2(1 - q);
  return widen(sum, pow2(static_cast<long>(std::ceil(log_tail)) + 1, wp));
}

}  // namespace

RealBall bw_D(const ComplexBall& z, long prec) {
  require_precision(prec);
  const mpfr_prec_t wp = prec + kGuardBits;
  if (z.im.is_exact_zero()) return RealBall::exact(0, wp);
  if (z.contains_zero() || (z - cone(wp)).contains_zero()) {
    throw Error(ErrorKind::PrecisionExhausted, "ball meets 0 or 1; raise the precision");
  }
  std::complex<double> za(z.re.mid().to_double(), z.im.mid().to_double());
  const Transform* best = nullptr;
  double best_abs = INFINITY;
  for (const auto& t : kTransforms) {
    std::complex<double> w = t.approx(za);
    if (w.real() <= 0.5 + 1e-9 && std::abs(w) < best_abs) {
      best = &t;
      best_abs = std::abs(w);
    }
  }
  if (best == nullptr) best = &kTransforms[0];
  ComplexBall w = best->apply(z);
  ComplexBall li2 = mpfr_cmp_d(w.abs().mag().get(), 0.5) <= 0 ? li2_taylor(w, wp) : li2_bernoulli(w, wp);
  RealBall d = li2.im + (cone(wp) - w).arg() * w.abs().log();
  return best->sign > 0 ? d : -d;
}

RealBall D_of_element(const PreBlochElement& e, long prec) {
  require_precision(prec);
  const mpfr_prec_t wp = prec + kGuardBits;
  RealBall sum = RealBall::exact(0, wp);
  for (const auto& [z, n] : e.terms()) {
    if (z.is_sigma_fixed()) continue;
    sum += RealBall::exact(n, wp) * bw_D(z.embed(wp), prec);
  }
  return sum;
}

std::vector<EmbeddingD> D_per_embedding(const PreBlochElement& e, long prec) {
  require_precision(prec);
  const mpfr_prec_t wp = prec + kGuardBits;
  std::vector<EmbeddingD> out;
  auto F = e.field();
  if (!F) return {{0, RealBall::exact(0, wp)}};
  auto roots = F->roots(wp);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].im.contains_zero()) continue;
    RealBall sum = RealBall::exact(0, wp);
    for (const auto& [z, n] : e.terms()) {
      if (z.is_rational()) continue;
      sum += RealBall::exact(n, wp) * bw_D(z.embed_at(roots[i]), prec);
    }
    out.push_back({static_cast<int>(i), sum});
  }
  return out;
}

RealBall face_D_identity(const ConfigFour& c, const NumberField& field, long prec) {
  require_precision(prec);
  const mpfr_prec_t wp = prec + kGuardBits;
  RealBall lhs = RealBall::exact(2, wp) * D_of_element(beta_config(c.q), prec);
  RealBall rhs = RealBall::exact(0, wp);
  for (int k = 0; k < 4; ++k) {
    int f[3], n = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != k) f[n++] = i;
    }
    FieldElement x = minus_exp_2iA(cartan_tangent(c.points[f[0]], c.points[f[1]], c.points[f[2]], field));
    RealBall d = x.is_sigma_fixed() ? RealBall::exact(0, wp) : bw_D(x.embed(wp), prec);
    rhs += k % 2 == 0 ? d : -d;
  }
  return lhs - rhs;
}

}  // namespace crb
