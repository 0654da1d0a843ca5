#include <algorithm>
#include <cmath>
#include <complex>

#include "crb/errors.hpp"
#include "field_impl.hpp"

namespace crb {

namespace {

using cld = std::complex<long double>;

std::vector<cld> durand_kerner(const QPoly& p) {
  const int n = poly::degree(p);
  std::vector<long double> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = static_cast<long double>(p[i].get_d());
  long double bound = 1;
  for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + std::fabs(a[i] / a[n]));
  auto eval = [&](cld x) {
    cld acc = a[n];
    for (int i = n - 1; i >= 0; --i) acc = acc * x + a[i];
    return acc / a[n];
  };
  std::vector<cld> z(n);
  cld seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k) z[k] = std::pow(seed, k) * (bound * 0.5L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      cld denom = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (std::abs(denom) == 0) denom = 1e-30L;
      cld step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

ComplexBall point(const Mpfr& re, const Mpfr& im) {
  return {RealBall::from_bounds(re, re), RealBall::from_bounds(im, im)};
}

ComplexBall point_of(const ComplexBall& x) { return point(x.re.mid(), x.im.mid()); }

ComplexBall with_prec(const ComplexBall& x, long prec) {
  Mpfr re(prec), im(prec);
  Mpfr rm = x.re.mid(), imm = x.im.mid();
  mpfr_set(re.get(), rm.get(), MPFR_RNDN);
  mpfr_set(im.get(), imm.get(), MPFR_RNDN);
  return point(re, im);
}

// Newton step on midpoints; returns the new point.
ComplexBall newton_step(const QPoly& p, const QPoly& dp, const ComplexBall& x, bool real) {
  ComplexBall fx = eval_ball(p, x);
  ComplexBall dfx = eval_ball(dp, x);
  if (dfx.contains_zero()) return x;
  ComplexBall nx = point_of(x - fx / dfx);
  if (real) nx.im = RealBall(nx.prec());
  return nx;
}

// Upper bound on n * |p(x)| / |p'(x)|; negative on failure.
bool certified_radius(const QPoly& p, const QPoly& dp, const ComplexBall& x, Mpfr& out) {
  ComplexBall fx = eval_ball(p, x);
  ComplexBall dfx = eval_ball(dp, x);
  RealBall df = dfx.abs();
  if (!df.positive()) return false;
  RealBall f = fx.abs();
  RealBall r = f / df * RealBall::exact(static_cast<long>(poly::degree(p)), x.prec());
  out = r.hi();
  return true;
}

// Lower bound on the distance between two point centers.
Mpfr center_distance(const ComplexBall& a, const ComplexBall& b) {
  RealBall d = (a - b).abs();
  return d.lo();
}

}  // namespace

ComplexBall eval_ball(const QPoly& p, const ComplexBall& x) {
  mpfr_prec_t prec = x.prec();
  ComplexBall acc(prec);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x;
    acc.re += RealBall::exact(*it, prec);
  }
  return acc;
}

std::vector<RootDisc> isolate_roots(const QPoly& p) {
  const int n = poly::degree(p);
  if (n < 1) throw Error(ErrorKind::RootIsolation, "constant polynomial has no roots");
  if (n == 1) {
    RootDisc d;
    d.center = ComplexBall::exact(-p[0] / p[1], 0, 128);
    d.radius = Mpfr(128);
    d.real = true;
    return {d};
  }
  QPoly dp = poly::derivative(p);
  std::vector<cld> approx = durand_kerner(p);
  for (long prec = 128; prec <= 4096; prec *= 2) {
    std::vector<RootDisc> discs(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Mpfr re(prec), im(prec);
      mpfr_set_ld(re.get(), approx[i].real(), MPFR_RNDN);
      mpfr_set_ld(im.get(), approx[i].imag(), MPFR_RNDN);
      ComplexBall x = point(re, im);
      for (int it = 0; it < 64; ++it) x = newton_step(p, dp, x, false);
      discs[i].center = x;
      discs[i].radius = Mpfr(prec);
      ok = certified_radius(p, dp, x, discs[i].radius);
    }
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        Mpfr dist = center_distance(discs[i].center, discs[j].center);
        Mpfr sum(prec);
        mpfr_add(sum.get(), discs[i].radius.get(), discs[j].radius.get(), MPFR_RNDU);
        if (!mpfr_greater_p(dist.get(), sum.get())) ok = false;
      }
    }
    if (!ok) continue;
    // Widen each disc to 0.49 of the distance to its nearest neighbour; the
    // widened discs stay disjoint and each still holds exactly one root.
    std::vector<Mpfr> wide(n, Mpfr(prec));
    for (int i = 0; i < n; ++i) {
      Mpfr best(prec);
      mpfr_set_inf(best.get(), 1);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Mpfr dist = center_distance(discs[i].center, discs[j].center);
        mpfr_min(best.get(), best.get(), dist.get(), MPFR_RNDD);
      }
      if (mpfr_inf_p(best.get())) mpfr_set_ui(best.get(), 1, MPFR_RNDD);
      mpfr_mul_d(wide[i].get(), best.get(), 0.49, MPFR_RNDD);
      if (!mpfr_greater_p(wide[i].get(), discs[i].radius.get())) ok = false;
    }
    if (!ok) continue;
    // A disc meeting the real axis whose mirror image meets no other disc
    // holds a real root.
    for (int i = 0; i < n && ok; ++i) {
      Mpfr im_abs = discs[i].center.im.mag();
      if (mpfr_greater_p(im_abs.get(), discs[i].radius.get())) continue;
      ComplexBall mirror = discs[i].center.conj();
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Mpfr dist = center_distance(mirror, discs[j].center);
        Mpfr sum(prec);
        mpfr_add(sum.get(), discs[i].radius.get(), discs[j].radius.get(), MPFR_RNDU);
        if (!mpfr_greater_p(dist.get(), sum.get())) ok = false;
      }
      if (!ok) break;
      Mpfr re = discs[i].center.re.mid();
      ComplexBall c = point(re, Mpfr(prec));
      for (int it = 0; it < 8; ++it) c = newton_step(p, dp, c, true);
      Mpfr r(prec);
      if (!certified_radius(p, dp, c, r)) {
        ok = false;
        break;
      }
      Mpfr reach = (c - discs[i].center).abs().hi();
      mpfr_add(reach.get(), reach.get(), r.get(), MPFR_RNDU);
      if (mpfr_greater_p(reach.get(), wide[i].get())) {
        ok = false;
        break;
      }
      discs[i].real = true;
      discs[i].center = c;
    }
    if (!ok) continue;
    for (int i = 0; i < n; ++i) discs[i].radius = wide[i];
    if (!ok) continue;
    auto key_less = [](const RootDisc& a, const RootDisc& b) {
      Mpfr ai = a.real ? Mpfr(64) : a.center.im.mid();
      Mpfr bi = b.real ? Mpfr(64) : b.center.im.mid();
      Mpfr diff(ai.prec());
      mpfr_sub(diff.get(), ai.get(), bi.get(), MPFR_RNDN);
      mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
      Mpfr tol(64);
      mpfr_set_ui_2exp(tol.get(), 1, -64, MPFR_RNDN);
      if (mpfr_greater_p(diff.get(), tol.get())) return mpfr_greater_p(ai.get(), bi.get()) != 0;
      Mpfr ar = a.center.re.mid(), br = b.center.re.mid();
      return mpfr_less_p(ar.get(), br.get()) != 0;
    };
    std::sort(discs.begin(), discs.end(), key_less);
    return discs;
  }
  throw Error(ErrorKind::RootIsolation, "could not isolate the roots of " + poly::to_string(p));
}

ComplexBall refine_root(const QPoly& p, const RootDisc& disc, long prec) {
  require_precision(prec);
  const long wp = prec + kGuardBits;
  if (poly::degree(p) == 1) return ComplexBall::exact(-p[0] / p[1], 0, wp);
  QPoly dp = poly::derivative(p);
  ComplexBall x = with_prec(disc.center, wp);
  if (disc.real) x.im = RealBall(wp);
  for (int it = 0; it < 200; ++it) {
    ComplexBall nx = newton_step(p, dp, x, disc.real);
    Mpfr step = (nx - x).abs().hi();
    x = nx;
    if (mpfr_zero_p(step.get()) || mpfr_get_exp(step.get()) < -(wp - 4)) break;
  }
  Mpfr r(wp);
  if (!certified_radius(p, dp, x, r)) throw Error(ErrorKind::RootIsolation, "derivative vanishes during refinement");
  // The refined disc must sit inside the isolating disc.
  Mpfr shift = (x - with_prec(disc.center, wp)).abs().hi();
  Mpfr total(wp);
  mpfr_add(total.get(), shift.get(), r.get(), MPFR_RNDU);
  if (mpfr_greater_p(total.get(), disc.radius.get())) {
    throw Error(ErrorKind::RootIsolation, "refined root left its isolating disc");
  }
  RealBall re = x.re.widen(r);
  RealBall im = disc.real ? RealBall(wp) : x.im.widen(r);
  return {re, im};
}

}  // namespace crb
