#include "crb/ball.hpp"

#include <cstdlib>

#include "crb/errors.hpp"

namespace crb {

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, other.prec());
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

void require_precision(long prec) {
  if (prec < kMinPrecision) {
    throw Error(ErrorKind::PrecisionExhausted,
                "precision " + std::to_string(prec) + " bits is below the minimum of " +
                    std::to_string(kMinPrecision));
  }
}

namespace {

[[noreturn]] void exhausted(const std::string& what) { throw Error(ErrorKind::PrecisionExhausted, what); }

using Fn1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

}  // namespace

RealBall::RealBall(mpfr_prec_t prec) : prec_(prec), lo_(prec), hi_(prec) {}

RealBall RealBall::exact(const Rational& q, mpfr_prec_t prec) {
  RealBall r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealBall RealBall::exact(long v, mpfr_prec_t prec) {
  RealBall r(prec);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

RealBall RealBall::from_bounds(const Mpfr& lo, const Mpfr& hi) {
  RealBall r(std::max(lo.prec(), hi.prec()));
  mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
  return r;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
  RealBall r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

RealBall RealBall::symmetric(const Mpfr& rad, mpfr_prec_t prec) {
  RealBall r(prec);
  mpfr_abs(r.hi_.get(), rad.get(), MPFR_RNDU);
  mpfr_neg(r.lo_.get(), r.hi_.get(), MPFR_RNDD);
  return r;
}

Mpfr RealBall::mid() const {
  Mpfr m(prec_ + 2);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Mpfr RealBall::rad() const {
  Mpfr m = mid();
  Mpfr a(prec_), b(prec_);
  mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
  mpfr_max(a.get(), a.get(), b.get(), MPFR_RNDU);
  return a;
}

Mpfr RealBall::mag() const {
  Mpfr a(prec_), b(prec_);
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
  mpfr_max(a.get(), a.get(), b.get(), MPFR_RNDU);
  return a;
}

Mpfr RealBall::mig() const {
  Mpfr a(prec_);
  if (contains_zero()) return a;
  Mpfr b(prec_);
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDD);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDD);
  mpfr_min(a.get(), a.get(), b.get(), MPFR_RNDD);
  return a;
}

bool RealBall::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
bool RealBall::is_exact_zero() const { return mpfr_zero_p(lo_.get()) && mpfr_zero_p(hi_.get()); }
bool RealBall::positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RealBall::negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool RealBall::overlaps(const RealBall& o) const {
  return mpfr_lessequal_p(lo_.get(), o.hi_.get()) && mpfr_lessequal_p(o.lo_.get(), hi_.get());
}

bool RealBall::contains(const RealBall& o) const {
  return mpfr_lessequal_p(lo_.get(), o.lo_.get()) && mpfr_lessequal_p(o.hi_.get(), hi_.get());
}

RealBall RealBall::operator-() const {
  RealBall r(prec_);
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  RealBall r(p);
  Mpfr t(p);
  const Mpfr* xs[2] = {&a.lo_, &a.hi_};
  const Mpfr* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (const Mpfr* x : xs) {
    for (const Mpfr* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero()) exhausted("division by a ball containing zero");
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  RealBall r(p);
  Mpfr t(p);
  const Mpfr* xs[2] = {&a.lo_, &a.hi_};
  const Mpfr* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (const Mpfr* x : xs) {
    for (const Mpfr* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

RealBall RealBall::sqr() const {
  RealBall r(prec_);
  Mpfr m = mag();
  Mpfr n = mig();
  mpfr_sqr(r.lo_.get(), n.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), m.get(), MPFR_RNDU);
  return r;
}

RealBall RealBall::sqrt() const {
  if (negative()) exhausted("square root of a negative ball");
  RealBall r(prec_);
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_zero(r.lo_.get(), 1);
  } else {
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

RealBall RealBall::log() const {
  if (!positive()) exhausted("logarithm of a ball meeting zero");
  RealBall r(prec_);
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

RealBall RealBall::exp() const {
  RealBall r(prec_);
  mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

RealBall RealBall::atan() const {
  RealBall r(prec_);
  mpfr_atan(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_atan(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

namespace {

// f(mid) +/- rad for a 1-Lipschitz f.
RealBall lipschitz(const RealBall& x, Fn1 f) {
  Mpfr m = x.mid();
  Mpfr rad = x.rad();
  Mpfr lo(x.prec()), hi(x.prec());
  f(lo.get(), m.get(), MPFR_RNDD);
  f(hi.get(), m.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), rad.get(), MPFR_RNDU);
  return RealBall::from_bounds(lo, hi);
}

}  // namespace

RealBall RealBall::sin() const { return lipschitz(*this, &mpfr_sin); }
RealBall RealBall::cos() const { return lipschitz(*this, &mpfr_cos); }

RealBall RealBall::widen(const Mpfr& e) const {
  RealBall r(*this);
  Mpfr a(prec_);
  mpfr_abs(a.get(), e.get(), MPFR_RNDU);
  mpfr_sub(r.lo_.get(), lo_.get(), a.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), a.get(), MPFR_RNDU);
  return r;
}

std::string RealBall::to_string(int digits) const {
  Mpfr m = mid();
  Mpfr rd = rad();
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re +/- %.3Re", digits, m.get(), rd.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

ComplexBall ComplexBall::exact(const Rational& r, const Rational& i, mpfr_prec_t prec) {
  return {RealBall::exact(r, prec), RealBall::exact(i, prec)};
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re - b.re, a.im - b.im}; }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBall operator*(const ComplexBall& a, const RealBall& b) { return {a.re * b, a.im * b}; }

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  RealBall n = b.abs2();
  ComplexBall num = a * b.conj();
  return {num.re / n, num.im / n};
}

RealBall ComplexBall::abs2() const { return re.sqr() + im.sqr(); }
RealBall ComplexBall::abs() const { return abs2().sqrt(); }

RealBall ComplexBall::arg() const {
  if (re.positive()) return (im / re).atan();
  mpfr_prec_t p = prec();
  RealBall half_pi = RealBall::pi(p) / RealBall::exact(2L, p);
  if (im.positive()) return half_pi - (re / im).atan();
  if (im.negative()) return -half_pi - (re / im).atan();
  exhausted("argument of a ball meeting the branch cut");
}

ComplexBall ComplexBall::log() const {
  RealBall half = RealBall::exact(Rational(1, 2), prec());
  return {abs2().log() * half, arg()};
}

Mpfr ComplexBall::rad() const {
  Mpfr a = re.rad();
  Mpfr b = im.rad();
  Mpfr out(prec());
  mpfr_hypot(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

std::string ComplexBall::to_string(int digits) const {
  return "(" + re.to_string(digits) + ") + (" + im.to_string(digits) + ")*i";
}

}  // namespace crb
