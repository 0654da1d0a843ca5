#pragma once

#include <algorithm>
#include <string>

#include "crb/rational.hpp"

#include <mpfr.h>

namespace crb {

// Owning mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

// Closed real interval [lo, hi] with outward rounding; exposed as a
// midpoint-radius ball.
class RealBall {
 public:
  explicit RealBall(mpfr_prec_t prec = 128);

  static RealBall exact(const Rational& q, mpfr_prec_t prec);
  static RealBall exact(long v, mpfr_prec_t prec);
  static RealBall from_bounds(const Mpfr& lo, const Mpfr& hi);
  static RealBall pi(mpfr_prec_t prec);
  // [-r, r].
  static RealBall symmetric(const Mpfr& r, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }
  const Mpfr& lo() const { return lo_; }
  const Mpfr& hi() const { return hi_; }

  Mpfr mid() const;
  // Upper bound on the half-width.
  Mpfr rad() const;
  // Upper bound on |x| over the interval.
  Mpfr mag() const;
  // Lower bound on |x| over the interval (0 if the interval meets 0).
  Mpfr mig() const;

  bool contains_zero() const;
  bool is_exact_zero() const;
  bool positive() const;  // lo > 0
  bool negative() const;  // hi < 0
  bool overlaps(const RealBall& other) const;
  bool contains(const RealBall& other) const;

  RealBall operator-() const;
  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  RealBall& operator+=(const RealBall& b) { return *this = *this + b; }
  RealBall& operator-=(const RealBall& b) { return *this = *this - b; }
  RealBall& operator*=(const RealBall& b) { return *this = *this * b; }

  RealBall sqr() const;
  RealBall sqrt() const;
  RealBall log() const;
  RealBall exp() const;
  RealBall atan() const;
  RealBall sin() const;
  RealBall cos() const;
  // Widen by [-e, e].
  RealBall widen(const Mpfr& e) const;

  // Scientific midpoint with the given digits, followed by "+/- radius".
  std::string to_string(int digits = 20) const;

 private:
  mpfr_prec_t prec_;
  Mpfr lo_, hi_;
};

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexBall exact(const Rational& r, const Rational& i, mpfr_prec_t prec);

  RealBall re, im;

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  ComplexBall conj() const { return {re, -im}; }
  ComplexBall operator-() const { return {-re, -im}; }
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const RealBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
  ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }

  RealBall abs2() const;
  RealBall abs() const;
  // Principal argument; throws PrecisionExhausted when the box meets the
  // branch cut or the origin.
  RealBall arg() const;
  ComplexBall log() const;

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool overlaps(const ComplexBall& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  // Upper bound on the distance from the midpoint to any point of the box.
  Mpfr rad() const;

  std::string to_string(int digits = 20) const;
};

// Working-precision guard added by numeric entry points.
inline constexpr mpfr_prec_t kGuardBits = 32;
inline constexpr mpfr_prec_t kMinPrecision = 32;

// Throws PrecisionExhausted when prec < kMinPrecision.
void require_precision(long prec);

}  // namespace crb
