#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "regforge/numeric.hpp"

namespace regforge {

// RAII wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(long prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mpfr(Mpfr&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Certified enclosure of a real number, stored as endpoints with
// directed rounding.  The midpoint-radius view is exposed through
// mid()/rad().  All operations are conservative: the result interval
// contains every exact value attainable from points of the inputs.
class RealBall {
 public:
  RealBall() : RealBall(0L, 64) {}
  RealBall(long v, long prec);
  static RealBall exact_int(const Int& v, long prec);
  static RealBall exact_rat(const Rat& q, long prec);
  static RealBall from_endpoints(const Mpfr& lo, const Mpfr& hi);
  static RealBall from_double(double v, long prec);
  // [mid - rad, mid + rad] for an approximate midpoint.
  static RealBall from_mid_rad(const Mpfr& mid, const Mpfr& rad);

  long prec() const { return lo_.prec(); }
  const Mpfr& lo() const { return lo_; }
  const Mpfr& hi() const { return hi_; }
  double mid() const;
  double rad() const;
  Mpfr mid_mpfr() const;
  Mpfr rad_mpfr() const;
  // Width hi - lo as an upper bound.
  double width() const;

  RealBall operator+(const RealBall& o) const;
  RealBall operator-(const RealBall& o) const;
  RealBall operator-() const;
  RealBall operator*(const RealBall& o) const;
  RealBall operator/(const RealBall& o) const;  // o must not contain 0
  RealBall operator*(long k) const;

  RealBall abs() const;
  RealBall sqrt() const;  // requires lo >= 0 (clamped at 0 if hi >= 0)
  RealBall log() const;   // requires strictly positive
  RealBall exp() const;
  RealBall pow_int(long e) const;      // requires strictly positive for e < 0
  RealBall pow(const RealBall& e) const;  // base strictly positive
  RealBall max(const RealBall& o) const;
  // max(value, 0) as a set operation.
  RealBall pos_part() const;

  bool contains_zero() const;
  bool contains(const Rat& q) const;
  bool is_positive() const;  // certified > 0
  bool is_negative() const;
  // Certified comparisons; false means "not certifiable", not negation.
  bool certainly_lt(const RealBall& o) const;
  bool certainly_le(const RealBall& o) const;
  bool overlaps(const RealBall& o) const;
  // Smallest interval containing both.
  RealBall hull(const RealBall& o) const;

  // Integers n with lo <= n <= hi: returns (count clamped at 2, smallest).
  std::pair<int, Int> integers_contained() const;

  std::string to_string(int digits = 17) const;

 private:
  RealBall(Mpfr lo, Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  Mpfr lo_, hi_;
};

RealBall ball_pi(long prec);
RealBall ball_log2(long prec);
// log of a positive rational, certified.
RealBall ball_log_rat(const Rat& q, long prec);

// Axis-aligned rectangle enclosure of a complex number.
class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexBall exact_rat(const Rat& re, long prec);

  const RealBall& re() const { return re_; }
  const RealBall& im() const { return im_; }

  ComplexBall operator+(const ComplexBall& o) const;
  ComplexBall operator-(const ComplexBall& o) const;
  ComplexBall operator*(const ComplexBall& o) const;
  ComplexBall operator/(const ComplexBall& o) const;  // o must exclude 0
  ComplexBall conj() const;
  RealBall abs() const;
  RealBall abs_sq() const;

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool overlaps(const ComplexBall& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }
  // True when this rectangle lies strictly inside o.
  bool strictly_inside(const ComplexBall& o) const;
  bool is_real_line() const { return im_.contains_zero(); }

  std::string to_string(int digits = 17) const;

 private:
  RealBall re_, im_;
};

}  // namespace regforge
