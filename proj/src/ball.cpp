#include "regforge/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace regforge {

namespace {

Mpfr make(long prec) { return Mpfr(prec); }

}  // namespace

RealBall::RealBall(long v, long prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(hi_.get(), v, MPFR_RNDU);
}

RealBall RealBall::exact_int(const Int& v, long prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_z(lo.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), v.get_mpz_t(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::exact_rat(const Rat& q, long prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::from_endpoints(const Mpfr& lo, const Mpfr& hi) {
  if (mpfr_cmp(lo.get(), hi.get()) > 0) throw Error("inverted interval endpoints");
  return RealBall(lo, hi);
}

RealBall RealBall::from_double(double v, long prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_d(lo.get(), v, MPFR_RNDD);
  mpfr_set_d(hi.get(), v, MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::from_mid_rad(const Mpfr& mid, const Mpfr& rad) {
  long p = mid.prec();
  Mpfr lo(p), hi(p);
  mpfr_sub(lo.get(), mid.get(), rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), mid.get(), rad.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

double RealBall::mid() const {
  Mpfr m(prec());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
  return m.to_double();
}

Mpfr RealBall::mid_mpfr() const {
  Mpfr m(prec());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
  return m;
}

Mpfr RealBall::rad_mpfr() const {
  Mpfr r(prec());
  mpfr_sub(r.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  mpfr_div_ui(r.get(), r.get(), 2, MPFR_RNDU);
  mpfr_nextabove(r.get());
  return r;
}

double RealBall::rad() const { return rad_mpfr().to_double(); }

double RealBall::width() const {
  Mpfr w(prec());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double();
}

RealBall RealBall::operator+(const RealBall& o) const {
  long p = std::max(prec(), o.prec());
  Mpfr lo(p), hi(p);
  mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::operator-(const RealBall& o) const {
  long p = std::max(prec(), o.prec());
  Mpfr lo(p), hi(p);
  mpfr_sub(lo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::operator-() const {
  Mpfr lo(prec()), hi(prec());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::operator*(const RealBall& o) const {
  long p = std::max(prec(), o.prec());
  Mpfr lo(p), hi(p), t(p);
  bool first = true;
  auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_mul(t.get(), a, b, MPFR_RNDD);
    if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a, b, MPFR_RNDU);
    if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
    first = false;
  };
  consider(lo_.get(), o.lo_.get());
  consider(lo_.get(), o.hi_.get());
  consider(hi_.get(), o.lo_.get());
  consider(hi_.get(), o.hi_.get());
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::operator/(const RealBall& o) const {
  if (o.contains_zero()) throw Undecided("interval division by interval containing zero");
  long p = std::max(prec(), o.prec());
  Mpfr lo(p), hi(p), t(p);
  bool first = true;
  auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_div(t.get(), a, b, MPFR_RNDD);
    if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
    mpfr_div(t.get(), a, b, MPFR_RNDU);
    if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
    first = false;
  };
  consider(lo_.get(), o.lo_.get());
  consider(lo_.get(), o.hi_.get());
  consider(hi_.get(), o.lo_.get());
  consider(hi_.get(), o.hi_.get());
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::operator*(long k) const {
  Mpfr lo(prec()), hi(prec());
  if (k >= 0) {
    mpfr_mul_si(lo.get(), lo_.get(), k, MPFR_RNDD);
    mpfr_mul_si(hi.get(), hi_.get(), k, MPFR_RNDU);
  } else {
    mpfr_mul_si(lo.get(), hi_.get(), k, MPFR_RNDD);
    mpfr_mul_si(hi.get(), lo_.get(), k, MPFR_RNDU);
  }
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  Mpfr lo(prec()), hi(prec()), t(prec());
  mpfr_set_zero(lo.get(), 1);
  mpfr_neg(t.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_cmp(t.get(), hi_.get()) > 0)
    mpfr_set(hi.get(), t.get(), MPFR_RNDU);
  else
    mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::sqrt() const {
  if (mpfr_sgn(hi_.get()) < 0) throw Error("sqrt of negative interval");
  Mpfr lo(prec()), hi(prec());
  if (mpfr_sgn(lo_.get()) < 0)
    mpfr_set_zero(lo.get(), 1);
  else
    mpfr_sqrt(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::log() const {
  if (mpfr_sgn(lo_.get()) <= 0)
    throw Undecided("log of interval not certified positive");
  Mpfr lo(prec()), hi(prec());
  mpfr_log(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::exp() const {
  Mpfr lo(prec()), hi(prec());
  mpfr_exp(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::pow_int(long e) const {
  if (e == 0) return RealBall(1, prec());
  if (e < 0) {
    RealBall inv = RealBall(1, prec()) / *this;
    return inv.pow_int(-e);
  }
  RealBall r(1, prec());
  RealBall b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = r * b;
    if (u >>= 1) b = b * b;
  }
  return r;
}

RealBall RealBall::pow(const RealBall& e) const { return (e * log()).exp(); }

RealBall RealBall::max(const RealBall& o) const {
  long p = std::max(prec(), o.prec());
  Mpfr lo(p), hi(p);
  mpfr_max(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

RealBall RealBall::pos_part() const { return max(RealBall(0, prec())); }

bool RealBall::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealBall::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealBall::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RealBall::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool RealBall::certainly_lt(const RealBall& o) const {
  return mpfr_cmp(hi_.get(), o.lo_.get()) < 0;
}

bool RealBall::certainly_le(const RealBall& o) const {
  return mpfr_cmp(hi_.get(), o.lo_.get()) <= 0;
}

bool RealBall::overlaps(const RealBall& o) const {
  return mpfr_cmp(lo_.get(), o.hi_.get()) <= 0 && mpfr_cmp(o.lo_.get(), hi_.get()) <= 0;
}

RealBall RealBall::hull(const RealBall& o) const {
  long p = std::max(prec(), o.prec());
  Mpfr lo(p), hi(p);
  mpfr_min(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return RealBall(std::move(lo), std::move(hi));
}

std::pair<int, Int> RealBall::integers_contained() const {
  Mpfr f(prec());
  mpfr_ceil(f.get(), lo_.get());
  Int first;
  mpfr_get_z(first.get_mpz_t(), f.get(), MPFR_RNDN);
  mpfr_floor(f.get(), hi_.get());
  Int last;
  mpfr_get_z(last.get_mpz_t(), f.get(), MPFR_RNDN);
  if (first > last) return {0, Int(0)};
  Int count = last - first + 1;
  return {count > 2 ? 2 : static_cast<int>(count.get_si()), first};
}

std::string RealBall::to_string(int digits) const {
  char* buf = nullptr;
  int n = mpfr_asprintf(&buf, "[%.*Re, %.*Re]", digits, lo_.get(), digits, hi_.get());
  if (n < 0) return "[?, ?]";
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

RealBall ball_pi(long prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi);
}

RealBall ball_log2(long prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_const_log2(lo.get(), MPFR_RNDD);
  mpfr_const_log2(hi.get(), MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi);
}

RealBall ball_log_rat(const Rat& q, long prec) {
  if (q <= 0) throw Error("log of non-positive rational");
  return RealBall::exact_rat(q, prec).log();
}

ComplexBall ComplexBall::exact_rat(const Rat& re, long prec) {
  return ComplexBall(RealBall::exact_rat(re, prec), RealBall(0, prec));
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
  return ComplexBall(re_ + o.re_, im_ + o.im_);
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const {
  return ComplexBall(re_ - o.re_, im_ - o.im_);
}

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
  return ComplexBall(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const {
  RealBall d = o.abs_sq();
  if (d.contains_zero()) throw Undecided("complex division by interval containing zero");
  return ComplexBall((re_ * o.re_ + im_ * o.im_) / d, (im_ * o.re_ - re_ * o.im_) / d);
}

ComplexBall ComplexBall::conj() const { return ComplexBall(re_, -im_); }

RealBall ComplexBall::abs_sq() const { return re_ * re_ + im_ * im_; }

RealBall ComplexBall::abs() const { return abs_sq().sqrt(); }

bool ComplexBall::strictly_inside(const ComplexBall& o) const {
  return mpfr_cmp(o.re_.lo().get(), re_.lo().get()) < 0 &&
         mpfr_cmp(re_.hi().get(), o.re_.hi().get()) < 0 &&
         mpfr_cmp(o.im_.lo().get(), im_.lo().get()) < 0 &&
         mpfr_cmp(im_.hi().get(), o.im_.hi().get()) < 0;
}

std::string ComplexBall::to_string(int digits) const {
  return re_.to_string(digits) + " + " + im_.to_string(digits) + "*i";
}

}  // namespace regforge
