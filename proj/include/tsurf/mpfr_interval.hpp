#pragma once

#include <mpfr.h>

#include <utility>

#include "tsurf/rational.hpp"

namespace tsurf {

// Thin RAII wrapper over mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(Mpfr o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded endpoints. All operations
// round lo down and hi up, so the true value is always contained.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {
    mpfr_set_zero(lo_.get(), 0);
    mpfr_set_zero(hi_.get(), 0);
  }

  static RealInterval from_rational(const Rational& q, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static RealInterval pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_.get()); }

  RealInterval operator+(const RealInterval& o) const {
    RealInterval r(prec());
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
  }

  RealInterval operator-(const RealInterval& o) const {
    RealInterval r(prec());
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
  }

  RealInterval operator*(const RealInterval& o) const {
    RealInterval r(prec());
    Mpfr t(prec());
    mpfr_mul(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_mul(t.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), hi_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), hi_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);

    mpfr_mul(r.hi_.get(), lo_.get(), o.lo_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), lo_.get(), o.hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    return r;
  }

  // Scale by an exact integer fraction num/den, den > 0.
  RealInterval scaled(long num, unsigned long den) const {
    RealInterval r(prec());
    if (num >= 0) {
      mpfr_mul_si(r.lo_.get(), lo_.get(), num, MPFR_RNDD);
      mpfr_mul_si(r.hi_.get(), hi_.get(), num, MPFR_RNDU);
    } else {
      mpfr_mul_si(r.lo_.get(), hi_.get(), num, MPFR_RNDD);
      mpfr_mul_si(r.hi_.get(), lo_.get(), num, MPFR_RNDU);
    }
    mpfr_div_ui(r.lo_.get(), r.lo_.get(), den, MPFR_RNDD);
    mpfr_div_ui(r.hi_.get(), r.hi_.get(), den, MPFR_RNDU);
    return r;
  }

  // Interval hull of cos over this interval; relies on |cos'| <= 1, so the
  // endpoint values widened by the interval width always cover the range.
  RealInterval cos() const {
    RealInterval r(prec());
    Mpfr a(prec()), b(prec()), w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_cos(a.get(), lo_.get(), MPFR_RNDD);
    mpfr_cos(b.get(), hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), a.get(), b.get(), MPFR_RNDD);
    mpfr_sub(r.lo_.get(), r.lo_.get(), w.get(), MPFR_RNDD);
    mpfr_cos(a.get(), lo_.get(), MPFR_RNDU);
    mpfr_cos(b.get(), hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), a.get(), b.get(), MPFR_RNDU);
    mpfr_add(r.hi_.get(), r.hi_.get(), w.get(), MPFR_RNDU);
    return r;
  }

  RealInterval sin() const {
    RealInterval r(prec());
    Mpfr a(prec()), b(prec()), w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_sin(a.get(), lo_.get(), MPFR_RNDD);
    mpfr_sin(b.get(), hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), a.get(), b.get(), MPFR_RNDD);
    mpfr_sub(r.lo_.get(), r.lo_.get(), w.get(), MPFR_RNDD);
    mpfr_sin(a.get(), lo_.get(), MPFR_RNDU);
    mpfr_sin(b.get(), hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), a.get(), b.get(), MPFR_RNDU);
    mpfr_add(r.hi_.get(), r.hi_.get(), w.get(), MPFR_RNDU);
    return r;
  }

  // +1 / -1 when the interval excludes zero, 0 when undecided.
  int sign_or_zero() const {
    if (mpfr_sgn(lo_.get()) > 0) return 1;
    if (mpfr_sgn(hi_.get()) < 0) return -1;
    return 0;
  }

  double mid() const {
    Mpfr m(prec());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
    return m.to_double();
  }

  double width() const {
    Mpfr w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double();
  }

 private:
  Mpfr lo_, hi_;
};

}  // namespace tsurf
