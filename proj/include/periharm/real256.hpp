#pragma once

#include <mpfr.h>

#include <utility>

namespace periharm {

/// Fixed 256-bit floating-point scalar. The Gram matrix of the periodized
/// family has pivots that decay below double epsilon well before n = 16,
/// so the orthonormalization pass runs at this precision and only the
/// final coefficients and recombined values are rounded to double.
class Real256 {
 public:
  static constexpr mpfr_prec_t precision = 256;

  Real256() {
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
  }
  Real256(double x) : Real256() { mpfr_set_d(v_, x, MPFR_RNDN); }  // NOLINT(runtime/explicit)
  Real256(long x) : Real256() { mpfr_set_si(v_, x, MPFR_RNDN); }   // NOLINT(runtime/explicit)
  Real256(const Real256& o) : Real256() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real256(Real256&& o) noexcept {
    mpfr_init2(v_, precision);
    mpfr_swap(v_, o.v_);
  }
  Real256& operator=(Real256 o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real256() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  Real256& operator+=(const Real256& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real256& operator-=(const Real256& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real256& operator*=(const Real256& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real256& operator/=(const Real256& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real256 operator+(Real256 a, const Real256& b) { return a += b; }
  friend Real256 operator-(Real256 a, const Real256& b) { return a -= b; }
  friend Real256 operator*(Real256 a, const Real256& b) { return a *= b; }
  friend Real256 operator/(Real256 a, const Real256& b) { return a /= b; }
  Real256 operator-() const {
    Real256 out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
  }

  friend bool operator<(const Real256& a, const Real256& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real256& a, const Real256& b) { return mpfr_greater_p(a.v_, b.v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  Real256 sqrt() const {
    Real256 out;
    mpfr_sqrt(out.v_, v_, MPFR_RNDN);
    return out;
  }
  Real256 exp() const {
    Real256 out;
    mpfr_exp(out.v_, v_, MPFR_RNDN);
    return out;
  }
  Real256 abs() const {
    Real256 out;
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
  }

  static Real256 pi() {
    Real256 out;
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }

 private:
  mpfr_t v_;
};

}  // namespace periharm
