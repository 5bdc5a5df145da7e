#pragma once

#include <mpfr.h>

#include <string>

#include "echlat/rational.hpp"

namespace echlat {

// Owning MPFR value with an explicit binary precision. Binary operations use
// the larger precision of the two operands.
class Real {
 public:
  explicit Real(mpfr_prec_t precision = 256);
  Real(const Rational& r, mpfr_prec_t precision);
  Real(long v, mpfr_prec_t precision);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t precision);
  static Real pow2(long exponent, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 30) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& o);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a);
  friend void sin_cos(const Real& x, Real& s, Real& c);

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t precision) : re(precision), im(precision) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Real norm() const { return re * re + im * im; }
};

// exp(2 pi i * num / den) at the given precision.
Complex root_of_unity(long num, long den, mpfr_prec_t precision);

}  // namespace echlat
