#include "echlat/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace echlat {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rational& r, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(long v, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t precision) {
  Real r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long exponent, mpfr_prec_t precision) {
  Real r(1L, precision);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

void sin_cos(const Real& x, Real& s, Real& c) { mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN); }

Complex root_of_unity(long num, long den, mpfr_prec_t precision) {
  long r = num % den;
  if (r < 0) r += den;
  Complex z(precision);
  if (r == 0) {
    z.re = Real(1L, precision);
    return z;
  }
  const Real angle = Real(2L, precision) * Real::pi(precision) * Real(Rational(BigInt(r), BigInt(den)), precision);
  sin_cos(angle, z.im, z.re);
  return z;
}

}  // namespace echlat
