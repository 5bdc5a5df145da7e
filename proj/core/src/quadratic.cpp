#include "echlat/quadratic.hpp"

#include <cmath>

#include "echlat/error.hpp"

namespace echlat {

namespace {

// Sign of x + y*sqrt(e), e >= 0 (e need not be squarefree).
int sign_one(const Rational& x, const Rational& y, const BigInt& e) {
  const int sy = sgn(e) > 0 ? y.sign() : 0;
  const int sx = x.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const auto c = (x * x) <=> (y * y * Rational(e));
  if (c > 0) return sx;
  if (c < 0) return sy;
  return 0;
}

// Sign of r + a*sqrt(d1) + b*sqrt(d2).
int sign_two(const Rational& r, const Rational& a, const BigInt& d1, const Rational& b, const BigInt& d2) {
  const int sa = sgn(d1) > 0 ? a.sign() : 0;
  const int sb = sgn(d2) > 0 ? b.sign() : 0;
  int ss = 0;
  if (sa == 0) {
    ss = sb;
  } else if (sb == 0 || sa == sb) {
    ss = sa;
  } else {
    const auto c = (a * a * Rational(d1)) <=> (b * b * Rational(d2));
    ss = c > 0 ? sa : (c < 0 ? sb : 0);
  }
  const int sr = r.sign();
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // |a sqrt(d1) + b sqrt(d2)|^2 - r^2, itself of the form x + y sqrt(d1 d2).
  const Rational x = a * a * Rational(d1) + b * b * Rational(d2) - r * r;
  const Rational y = Rational(2) * a * b;
  const int t = sign_one(x, y, d1 * d2);
  if (t > 0) return ss;
  if (t < 0) return sr;
  return 0;
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational rat, Rational coeff, const BigInt& radicand) : rat_(std::move(rat)) {
  if (sgn(radicand) < 0) throw DomainError("negative radicand");
  if (coeff.sign() == 0 || sgn(radicand) == 0) return;
  const auto split = squarefree_split(radicand);
  coeff *= Rational(split.root);
  if (split.kernel == 1) {
    rat_ += coeff;
    return;
  }
  coeff_ = std::move(coeff);
  radicand_ = split.kernel;
}

QuadraticNumber QuadraticNumber::sqrt(const Rational& r) {
  if (r.sign() < 0) throw DomainError("sqrt of a negative rational");
  return QuadraticNumber(Rational(0), Rational(BigInt(1), r.den()), r.num() * r.den());
}

std::optional<Rational> QuadraticNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return rat_;
}

int QuadraticNumber::sign() const { return sign_one(rat_, coeff_, radicand_); }

double QuadraticNumber::to_double() const {
  if (is_rational()) return rat_.to_double();
  return rat_.to_double() + coeff_.to_double() * std::sqrt(radicand_.get_d());
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return rat_.to_string();
  return rat_.to_string() + " + " + coeff_.to_string() + "*sqrt(" + radicand_.get_str() + ")";
}

std::string QuadraticNumber::to_decimal(unsigned digits) const {
  BigInt scale(1);
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const Rational p = rat_ * Rational(scale) + Rational(BigInt(1), BigInt(2));
  const Rational q = coeff_ * Rational(scale);
  const QuadraticNumber y(p, q, radicand_);
  BigInt m = floor(p);
  if (!is_rational()) {
    const BigInt root = isqrt(floor(q * q * Rational(radicand_)));
    m += q.sign() > 0 ? root : BigInt(-root - 1);
    while (quad_compare(y, QuadraticNumber(Rational(m + 1))) != std::strong_ordering::less) m += 1;
  }
  const bool neg = sgn(m) < 0;
  std::string s = BigInt(abs(m)).get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return neg ? "-" + s : s;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.rat_ = -r.rat_;
  r.coeff_ = -r.coeff_;
  return r;
}

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (b.is_rational()) return QuadraticNumber(a.rat_ + b.rat_, a.coeff_, a.radicand_);
  if (a.is_rational()) return QuadraticNumber(a.rat_ + b.rat_, b.coeff_, b.radicand_);
  if (a.radicand_ != b.radicand_) throw DomainError("sum of quadratic numbers over different radicands");
  return QuadraticNumber(a.rat_ + b.rat_, a.coeff_ + b.coeff_, a.radicand_);
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) { return a + (-b); }

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (b.is_rational()) return QuadraticNumber(a.rat_ * b.rat_, a.coeff_ * b.rat_, a.radicand_);
  if (a.is_rational()) return QuadraticNumber(a.rat_ * b.rat_, a.rat_ * b.coeff_, b.radicand_);
  if (a.radicand_ != b.radicand_) throw DomainError("product of quadratic numbers over different radicands");
  const Rational d(a.radicand_);
  return QuadraticNumber(a.rat_ * b.rat_ + a.coeff_ * b.coeff_ * d, a.rat_ * b.coeff_ + a.coeff_ * b.rat_,
                         a.radicand_);
}

QuadraticNumber operator/(const QuadraticNumber& a, const Rational& b) {
  return QuadraticNumber(a.rat_ / b, a.coeff_ / b, a.radicand_);
}

QuadraticNumber QuadraticNumber::inverse() const {
  const Rational norm = rat_ * rat_ - coeff_ * coeff_ * Rational(radicand_);
  if (norm.sign() == 0) throw DomainError("inverse of zero");
  return QuadraticNumber(rat_ / norm, -coeff_ / norm, radicand_);
}

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
  return quad_compare(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) { return quad_compare(a, b); }

std::strong_ordering quad_compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  const int s = sign_two(x.rat() - y.rat(), x.coeff(), x.radicand(), -y.coeff(), y.radicand());
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QuadraticNumber max(const QuadraticNumber& a, const QuadraticNumber& b) { return quad_compare(a, b) < 0 ? b : a; }

}  // namespace echlat
