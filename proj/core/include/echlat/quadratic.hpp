#pragma once

#include <compare>
#include <optional>
#include <string>

#include "echlat/rational.hpp"

namespace echlat {

// Exact value rat + coeff * sqrt(radicand). Normal form: radicand is squarefree
// and >= 2 whenever coeff != 0; a rational value has coeff == 0 and radicand == 0.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational r) : rat_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational rat, Rational coeff, const BigInt& radicand);

  static QuadraticNumber sqrt(const Rational& r);

  const Rational& rat() const { return rat_; }
  const Rational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }

  bool is_rational() const { return coeff_.sign() == 0; }
  std::optional<Rational> as_rational() const;
  int sign() const;

  double to_double() const;
  // "p/q + r/s*sqrt(d)", or just the rational part when there is no radical.
  std::string to_string() const;
  // Correctly rounded (half up) decimal with the given number of fraction digits.
  std::string to_decimal(unsigned digits) const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator/(const QuadraticNumber& a, const Rational& b);
  QuadraticNumber inverse() const;

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b);
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

 private:
  Rational rat_;
  Rational coeff_;
  BigInt radicand_;
};

// Exact ordering. Mixed radicands are resolved by at most two squarings.
std::strong_ordering quad_compare(const QuadraticNumber& x, const QuadraticNumber& y);

QuadraticNumber max(const QuadraticNumber& a, const QuadraticNumber& b);

}  // namespace echlat
