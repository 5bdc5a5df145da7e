#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "echlat/bigint.hpp"

namespace echlat {

// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(big(static_cast<std::int64_t>(v))) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& e) : v_(BigInt(e)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" (whitespace-free, q != 0).
  static Rational parse(std::string_view text);

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
Rational abs(const Rational& r);
Rational pow(const Rational& r, unsigned e);
// sqrt(r) when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);
// Largest rational of the form m / 2^bits not exceeding sqrt(r), r >= 0.
Rational sqrt_lower(const Rational& r, unsigned bits);
Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

}  // namespace echlat
