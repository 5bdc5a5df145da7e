#include "echlat/rational.hpp"

#include <cctype>

#include "echlat/error.hpp"

namespace echlat {

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  const std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  BigInt n;
  BigInt d(1);
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, n)
                      : parse_integer(text.substr(0, slash), n) && parse_integer(text.substr(slash + 1), d);
  if (!ok) throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt floor(const Rational& r) { return floor_div(r.num(), r.den()); }
BigInt ceil(const Rational& r) { return ceil_div(r.num(), r.den()); }
Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (!is_perfect_square(r.num()) || !is_perfect_square(r.den())) return std::nullopt;
  return Rational(isqrt(r.num()), isqrt(r.den()));
}

Rational sqrt_lower(const Rational& r, unsigned bits) {
  if (r.sign() < 0) throw DomainError("sqrt of a negative rational");
  const BigInt scaled = floor(r * Rational(BigInt(BigInt(1) << (2 * bits))));
  return Rational(isqrt(scaled), BigInt(BigInt(1) << bits));
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace echlat
