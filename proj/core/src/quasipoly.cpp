#include "echlat/quasipoly.hpp"

#include <numeric>

#include "echlat/error.hpp"

namespace echlat {

QuasiPolynomial::QuasiPolynomial(int degree, std::uint64_t declared_period, std::vector<Coeffs> classes)
    : degree_(degree), period_(declared_period), classes_(std::move(classes)) {
  if (degree < 0 || degree > 2) throw DomainError("quasipolynomial degree must be in 0..2");
  if (period_ == 0) throw DomainError("quasipolynomial period must be positive");
  if (classes_.size() != period_) throw DomainError("quasipolynomial needs one coefficient vector per residue class");
  for (const auto& c : classes_) {
    for (int j = degree_ + 1; j < 3; ++j) {
      if (c[static_cast<std::size_t>(j)].sign() != 0) throw DomainError("coefficient above declared degree");
    }
  }
}

Rational QuasiPolynomial::eval(const BigInt& t) const {
  if (sgn(t) < 0) throw DomainError("quasipolynomial evaluated at negative t");
  const BigInt r = mod_floor(t, BigInt(static_cast<unsigned long>(period_)));
  const Coeffs& c = classes_[r.get_ui()];
  const Rational x(t);
  return c[0] + x * (c[1] + x * c[2]);
}

Rational QuasiPolynomial::eval(std::uint64_t t) const { return eval(BigInt(static_cast<unsigned long>(t))); }

std::uint64_t QuasiPolynomial::minimal_period() const {
  for (std::uint64_t d = 1; d <= period_; ++d) {
    if (period_ % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t r = d; r < period_ && periodic; ++r) periodic = classes_[r] == classes_[r % d];
    if (periodic) return d;
  }
  return period_;
}

QuasiPolynomial QuasiPolynomial::redeclared(std::uint64_t multiple) const {
  if (multiple == 0) throw DomainError("redeclaration multiple must be positive");
  std::vector<Coeffs> out;
  out.reserve(period_ * multiple);
  for (std::uint64_t r = 0; r < period_ * multiple; ++r) out.push_back(classes_[r % period_]);
  return QuasiPolynomial(degree_, period_ * multiple, std::move(out));
}

QuasiPolynomial QuasiPolynomial::expanded_to(std::uint64_t period) const {
  const std::uint64_t l = std::lcm(period_, period);
  return l == period_ ? *this : redeclared(l / period_);
}

bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  const std::uint64_t l = std::lcm(a.period_, b.period_);
  for (std::uint64_t r = 0; r < l; ++r) {
    if (a.coeffs(r) != b.coeffs(r)) return false;
  }
  return true;
}

Rational quasi_eval(const QuasiPolynomial& q, const BigInt& t) { return q.eval(t); }
std::uint64_t minimal_period(const QuasiPolynomial& q) { return q.minimal_period(); }

}  // namespace echlat
