#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "echlat/rational.hpp"

namespace echlat {

// Polynomial of degree <= 2 whose coefficients depend on t mod declared_period.
// Coefficients are stored constant-first for each residue class.
class QuasiPolynomial {
 public:
  using Coeffs = std::array<Rational, 3>;

  QuasiPolynomial(int degree, std::uint64_t declared_period, std::vector<Coeffs> classes);

  int degree() const { return degree_; }
  std::uint64_t declared_period() const { return period_; }
  const Coeffs& coeffs(std::uint64_t residue) const { return classes_[residue % period_]; }
  const std::vector<Coeffs>& classes() const { return classes_; }

  Rational eval(const BigInt& t) const;
  Rational eval(std::uint64_t t) const;

  // Smallest divisor d of the declared period with classes d-periodic.
  std::uint64_t minimal_period() const;

  // Same function declared over a multiple of the current period.
  QuasiPolynomial redeclared(std::uint64_t multiple) const;

  // Same function over the period lcm(declared_period, period).
  QuasiPolynomial expanded_to(std::uint64_t period) const;

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b);

 private:
  int degree_;
  std::uint64_t period_;
  std::vector<Coeffs> classes_;
};

Rational quasi_eval(const QuasiPolynomial& q, const BigInt& t);
std::uint64_t minimal_period(const QuasiPolynomial& q);

}  // namespace echlat
