#pragma once

#include <cstdint>

#include "echlat/quasipoly.hpp"
#include "echlat/rational.hpp"

namespace echlat {

namespace detail {

// sum_{i=0}^{n-1} floor((a*i + b) / m) for n >= 0, m >= 1, a, b >= 0.
i128 floor_sum(i128 n, i128 m, i128 a, i128 b);
BigInt floor_sum(BigInt n, BigInt m, BigInt a, BigInt b);

}  // namespace detail

// #{(x, y) in Z^2_{>=0} : e*x + f*y <= n}, e, f >= 1, n >= 0.
// Evaluated in O(log) steps by a Euclidean floor-sum reduction.
BigInt lattice_count(const BigInt& e, const BigInt& f, const BigInt& n);

// Same count by summing floor((n - e*x)/f) + 1 over the shorter axis.
BigInt lattice_count_by_rows(const BigInt& e, const BigInt& f, const BigInt& n);

// Triangle with vertices (0,0), (0,u), (v,0); u, v > 0.
class Triangle {
 public:
  Triangle(Rational u, Rational v);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }

  // Smallest D with D*T integral: lcm of the denominators of u and v.
  BigInt denominator() const { return lcm(u_.den(), v_.den()); }

  // Lattice points of t*T are the (m, n) >= 0 with
  // x_coeff*m + y_coeff*n <= floor(t * rhs_num / rhs_den).
  const BigInt& x_coeff() const { return x_coeff_; }
  const BigInt& y_coeff() const { return y_coeff_; }
  const BigInt& rhs_num() const { return rhs_num_; }
  const BigInt& rhs_den() const { return rhs_den_; }

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

 private:
  Rational u_;
  Rational v_;
  BigInt x_coeff_;
  BigInt y_coeff_;
  BigInt rhs_num_;
  BigInt rhs_den_;
};

// #(T ∩ (1/t) Z^2), t >= 0.
BigInt triangle_count(const Triangle& tri, const BigInt& t);

// Ehrhart quasipolynomial of T, interpolated from exact counts at
// t in {r, r+D, r+2D} for each residue class (t = D, 2D, 3D for class 0) and
// re-checked against triangle_count for t = 0..3D.
QuasiPolynomial ehrhart_quasipoly(const Triangle& tri);

// Same Ehrhart quasipolynomial.
bool ehrhart_equivalent(const Triangle& a, const Triangle& b);

}  // namespace echlat
