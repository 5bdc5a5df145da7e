#include "echlat/dedekind.hpp"

#include <string>

#include "echlat/error.hpp"
#include "echlat/lattice.hpp"

namespace echlat {

namespace {

long mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return static_cast<long>(r < 0 ? r + m : r);
}

void require_sum_args(std::int64_t a1, std::int64_t a2, std::int64_t b) {
  if (b < 1) throw DomainError("Fourier-Dedekind modulus must be positive");
  if (b > 1 && (gcd64(a1, b) != 1 || gcd64(a2, b) != 1)) {
    throw DomainError("Fourier-Dedekind arguments must be coprime to the modulus (a1=" + std::to_string(a1) +
                      ", a2=" + std::to_string(a2) + ", b=" + std::to_string(b) + ")");
  }
}

Real magnitude_bound(const Complex& z) { return abs(z.re) + abs(z.im); }

// Conservative rounding bound for b complex terms whose absolute sum is `mass`.
Real rounding_bound(const Real& mass, std::int64_t b, mpfr_prec_t prec) {
  return (mass + Real(1L, prec)) * Real(static_cast<long>(b), prec) * Real::pow2(8 - static_cast<long>(prec), prec);
}

void require_pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("reciprocity arguments must be positive");
  if (gcd64(a, b) != 1 || gcd64(b, c) != 1 || gcd64(a, c) != 1) {
    throw DomainError("reciprocity arguments must be pairwise coprime");
  }
}

Real cyclic_numeric(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  const Real s1 = fd_sum_numeric({n, a, b, c}).value;
  const Real s2 = fd_sum_numeric({n, c, a, b}).value;
  const Real s3 = fd_sum_numeric({n, b, c, a}).value;
  return s1 + s2 + s3;
}

// When one of a, b, c is 1 the cyclic sum is a single conjugate pair.
bool cyclic_exact(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, Rational& out) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  if (c == 1) {
    x = a;
    y = b;
  } else if (b == 1) {
    x = a;
    y = c;
  } else if (a == 1) {
    x = b;
    y = c;
  } else {
    return false;
  }
  const std::int64_t m = mod(-n, x * y);
  out = fd_pair_sum_exact(big(x), big(y), big(m));
  return true;
}

}  // namespace

Real fd_tolerance(unsigned precision_bits) {
  return Real::pow2(-static_cast<long>(precision_bits / 4), precision_bits);
}

std::vector<ApproxReal> fd_sum_table(std::int64_t a1, std::int64_t a2, std::int64_t b, unsigned precision_bits) {
  require_sum_args(a1, a2, b);
  const mpfr_prec_t prec = precision_bits;
  std::vector<ApproxReal> out;
  out.reserve(static_cast<std::size_t>(b));
  if (b == 1) {
    out.push_back({Real(prec), Real(prec), Real(prec)});
    return out;
  }
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(b));
  for (std::int64_t j = 0; j < b; ++j) roots.push_back(root_of_unity(static_cast<long>(j), static_cast<long>(b), prec));

  const Complex one(Real(1L, prec), Real(prec));
  std::vector<Complex> weights;
  weights.reserve(static_cast<std::size_t>(b));
  Real mass(prec);
  for (std::int64_t j = 1; j < b; ++j) {
    const Complex d1 = one - roots[static_cast<std::size_t>(mod(a1 * j, b))];
    const Complex d2 = one - roots[static_cast<std::size_t>(mod(a2 * j, b))];
    weights.push_back(one / (d1 * d2));
    mass += magnitude_bound(weights.back());
  }
  const Real inv_b = Real(1L, prec) / Real(static_cast<long>(b), prec);
  const Real bound = rounding_bound(mass, b, prec);
  for (std::int64_t n = 0; n < b; ++n) {
    Complex acc(prec);
    for (std::int64_t j = 1; j < b; ++j) {
      acc = acc + roots[static_cast<std::size_t>(mod(j * n, b))] * weights[static_cast<std::size_t>(j - 1)];
    }
    ApproxReal v{acc.re * inv_b, bound, abs(acc.im * inv_b)};
    if (bound < v.imag_residual) {
      throw PrecisionFailure("Fourier-Dedekind sum has imaginary residue above the error bound at " +
                             std::to_string(precision_bits) + " bits");
    }
    out.push_back(std::move(v));
  }
  return out;
}

ApproxReal fd_sum_numeric(const FDParams& p, unsigned precision_bits) {
  require_sum_args(p.a1, p.a2, p.b);
  const mpfr_prec_t prec = precision_bits;
  if (p.b == 1) return {Real(prec), Real(prec), Real(prec)};
  const std::int64_t b = p.b;
  const long n = mod(p.n, b);
  const Complex one(Real(1L, prec), Real(prec));
  Complex acc(prec);
  Real mass(prec);
  for (std::int64_t j = 1; j < b; ++j) {
    const Complex d1 = one - root_of_unity(mod(p.a1 * j, b), static_cast<long>(b), prec);
    const Complex d2 = one - root_of_unity(mod(p.a2 * j, b), static_cast<long>(b), prec);
    const Complex w = one / (d1 * d2);
    mass += magnitude_bound(w);
    acc = acc + root_of_unity(mod(j * n, b), static_cast<long>(b), prec) * w;
  }
  const Real inv_b = Real(1L, prec) / Real(static_cast<long>(b), prec);
  ApproxReal v{acc.re * inv_b, rounding_bound(mass, b, prec), abs(acc.im * inv_b)};
  if (v.error_bound < v.imag_residual) {
    throw PrecisionFailure("Fourier-Dedekind sum has imaginary residue above the error bound at " +
                           std::to_string(precision_bits) + " bits");
  }
  return v;
}

Rational triangle_count_polynomial(const BigInt& e, const BigInt& f, const BigInt& n) {
  const Rational E(e);
  const Rational F(f);
  const Rational N(n);
  const Rational one(1);
  return N * N / (Rational(2) * E * F) + N / Rational(2) * (one / E + one / F + one / (E * F)) +
         Rational(BigInt(1), BigInt(4)) * (one + one / E + one / F) +
         Rational(BigInt(1), BigInt(12)) * (E / F + F / E + one / (E * F));
}

Rational fd_pair_sum_exact(const BigInt& e, const BigInt& f, const BigInt& n) {
  if (e < 1 || f < 1) throw DomainError("fd_pair_sum_exact needs positive e, f");
  if (sgn(n) < 0) throw DomainError("fd_pair_sum_exact needs n >= 0");
  if (gcd(e, f) != 1) throw NotCoprime("fd_pair_sum_exact needs gcd(e, f) = 1");
  return Rational(lattice_count(e, f, n)) - triangle_count_polynomial(e, f, n);
}

Rational rademacher_rhs(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  const Rational A(a);
  const Rational B(b);
  const Rational C(c);
  const Rational N(n);
  const Rational one(1);
  const Rational three(3);
  return -N * N / (Rational(2) * A * B * C) + N / Rational(2) * (one / (A * B) + one / (C * A) + one / (B * C)) -
         Rational(BigInt(1), BigInt(12)) *
             (three / A + three / B + three / C + A / (B * C) + B / (C * A) + C / (A * B));
}

Rational rademacher_zero_rhs(std::int64_t a, std::int64_t b, std::int64_t c) {
  const Rational A(a);
  const Rational B(b);
  const Rational C(c);
  const Rational three(3);
  return Rational(1) -
         Rational(BigInt(1), BigInt(12)) * (three / A + three / B + three / C + A / (B * C) + B / (C * A) + C / (A * B));
}

bool check_rademacher(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  require_pairwise_coprime(a, b, c);
  if (n < 1 || n > a + b + c - 1) throw DomainError("reciprocity index must lie in 1..a+b+c-1");
  const Rational rhs = rademacher_rhs(n, a, b, c);
  Rational exact;
  if (cyclic_exact(n, a, b, c, exact)) return exact == rhs;
  const Real diff = abs(cyclic_numeric(n, a, b, c) - Real(rhs, kDefaultPrecisionBits));
  return diff <= Real(Rational(BigInt(1), BigInt(1000000000)), kDefaultPrecisionBits);
}

bool check_rademacher_zero(std::int64_t a, std::int64_t b, std::int64_t c) {
  require_pairwise_coprime(a, b, c);
  const Rational rhs = rademacher_zero_rhs(a, b, c);
  Rational exact;
  if (cyclic_exact(0, a, b, c, exact)) return exact == rhs;
  const Real diff = abs(cyclic_numeric(0, a, b, c) - Real(rhs, kDefaultPrecisionBits));
  return diff <= Real(Rational(BigInt(1), BigInt(1000000000)), kDefaultPrecisionBits);
}

ConvolutionSides convolution_sides(std::int64_t a1, std::int64_t a2, std::int64_t b, std::int64_t c,
                                   unsigned precision_bits) {
  if (b < 1 || c < 1) throw DomainError("convolution needs positive b and c");
  if (a1 % b == 0 || a2 % b == 0) throw DomainError("convolution needs b to divide neither a1 nor a2");
  const mpfr_prec_t prec = precision_bits;
  const std::int64_t m = b * c;
  auto w = [&](std::int64_t e) { return root_of_unity(mod(e, m), static_cast<long>(m), prec); };
  const Complex one(Real(1L, prec), Real(prec));

  Complex lhs(prec);
  for (std::int64_t k = 0; k < c; ++k) lhs = lhs + one / ((one - w(a1 + k * b)) * (one - w(a2 - k * b)));
  const Real inv_c = Real(1L, prec) / Real(static_cast<long>(c), prec);
  lhs = Complex(lhs.re * inv_c, lhs.im * inv_c);

  const std::int64_t s = a1 + a2;
  const Complex gamma = mod(s, m) == 0 ? Complex(Real(static_cast<long>(c), prec), Real(prec))
                                       : (one - w(s * c)) / (one - w(s));
  const Complex rhs = gamma / ((one - w(a1 * c)) * (one - w(a2 * c)));
  return {lhs, rhs};
}

bool check_convolution(std::int64_t a1, std::int64_t a2, std::int64_t b, std::int64_t c, unsigned precision_bits) {
  const auto sides = convolution_sides(a1, a2, b, c, precision_bits);
  const Real scale = Real(1L, precision_bits) + magnitude_bound(sides.rhs);
  const Real tol = fd_tolerance(precision_bits) * scale;
  return abs(sides.lhs.re - sides.rhs.re) <= tol && abs(sides.lhs.im - sides.rhs.im) <= tol;
}

}  // namespace echlat
