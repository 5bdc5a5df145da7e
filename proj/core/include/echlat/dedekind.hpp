#pragma once

#include <cstdint>
#include <vector>

#include "echlat/bigfloat.hpp"
#include "echlat/rational.hpp"

namespace echlat {

inline constexpr unsigned kDefaultPrecisionBits = 256;

// Index and arguments of s_n(a1, a2; b) = (1/b) sum_{j=1}^{b-1}
// xi^{jn} / ((1 - xi^{a1 j})(1 - xi^{a2 j})), xi = exp(2 pi i / b).
struct FDParams {
  std::int64_t n = 0;
  std::int64_t a1 = 1;
  std::int64_t a2 = 1;
  std::int64_t b = 1;
};

struct ApproxReal {
  Real value;
  Real error_bound;     // conservative bound on |value - exact|
  Real imag_residual;   // |imaginary part| left after summation
  double to_double() const { return value.to_double(); }
};

// Root-of-unity evaluation of a single Fourier-Dedekind sum; the index is taken mod b.
// Throws DomainError unless gcd(a1, b) = gcd(a2, b) = 1, PrecisionFailure if the
// imaginary residue exceeds the error bound.
ApproxReal fd_sum_numeric(const FDParams& p, unsigned precision_bits = kDefaultPrecisionBits);

// s_n(a1, a2; b) for every n in 0..b-1, sharing the root table.
std::vector<ApproxReal> fd_sum_table(std::int64_t a1, std::int64_t a2, std::int64_t b,
                                     unsigned precision_bits = kDefaultPrecisionBits);

// Equality tolerance used by the numeric checks: 2^(-precision_bits / 4).
Real fd_tolerance(unsigned precision_bits);

// s_{-n}(e,1;f) + s_{-n}(f,1;e), exactly, from the triangle count:
// lattice_count(e,f,n) - n^2/(2ef) - (n/2)(1/e + 1/f + 1/(ef))
//   - (1/4)(1 + 1/e + 1/f) - (1/12)(e/f + f/e + 1/(ef)).
// Throws NotCoprime if gcd(e, f) > 1.
Rational fd_pair_sum_exact(const BigInt& e, const BigInt& f, const BigInt& n);

// The polynomial part subtracted above.
Rational triangle_count_polynomial(const BigInt& e, const BigInt& f, const BigInt& n);

// Cyclic reciprocity for 1 <= n <= a+b+c-1 and pairwise coprime a, b, c.
// Uses the exact pair route when one of a, b, c is 1, otherwise compares the
// numeric sums to the closed form within 1e-9.
bool check_rademacher(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c);

// The n = 0 companion: cyclic sum = 1 - (1/12)(3/a + 3/b + 3/c + a/bc + b/ca + c/ab).
bool check_rademacher_zero(std::int64_t a, std::int64_t b, std::int64_t c);

// Right-hand sides of the two reciprocity identities.
Rational rademacher_rhs(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c);
Rational rademacher_zero_rhs(std::int64_t a, std::int64_t b, std::int64_t c);

// Convolution identity over bc-th roots of unity:
//   (1/c) sum_{k=0}^{c-1} 1/((1 - w^{a1+kb})(1 - w^{a2-kb})) = gamma / ((1 - w^{a1 c})(1 - w^{a2 c})),
// w = exp(2 pi i/(bc)), gamma = c if bc | a1+a2, else (1 - w^{(a1+a2)c}) / (1 - w^{a1+a2}).
// Throws DomainError if b divides a1 or a2.
struct ConvolutionSides {
  Complex lhs;
  Complex rhs;
};
ConvolutionSides convolution_sides(std::int64_t a1, std::int64_t a2, std::int64_t b, std::int64_t c,
                                   unsigned precision_bits = kDefaultPrecisionBits);
bool check_convolution(std::int64_t a1, std::int64_t a2, std::int64_t b, std::int64_t c,
                       unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace echlat
