#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "echlat/capacities.hpp"
#include "echlat/quadratic.hpp"
#include "echlat/staircase.hpp"

namespace echlat {

struct EmbedWitness {
  BigInt t;             // violating integer level after scaling the target to integers
  Rational scale;       // the scaling factor
  BigInt k;             // capacity index with source value > target value
  Rational source_value;
  Rational target_value;
};

struct EmbedDecision {
  bool embeds = false;
  std::optional<EmbedWitness> witness;  // present iff !embeds
};

struct EmbedLimits {
  std::uint64_t max_period = std::uint64_t{1} << 28;  // lcm of the two Ehrhart periods
};

// Does Int source embed into target? Decided for every integer level through
// the residue classes of the two Ehrhart quasipolynomials.
// Throws DomainError if the common period exceeds the limit.
EmbedDecision embeds(const Ellipsoid& source, const Ellipsoid& target, const EmbedLimits& limits = {});

// Smallest j >= j0 with A j^2 + B j + C < 0, if any.
std::optional<BigInt> first_negative(const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& j0);

struct RatioResult {
  Rational ratio;
  std::uint64_t k = 1;
};

// max_{1 <= k <= K} c_k(E(1,a)) / c_k(E(1,b)), with the smallest maximizing k.
RatioResult capacity_ratio(const Rational& a, const Rational& b, std::uint64_t K);

struct CFunResult {
  QuadraticNumber lower;
  QuadraticNumber upper;
  std::optional<std::uint64_t> attained_k;  // set when the lower end comes from a finite index
  bool exact = false;                       // lower == upper
};

struct CFunOptions {
  bool certificate = true;                    // try an exact embedding decision at a rational lower end
  std::uint64_t certificate_period = 1u << 20;
  std::uint64_t tail_period = 1u << 24;       // A*B limit for the exact tail constants
  int bisection_steps = 60;
};

// Certified interval for c(a, b) = inf{mu : E(1,a) -> E(mu, b mu)}, a >= 1.
CFunResult c_fun(const Rational& a, const Rational& b, std::uint64_t K, const CFunOptions& opts = {});
CFunResult c_fun(const Rational& a, const StairParams& P, std::uint64_t K, const CFunOptions& opts = {});

// Range of 2AB * (L(s) - s^2/(2AB) - s(1/A + 1/B + 1/(AB))/2) over one period,
// L(s) = #{A m + B n <= s}, for coprime A, B.
struct ConstantRange {
  BigInt min2ab;
  BigInt max2ab;
};
ConstantRange count_constant_range(std::int64_t A, std::int64_t B);

struct StaircaseRow {
  Rational a;
  Rational closed_form;
  CFunResult oracle;
  QuadraticNumber volume;  // sqrt(a l / k)
  bool inside = true;      // closed_form within [oracle.lower, oracle.upper]
};

std::vector<StaircaseRow> staircase_table(const StairParams& P, const std::vector<Rational>& samples,
                                          std::uint64_t K, const CFunOptions& opts = {});

// About `count` grid points j/s in [1, phi] (s even) merged with the breakpoints
// a_n, b_n of small enough denominator. Sorted, unique.
std::vector<Rational> staircase_samples(const StairParams& P, std::size_t count);

}  // namespace echlat
