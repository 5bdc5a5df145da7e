#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "echlat/rational.hpp"

namespace echlat {

// E(a, b), a, b > 0. Only the capacity sequence matters, so (a, b) and (b, a)
// describe the same object.
struct Ellipsoid {
  Rational a;
  Rational b;

  Ellipsoid(Rational a_, Rational b_);

  Rational volume() const { return a * b; }
  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;
};

// a*m + b*n = unit * (A*m + B*n) with coprime positive integers A, B.
struct ScaledEllipsoid {
  BigInt A;
  BigInt B;
  Rational unit;
};
ScaledEllipsoid scaled(const Ellipsoid& e);

// (k+1)-st smallest a*m + b*n over m, n >= 0, counted with multiplicity.
Rational ech_capacity(const Ellipsoid& e, const BigInt& k);

// #{(m, n) >= 0 : a*m + b*n <= t}.
BigInt capacity_count(const Ellipsoid& e, const Rational& t);

// Capacities c_0, c_1, ... of one ellipsoid with a lazily grown prefix.
// Values are kept as integer multiples of scaled(source).unit.
class CapacitySeq {
 public:
  explicit CapacitySeq(Ellipsoid source);

  const Ellipsoid& source() const { return source_; }
  const Rational& unit() const { return scaled_.unit; }

  Rational at(std::uint64_t k);
  // c_0..c_K as multiples of unit().
  std::vector<std::int64_t> scaled_prefix(std::uint64_t K);
  std::vector<Rational> prefix(std::uint64_t K);

 private:
  void extend(std::uint64_t K);

  Ellipsoid source_;
  ScaledEllipsoid scaled_;
  std::mutex mutex_;
  std::vector<std::int64_t> values_;
};

// (A # B)_k = max_{k1 + k2 = k} A[k1] + B[k2] for k = 0..K.
std::vector<Rational> seq_sum(std::span<const Rational> A, std::span<const Rational> B, std::size_t K);

struct WeightSequence {
  Rational target;
  std::vector<Rational> weights;
};

// Square-removal expansion of the 1 x a rectangle, a >= 1.
// Every weight is <= 1 and the squares sum to a.
WeightSequence weight_sequence(const Rational& a);

// N(1, a) == N(w1, w1) # ... # N(wn, wn) on indices 0..K.
bool check_decomposition(const Rational& a, std::uint64_t K);

}  // namespace echlat
