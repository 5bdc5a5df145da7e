#include "echlat/capacities.hpp"

#include <algorithm>
#include <string>

#include "echlat/error.hpp"
#include "echlat/lattice.hpp"

namespace echlat {

Ellipsoid::Ellipsoid(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.sign() <= 0 || b.sign() <= 0) {
    throw NonPositiveInput("ellipsoid parameters must be positive, got E(" + a.to_string() + ", " + b.to_string() +
                           ")");
  }
}

ScaledEllipsoid scaled(const Ellipsoid& e) {
  const BigInt D = lcm(e.a.den(), e.b.den());
  const BigInt A = e.a.num() * (D / e.a.den());
  const BigInt B = e.b.num() * (D / e.b.den());
  const BigInt g = gcd(A, B);
  return {A / g, B / g, Rational(g, D)};
}

Rational ech_capacity(const Ellipsoid& e, const BigInt& k) {
  if (sgn(k) < 0) throw DomainError("capacity index must be nonnegative");
  const ScaledEllipsoid s = scaled(e);
  // Smallest integer v with lattice_count(A, B, v) >= k + 1.
  BigInt lo = 0;
  BigInt hi = k * (s.A < s.B ? s.A : s.B);
  const BigInt need = k + 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (lattice_count(s.A, s.B, mid) >= need) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return Rational(lo) * s.unit;
}

BigInt capacity_count(const Ellipsoid& e, const Rational& t) {
  if (t.sign() < 0) throw DomainError("capacity_count needs t >= 0");
  const ScaledEllipsoid s = scaled(e);
  return lattice_count(s.A, s.B, floor(t / s.unit));
}

CapacitySeq::CapacitySeq(Ellipsoid source) : source_(std::move(source)), scaled_(scaled(source_)) {}

void CapacitySeq::extend(std::uint64_t K) {
  if (values_.size() > K) return;
  // Grow geometrically so sweeps with increasing K stay linear overall.
  const std::uint64_t target = std::max<std::uint64_t>(K, 2 * values_.size());
  const BigInt vmax = ech_capacity(Ellipsoid(Rational(scaled_.A), Rational(scaled_.B)), big(static_cast<std::int64_t>(target))).num();
  const auto limit = to_int64(vmax);
  const auto A = to_int64(scaled_.A);
  const auto B = to_int64(scaled_.B);
  if (!limit || !A || !B || *limit > (std::int64_t{1} << 62)) {
    throw DomainError("capacity prefix of " + source_.a.to_string() + ", " + source_.b.to_string() +
                      " exceeds 64-bit storage");
  }
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(target) + 1);
  for (std::int64_t x = 0; x <= *limit; x += *A) {
    for (std::int64_t v = x; v <= *limit; v += *B) vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());
  vals.resize(static_cast<std::size_t>(target) + 1);
  values_ = std::move(vals);
}

std::vector<std::int64_t> CapacitySeq::scaled_prefix(std::uint64_t K) {
  std::lock_guard lock(mutex_);
  extend(K);
  return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(K) + 1};
}

Rational CapacitySeq::at(std::uint64_t k) {
  std::lock_guard lock(mutex_);
  extend(k);
  return Rational(values_[static_cast<std::size_t>(k)]) * scaled_.unit;
}

std::vector<Rational> CapacitySeq::prefix(std::uint64_t K) {
  const auto raw = scaled_prefix(K);
  std::vector<Rational> out;
  out.reserve(raw.size());
  for (auto v : raw) out.push_back(Rational(v) * scaled_.unit);
  return out;
}

std::vector<Rational> seq_sum(std::span<const Rational> A, std::span<const Rational> B, std::size_t K) {
  if (A.size() <= K || B.size() <= K) throw DomainError("seq_sum needs both sequences through index K");
  std::vector<Rational> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    Rational best = A[0] + B[k];
    for (std::size_t k1 = 1; k1 <= k; ++k1) {
      Rational v = A[k1] + B[k - k1];
      if (best < v) best = std::move(v);
    }
    out[k] = std::move(best);
  }
  return out;
}

WeightSequence weight_sequence(const Rational& a) {
  if (a < Rational(1)) throw OutOfDomain("weight_sequence needs a >= 1, got " + a.to_string());
  WeightSequence ws{a, {}};
  Rational small(1);
  Rational big_side = a;
  while (small.sign() > 0) {
    const BigInt reps = floor(big_side / small);
    for (BigInt i = 0; i < reps; ++i) ws.weights.push_back(small);
    Rational rest = big_side - Rational(reps) * small;
    big_side = small;
    small = std::move(rest);
  }
  Rational area(0);
  for (const auto& w : ws.weights) {
    if (Rational(1) < w) throw InternalVerificationFailure("weight above 1 in expansion of " + a.to_string());
    area += w * w;
  }
  if (area != a) throw InternalVerificationFailure("weights do not square-sum to " + a.to_string());
  return ws;
}

bool check_decomposition(const Rational& a, std::uint64_t K) {
  const WeightSequence ws = weight_sequence(a);
  CapacitySeq target(Ellipsoid(Rational(1), a));
  const auto lhs = target.prefix(K);
  std::vector<Rational> acc;
  for (const auto& w : ws.weights) {
    CapacitySeq ball(Ellipsoid(w, w));
    auto seq = ball.prefix(K);
    acc = acc.empty() ? std::move(seq) : seq_sum(acc, seq, static_cast<std::size_t>(K));
  }
  return acc == lhs;
}

}  // namespace echlat
