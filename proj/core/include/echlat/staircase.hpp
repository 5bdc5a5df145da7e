#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "echlat/quadratic.hpp"
#include "echlat/rational.hpp"

namespace echlat {

// A (k, l) pair. The closed-form operations require k and l to both divide
// k + l + 1, i.e. (k, l) in {(1,1), (2,1), (3,2)}.
struct StairParams {
  std::int64_t k = 1;
  std::int64_t l = 1;

  StairParams() = default;
  StairParams(std::int64_t k_, std::int64_t l_);

  bool is_triplet() const;
  void require_triplet() const;  // throws InvalidParams
  Rational ratio() const { return Rational(big(k), big(l)); }

  friend bool operator==(const StairParams&, const StairParams&) = default;
};

struct StairStep {
  std::int64_t n = 0;
  Rational a;      // a_n
  Rational b;      // b_n = r_{n+2} / r_n
  Rational value;  // plateau height on [b_n, a_{n+1}]
};

using IntPair = std::pair<std::int64_t, std::int64_t>;

// r_0 .. r_{n_max}; r_{-1} = 1 is implicit.
std::vector<BigInt> r_seq(const StairParams& P, std::size_t n_max);

std::vector<StairStep> stair_points(const StairParams& P, std::size_t n_max);

QuadraticNumber phi(const StairParams& P);

// c(a, k/l) on [1, phi]. Throws OutOfDomain outside that interval.
Rational c_closed_form(const Rational& a, const StairParams& P);

// Positive solutions of k p^2 - (k+l+1) p q + l q^2 + 1 = 0 with p, q <= bound,
// generated from (1, 1) by the two Vieta involutions and checked against a
// direct search. Sorted.
std::vector<IntPair> diophantine_solutions(const StairParams& P, std::int64_t bound);

// The same solution set by direct search over p, solving for q.
std::vector<IntPair> diophantine_brute_force(const StairParams& P, std::int64_t bound);

// (r_{2n+-1}, r_{2n}) with both entries <= bound, sorted.
std::vector<IntPair> r_family(const StairParams& P, std::int64_t bound);

// s_0 = s_1 = 1, s_{2n+1} = (l s_{2n}^2 + 1) / (k s_{2n-1}), s_{2n} = (k s_{2n-1}^2 + 1) / (l s_{2n-2}).
std::vector<BigInt> descent_sequence(const StairParams& P, std::size_t n_max);

struct PeriodScanResult {
  StairParams params;
  std::int64_t bound = 0;
  bool exploratory = false;       // (k, l) outside the triplet; nothing is asserted
  bool complete_claim = false;    // the match set is expected to equal the prediction
  std::vector<IntPair> matches;   // coprime (p, q) whose triangle has minimal period kl
  std::vector<IntPair> predicted;
  std::vector<IntPair> extras;    // matches not predicted
  std::vector<IntPair> missing;   // predicted but not matched

  bool consistent() const { return exploratory || (missing.empty() && (!complete_claim || extras.empty())); }
};

// Minimal period of T_{q/(kp), p/(lq)} for coprime p, q <= bound.
// Any coprime (k, l) is scanned; outside the triplet the result is exploratory.
PeriodScanResult period_collapse_scan(const StairParams& P, std::int64_t bound, unsigned threads = 1);

// (k/l)(1 + (l+1)/k)^2.
Rational volume_threshold(const StairParams& P);

// f_n = (r_{n+2} r_n + r_{n+2} + r_n - 1) / 2.
BigInt fn_index(const StairParams& P, std::size_t n);

// c_{f_n}(E(1, b_n)) = r_{n+2} and c_{f_n}(E(1, k/l)) = r_{n+1} (n odd), (k/l) r_{n+1} (n even).
bool check_step_indices(const StairParams& P, std::size_t n);

// d^2/(2kl) + (1/(2k) + 1/(2l) + 1/(2kl)) d + 1.
Rational count_bound_rhs(const StairParams& P, std::int64_t d);

// L_{T_{1/k,1/l}}(d) <= count_bound_rhs(P, d) for d = 1..d_max.
bool check_count_bound(const StairParams& P, std::int64_t d_max);

}  // namespace echlat
