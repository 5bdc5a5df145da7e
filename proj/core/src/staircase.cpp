#include "echlat/staircase.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <string>
#include <thread>

#include "echlat/capacities.hpp"
#include "echlat/error.hpp"
#include "echlat/lattice.hpp"

namespace echlat {

namespace {

std::string describe(const StairParams& P) { return "(" + std::to_string(P.k) + "," + std::to_string(P.l) + ")"; }

std::int64_t sum_kl(const StairParams& P) { return P.k + P.l + 1; }

// r_0 .. r_{n_max}, grown on demand.
class RSequence {
 public:
  explicit RSequence(const StairParams& P) : P_(P) {
    P_.require_triplet();
    r_ = {BigInt(1), BigInt(1)};
  }
  const BigInt& operator[](std::size_t i) {
    while (r_.size() <= i) {
      const std::size_t m = r_.size();
      const std::int64_t div = (m % 2 == 1) ? P_.k : P_.l;
      r_.push_back(big(sum_kl(P_) / div) * r_[m - 1] - r_[m - 2]);
    }
    return r_[i];
  }
  // r_i for i >= -1.
  BigInt at(std::int64_t i) { return i < 0 ? BigInt(1) : BigInt((*this)[static_cast<std::size_t>(i)]); }

 private:
  StairParams P_;
  std::vector<BigInt> r_;
};

Rational a_term(const StairParams& P, RSequence& r, std::size_t n) {
  const BigInt& rn = r[n];
  const BigInt rn1 = r[n + 1];
  const BigInt num = rn1 * rn1;
  const BigInt den = rn * rn;
  if (n % 2 == 0) return Rational(big(P.k) * num, big(P.l) * den);
  return Rational(big(P.l) * num, big(P.k) * den);
}

Rational b_term(RSequence& r, std::size_t n) {
  const BigInt rn = r[n];
  return Rational(r[n + 2], rn);
}

Rational checked_sqrt(const Rational& v) {
  auto s = exact_sqrt(v);
  if (!s) throw InternalVerificationFailure("staircase square root of " + v.to_string() + " is not rational");
  return *s;
}

bool satisfies(const StairParams& P, const BigInt& p, const BigInt& q) {
  return big(P.k) * p * p - big(sum_kl(P)) * p * q + big(P.l) * q * q + 1 == 0;
}

}  // namespace

StairParams::StairParams(std::int64_t k_, std::int64_t l_) : k(k_), l(l_) {
  if (k < 1 || l < 1) throw InvalidParams("staircase parameters must be positive, got " + describe(*this));
}

bool StairParams::is_triplet() const { return (k == 1 && l == 1) || (k == 2 && l == 1) || (k == 3 && l == 2); }

void StairParams::require_triplet() const {
  if (!is_triplet()) {
    throw InvalidParams("(k,l) must be one of (1,1), (2,1), (3,2), got " + describe(*this));
  }
}

std::vector<BigInt> r_seq(const StairParams& P, std::size_t n_max) {
  RSequence r(P);
  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) out.push_back(r[i]);
  return out;
}

std::vector<StairStep> stair_points(const StairParams& P, std::size_t n_max) {
  RSequence r(P);
  std::vector<StairStep> out;
  out.reserve(n_max + 1);
  const Rational inv = Rational(big(P.l), big(P.k));
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.push_back({static_cast<std::int64_t>(n), a_term(P, r, n), b_term(r, n), checked_sqrt(inv * a_term(P, r, n + 1))});
  }
  return out;
}

QuadraticNumber phi(const StairParams& P) {
  P.require_triplet();
  const BigInt s = big(sum_kl(P));
  const BigInt delta = s * s - 4 * big(P.k) * big(P.l);
  const BigInt den = 4 * big(P.k) * big(P.l);
  return QuadraticNumber(Rational(s * s + delta, den), Rational(2 * s, den), delta);
}

Rational c_closed_form(const Rational& a, const StairParams& P) {
  P.require_triplet();
  if (a < Rational(1)) throw OutOfDomain("c_closed_form needs a >= 1, got " + a.to_string());
  if (quad_compare(QuadraticNumber(a), phi(P)) > 0) {
    throw OutOfDomain("c_closed_form needs a <= phi" + describe(P) + ", got " + a.to_string());
  }
  const Rational ratio = P.ratio();
  if (a <= ratio) return Rational(1);
  RSequence r(P);
  const Rational inv = Rational(big(P.l), big(P.k));
  // a < phi is strict for rational a, so one of the segments below contains it.
  for (std::size_t n = 0;; ++n) {
    if (a <= b_term(r, n)) return a / checked_sqrt(ratio * a_term(P, r, n));
    if (a <= a_term(P, r, n + 1)) return checked_sqrt(inv * a_term(P, r, n + 1));
  }
}

std::vector<IntPair> diophantine_brute_force(const StairParams& P, std::int64_t bound) {
  if (bound < 1) return {};
  const BigInt s = big(sum_kl(P));
  const BigInt k = big(P.k);
  const BigInt l = big(P.l);
  std::vector<IntPair> out;
  for (std::int64_t pi = 1; pi <= bound; ++pi) {
    const BigInt p = big(pi);
    // l q^2 - s p q + (k p^2 + 1) = 0
    const BigInt disc = s * s * p * p - 4 * l * (k * p * p + 1);
    if (sgn(disc) < 0 || !is_perfect_square(disc)) continue;
    const BigInt d = isqrt(disc);
    std::set<std::int64_t> qs;
    for (const BigInt& num : {BigInt(s * p - d), BigInt(s * p + d)}) {
      if (sgn(num) <= 0 || num % (2 * l) != 0) continue;
      const BigInt q = num / (2 * l);
      if (q <= bound) qs.insert(*to_int64(q));
    }
    for (auto q : qs) out.emplace_back(pi, q);
  }
  return out;
}

std::vector<IntPair> diophantine_solutions(const StairParams& P, std::int64_t bound) {
  P.require_triplet();
  std::set<IntPair> seen;
  std::vector<IntPair> frontier;
  if (bound >= 1) {
    seen.insert({1, 1});
    frontier.push_back({1, 1});
  }
  const BigInt k = big(P.k);
  const BigInt l = big(P.l);
  while (!frontier.empty()) {
    const auto [pi, qi] = frontier.back();
    frontier.pop_back();
    const BigInt p = big(pi);
    const BigInt q = big(qi);
    const BigInt sig_num = l * q * q + 1;
    const BigInt tau_num = k * p * p + 1;
    std::vector<IntPair> next;
    if (sig_num % (k * p) == 0) {
      const BigInt p2 = sig_num / (k * p);
      if (p2 <= bound) next.emplace_back(*to_int64(p2), qi);
    }
    if (tau_num % (l * q) == 0) {
      const BigInt q2 = tau_num / (l * q);
      if (q2 <= bound) next.emplace_back(pi, *to_int64(q2));
    }
    for (const auto& nb : next) {
      if (seen.insert(nb).second) frontier.push_back(nb);
    }
  }
  std::vector<IntPair> out(seen.begin(), seen.end());
  for (const auto& [p, q] : out) {
    if (!satisfies(P, big(p), big(q))) {
      throw InternalVerificationFailure("descent produced a non-solution (" + std::to_string(p) + "," +
                                        std::to_string(q) + ")");
    }
  }
  if (out != diophantine_brute_force(P, bound)) {
    throw InternalVerificationFailure("descent and direct search disagree for " + describe(P));
  }
  return out;
}

std::vector<IntPair> r_family(const StairParams& P, std::int64_t bound) {
  RSequence r(P);
  std::set<IntPair> out;
  for (std::int64_t n = 0;; ++n) {
    const BigInt q = r.at(2 * n);
    if (q > bound) break;
    for (std::int64_t idx : {2 * n - 1, 2 * n + 1}) {
      const BigInt p = r.at(idx);
      if (p <= bound) out.insert({*to_int64(p), *to_int64(q)});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<BigInt> descent_sequence(const StairParams& P, std::size_t n_max) {
  P.require_triplet();
  std::vector<BigInt> s = {BigInt(1), BigInt(1)};
  const BigInt k = big(P.k);
  const BigInt l = big(P.l);
  while (s.size() <= n_max) {
    const std::size_t m = s.size();
    const BigInt& prev = s[m - 1];
    const BigInt num = (m % 2 == 1 ? l : k) * prev * prev + 1;
    const BigInt den = (m % 2 == 1 ? k : l) * s[m - 2];
    if (num % den != 0) throw InternalVerificationFailure("descent sequence is not integral at " + std::to_string(m));
    s.push_back(num / den);
  }
  s.resize(n_max + 1);
  return s;
}

PeriodScanResult period_collapse_scan(const StairParams& P, std::int64_t bound, unsigned threads) {
  if (gcd64(P.k, P.l) != 1) throw InvalidParams("period scan needs coprime (k,l), got " + describe(P));
  PeriodScanResult res;
  res.params = P;
  res.bound = bound;
  res.exploratory = !P.is_triplet();
  res.complete_claim = (P.k == 1 && P.l == 1) || (P.k == 2 && P.l == 1);

  std::vector<IntPair> cells;
  for (std::int64_t p = 1; p <= bound; ++p) {
    for (std::int64_t q = 1; q <= bound; ++q) {
      if (gcd64(p, q) == 1) cells.emplace_back(p, q);
    }
  }
  const std::uint64_t target = static_cast<std::uint64_t>(P.k * P.l);
  std::vector<char> hit(cells.size(), 0);
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < cells.size(); i += stride) {
      const auto [p, q] = cells[i];
      const Triangle tri(Rational(big(q), big(P.k * p)), Rational(big(p), big(P.l * q)));
      hit[i] = ehrhart_quasipoly(tri).minimal_period() == target;
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (hit[i]) res.matches.push_back(cells[i]);
  }

  if (!res.exploratory) {
    std::set<IntPair> pred;
    for (const auto& pq : r_family(P, bound)) pred.insert(pq);
    RSequence r(P);
    for (std::int64_t n = 0;; ++n) {
      const BigInt p = big(P.l) * r.at(2 * n);
      if (p > bound) break;
      for (std::int64_t idx : {2 * n - 1, 2 * n + 1}) {
        const BigInt q = big(P.k) * r.at(idx);
        if (q <= bound) pred.insert({*to_int64(p), *to_int64(q)});
      }
    }
    for (const auto& pq : pred) {
      if (gcd64(pq.first, pq.second) == 1) res.predicted.push_back(pq);
    }
    std::set_difference(res.matches.begin(), res.matches.end(), res.predicted.begin(), res.predicted.end(),
                        std::back_inserter(res.extras));
    std::set_difference(res.predicted.begin(), res.predicted.end(), res.matches.begin(), res.matches.end(),
                        std::back_inserter(res.missing));
  }
  return res;
}

Rational volume_threshold(const StairParams& P) {
  P.require_triplet();
  const Rational inner = Rational(1) + Rational(big(P.l + 1), big(P.k));
  return P.ratio() * inner * inner;
}

BigInt fn_index(const StairParams& P, std::size_t n) {
  RSequence r(P);
  const BigInt rn = r[n];
  const BigInt rn2 = r[n + 2];
  const BigInt twice = rn2 * rn + rn2 + rn - 1;
  if (twice % 2 != 0) throw InternalVerificationFailure("f_n is not integral");
  return twice / 2;
}

bool check_step_indices(const StairParams& P, std::size_t n) {
  RSequence r(P);
  const BigInt f = fn_index(P, n);
  const Ellipsoid step(Rational(1), b_term(r, n));
  const Ellipsoid base(Rational(1), P.ratio());
  const Rational expect_base = (n % 2 == 1) ? Rational(r[n + 1]) : P.ratio() * Rational(r[n + 1]);
  return ech_capacity(step, f) == Rational(r[n + 2]) && ech_capacity(base, f) == expect_base;
}

Rational count_bound_rhs(const StairParams& P, std::int64_t d) {
  const Rational k(P.k);
  const Rational l(P.l);
  const Rational D(d);
  const Rational half(BigInt(1), BigInt(2));
  return D * D / (Rational(2) * k * l) + (half / k + half / l + half / (k * l)) * D + Rational(1);
}

bool check_count_bound(const StairParams& P, std::int64_t d_max) {
  P.require_triplet();
  if (d_max < 1) throw DomainError("check_count_bound needs d_max >= 1");
  const Triangle tri(Rational(big(1), big(P.k)), Rational(big(1), big(P.l)));
  for (std::int64_t d = 1; d <= d_max; ++d) {
    if (count_bound_rhs(P, d) < Rational(triangle_count(tri, big(d)))) return false;
  }
  return true;
}

}  // namespace echlat
