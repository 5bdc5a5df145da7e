#include "suites.hpp"

#include <functional>
#include <map>
#include <random>

#include "echlat/dedekind.hpp"
#include "echlat/embed.hpp"
#include "echlat/error.hpp"
#include "echlat/lattice.hpp"

namespace echlat::cli {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  return Rational(big(uniform(rng, 1, max_num)), big(uniform(rng, 1, max_den)));
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    if (ok) {
      ++r_.passed;
      return;
    }
    ++r_.failed;
    if (r_.failures.size() < 10) r_.failures.push_back(what);
  }

 private:
  SuiteReport& r_;
};

void reciprocity(Recorder& rec, std::uint64_t trials, Rng& rng) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::int64_t a, b, c;
    do {
      a = uniform(rng, 1, 50);
      b = uniform(rng, 1, 50);
      c = uniform(rng, 1, 50);
    } while (gcd64(a, b) != 1 || gcd64(b, c) != 1 || gcd64(a, c) != 1);
    const std::int64_t n = uniform(rng, 1, a + b + c - 1);
    const std::string tag = std::to_string(n) + ";" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    rec.check(check_rademacher(n, a, b, c), "rademacher " + tag);
    rec.check(check_rademacher_zero(a, b, c), "rademacher_zero " + tag);
  }
}

void convolution(Recorder& rec, std::uint64_t trials, Rng& rng) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    const bool zero_regime = i % 10 == 0;
    std::int64_t a1, a2, b, c;
    while (true) {
      b = uniform(rng, zero_regime ? 2 : 1, 12);
      c = uniform(rng, zero_regime ? 2 : 1, 12);
      a1 = uniform(rng, -30, 30);
      a2 = uniform(rng, -30, 30);
      if (a1 % b == 0 || a2 % b == 0) continue;
      if (zero_regime && ((a1 + a2) % b != 0 || (a1 + a2) % (b * c) == 0)) continue;
      break;
    }
    rec.check(check_convolution(a1, a2, b, c),
              "convolution " + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(b) + "," +
                  std::to_string(c));
  }
}

void pair_sums(Recorder& rec, std::uint64_t trials, Rng& rng) {
  const Real tol(Rational(BigInt(1), BigInt(1000000000)), kDefaultPrecisionBits);
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::int64_t e, f;
    do {
      e = uniform(rng, 1, 20);
      f = uniform(rng, 1, 20);
    } while (gcd64(e, f) != 1);
    const std::int64_t n = uniform(rng, 0, 3 * e * f);
    const Rational exact = fd_pair_sum_exact(big(e), big(f), big(n));
    const Real numeric = fd_sum_numeric({-n, e, 1, f}).value + fd_sum_numeric({-n, f, 1, e}).value;
    rec.check(abs(numeric - Real(exact, kDefaultPrecisionBits)) <= tol,
              "pair sum " + std::to_string(e) + "," + std::to_string(f) + "," + std::to_string(n));
  }
}

void lattice(Recorder& rec, std::uint64_t trials, Rng& rng) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    const BigInt e = big(uniform(rng, 1, 40));
    const BigInt f = big(uniform(rng, 1, 40));
    const BigInt n = big(uniform(rng, 0, 5000));
    rec.check(lattice_count(e, f, n) == lattice_count_by_rows(e, f, n),
              "lattice_count " + e.get_str() + "," + f.get_str() + "," + n.get_str());
    const Triangle tri(random_rational(rng, 6, 6), random_rational(rng, 6, 6));
    const QuasiPolynomial q = ehrhart_quasipoly(tri);
    const std::uint64_t t = static_cast<std::uint64_t>(uniform(rng, 0, 10 * static_cast<std::int64_t>(q.declared_period())));
    rec.check(q.eval(t) == Rational(triangle_count(tri, big(static_cast<std::int64_t>(t)))),
              "ehrhart " + tri.u().to_string() + "," + tri.v().to_string());
  }
}

void capacities(Recorder& rec, std::uint64_t trials, Rng& rng) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Ellipsoid e(random_rational(rng, 12, 5), random_rational(rng, 12, 5));
    const BigInt k = big(uniform(rng, 0, 2000));
    const Rational t = random_rational(rng, 400, 7);
    const bool lhs = ech_capacity(e, k) <= t;
    const bool rhs = capacity_count(e, t) >= k + 1;
    rec.check(lhs == rhs, "galois E(" + e.a.to_string() + "," + e.b.to_string() + ") k=" + k.get_str());
  }
}

void embedding(Recorder& rec, std::uint64_t trials, Rng& rng) {
  constexpr std::uint64_t K = 2000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Ellipsoid s(random_rational(rng, 8, 3), random_rational(rng, 8, 3));
    const Ellipsoid t(random_rational(rng, 8, 3), random_rational(rng, 8, 3));
    const EmbedDecision d = embeds(s, t);
    CapacitySeq cs(s);
    CapacitySeq ct(t);
    const auto ps = cs.prefix(K);
    const auto pt = ct.prefix(K);
    bool dominated = true;
    for (std::uint64_t k = 0; k <= K && dominated; ++k) dominated = ps[k] <= pt[k];
    // A "no" must be witnessed within the prefix or beyond it; a "yes" must dominate the prefix.
    bool ok = d.embeds ? dominated : d.witness.has_value();
    if (!d.embeds && d.witness->k <= K) ok = ok && !dominated;
    if (d.embeds) ok = ok && s.volume() <= t.volume();
    rec.check(ok, "embeds E(" + s.a.to_string() + "," + s.b.to_string() + ") -> E(" + t.a.to_string() + "," +
                      t.b.to_string() + ")");
  }
}

void weights(Recorder& rec, std::uint64_t trials, Rng& rng) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rational a = random_rational(rng, 24, 6);
    if (a < Rational(1)) a = Rational(1) / a;
    rec.check(check_decomposition(a, 120), "weights " + a.to_string());
  }
}

void staircase(Recorder& rec, std::uint64_t trials, Rng& rng) {
  const StairParams triplet[] = {{1, 1}, {2, 1}, {3, 2}};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const StairParams& P = triplet[rng() % 3];
    const auto n = static_cast<std::size_t>(uniform(rng, 0, 5));
    const std::string tag = "(" + std::to_string(P.k) + "," + std::to_string(P.l) + ") n=" + std::to_string(n);
    rec.check(check_step_indices(P, n), "step indices " + tag);
    const std::int64_t bound = uniform(rng, 1, 400);
    rec.check(diophantine_solutions(P, bound) == diophantine_brute_force(P, bound), "diophantine " + tag);
    rec.check(check_count_bound(P, uniform(rng, 1, 300)), "count bound " + tag);
  }
}

using SuiteFn = std::function<void(Recorder&, std::uint64_t, Rng&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"capacities", capacities}, {"convolution", convolution}, {"embed", embedding},
      {"lattice", lattice},       {"pair-sums", pair_sums},     {"reciprocity", reciprocity},
      {"staircase", staircase},   {"weights", weights},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : suites()) out.push_back(k);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed) {
  SuiteReport report;
  report.name = name;
  Recorder rec(report);
  if (name == "all") {
    for (const auto& [k, fn] : suites()) {
      Rng rng(seed);
      fn(rec, trials, rng);
    }
    return report;
  }
  const auto it = suites().find(name);
  if (it == suites().end()) throw DomainError("unknown verification suite '" + name + "'");
  Rng rng(seed);
  it->second(rec, trials, rng);
  return report;
}

}  // namespace echlat::cli
