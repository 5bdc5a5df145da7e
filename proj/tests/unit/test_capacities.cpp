#include <doctest.h>

#include <random>
#include <thread>

#include "echlat/capacities.hpp"
#include "echlat/error.hpp"
#include "echlat/lattice.hpp"
#include "oracles.hpp"

using namespace echlat;

namespace {

Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(big(p), big(q)); }

Rational random_rat(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t q = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
  const std::int64_t p = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_num * q)) + 1;
  return rat(p, q);
}

std::vector<Rational> ball(const Rational& w, std::size_t K) { return CapacitySeq(Ellipsoid(w, w)).prefix(K); }

}  // namespace

TEST_CASE("ellipsoid validation and scaling") {
  CHECK_THROWS_AS(Ellipsoid(rat(0), rat(1)), NonPositiveInput);
  CHECK_THROWS_AS(Ellipsoid(rat(1), rat(-2)), NonPositiveInput);
  const ScaledEllipsoid s = scaled(Ellipsoid(rat(3, 4), rat(5, 6)));
  CHECK(s.A == 9);
  CHECK(s.B == 10);
  CHECK(s.unit == rat(1, 12));
  CHECK(Ellipsoid(rat(2), rat(3)).volume() == rat(6));
}

TEST_CASE("ech_capacity examples") {
  CHECK(ech_capacity(Ellipsoid(rat(1), rat(1)), BigInt(3)) == rat(2));
  CHECK(ech_capacity(Ellipsoid(rat(7, 3), rat(2)), BigInt(0)) == rat(0));
  CHECK(ech_capacity(Ellipsoid(rat(1), rat(2)), BigInt(4)) == rat(3));
  CHECK(ech_capacity(Ellipsoid(rat(1), rat(1)), BigInt(1)) == rat(1));
  CHECK(ech_capacity(Ellipsoid(rat(1), rat(1)), BigInt(2)) == rat(1));
}

TEST_CASE("capacity_count examples") {
  CHECK(capacity_count(Ellipsoid(rat(1), rat(1)), rat(2)) == 6);
  CHECK(capacity_count(Ellipsoid(rat(1), rat(2)), rat(2)) == 4);
  CHECK(capacity_count(Ellipsoid(rat(1), rat(1)), rat(0)) == 1);
  CHECK(capacity_count(Ellipsoid(rat(1), rat(1)), rat(5, 2)) == 6);
}

TEST_CASE("capacities match the sorted-box oracle") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const Ellipsoid e(random_rat(rng, 6, 7), random_rat(rng, 6, 7));
    const auto want = oracle::capacities(e.a, e.b, 150);
    CapacitySeq seq(e);
    const auto got = seq.prefix(150);
    REQUIRE(got == want);
    for (std::size_t k = 0; k <= 150; k += 13) CHECK(ech_capacity(e, BigInt(static_cast<unsigned long>(k))) == want[k]);
  }
}

TEST_CASE("Galois connection between ech_capacity and capacity_count") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const Ellipsoid e(random_rat(rng, 10, 9), random_rat(rng, 10, 9));
    const BigInt k(static_cast<unsigned long>(rng() % 2000));
    const Rational t = random_rat(rng, 100, 11);
    CHECK((ech_capacity(e, k) <= t) == (capacity_count(e, t) >= k + 1));
  }
}

TEST_CASE("capacity_count equals the triangle count at integer t") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Rational a = random_rat(rng, 10, 6);
    const Rational b = random_rat(rng, 10, 6);
    const Triangle tri(Rational(1) / a, Rational(1) / b);
    for (std::int64_t t = 1; t <= 100; ++t) {
      REQUIRE(capacity_count(Ellipsoid(a, b), rat(t)) == triangle_count(tri, big(t)));
    }
  }
}

TEST_CASE("monotone and homogeneous") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const Ellipsoid e(random_rat(rng, 8, 5), random_rat(rng, 8, 5));
    const Rational lambda = random_rat(rng, 5, 7);
    const BigInt k(static_cast<unsigned long>(rng() % 5000));
    CHECK(ech_capacity(Ellipsoid(lambda * e.a, lambda * e.b), k) == lambda * ech_capacity(e, k));
    CHECK(ech_capacity(e, k) <= ech_capacity(e, k + 1));
  }
  CapacitySeq seq(Ellipsoid(rat(2, 3), rat(9, 5)));
  const auto p = seq.prefix(3000);
  CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("area sandwich") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rat(rng, 10, 8);
    const Rational b = random_rat(rng, 10, 8);
    const Rational t = random_rat(rng, 300, 8);
    const Rational n(capacity_count(Ellipsoid(a, b), t));
    CHECK(t * t / (rat(2) * a * b) <= n);
    CHECK(n <= (t + a + b) * (t + a + b) / (rat(2) * a * b));
  }
}

TEST_CASE("CapacitySeq grows lazily and is safe under concurrent reads") {
  CapacitySeq seq(Ellipsoid(rat(1), rat(3, 2)));
  CHECK(seq.unit() == rat(1, 2));
  CHECK(seq.at(4) == rat(5, 2));
  const auto want = oracle::capacities(rat(1), rat(3, 2), 4000);
  std::vector<std::thread> pool;
  std::vector<bool> ok(4, false);
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&, i] {
      bool good = true;
      for (std::uint64_t k = static_cast<std::uint64_t>(i); k <= 4000; k += 97) good = good && seq.at(k) == want[k];
      ok[static_cast<std::size_t>(i)] = good;
    });
  }
  for (auto& t : pool) t.join();
  for (bool b : ok) CHECK(b);
  const auto s = seq.scaled_prefix(10);
  CHECK(s == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6, 6, 7, 8, 8, 9});
}

TEST_CASE("seq_sum") {
  const auto n11 = ball(rat(1), 10);
  CHECK(seq_sum(n11, n11, 2)[2] == rat(2));
  const std::vector<Rational> zero{rat(0)};
  CHECK(seq_sum(n11, zero, 0)[0] == n11[0]);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto A = CapacitySeq(Ellipsoid(random_rat(rng, 4, 5), random_rat(rng, 4, 5))).prefix(60);
    const auto B = CapacitySeq(Ellipsoid(random_rat(rng, 4, 5), random_rat(rng, 4, 5))).prefix(60);
    const auto C = CapacitySeq(Ellipsoid(random_rat(rng, 4, 5), random_rat(rng, 4, 5))).prefix(60);
    CHECK(seq_sum(A, B, 60) == seq_sum(B, A, 60));
    CHECK(seq_sum(seq_sum(A, B, 60), C, 60) == seq_sum(A, seq_sum(B, C, 60), 60));
  }
}

TEST_CASE("weight_sequence examples") {
  CHECK(weight_sequence(rat(1)).weights == std::vector<Rational>{rat(1)});
  CHECK(weight_sequence(rat(2)).weights == std::vector<Rational>{rat(1), rat(1)});
  CHECK(weight_sequence(rat(3, 2)).weights == std::vector<Rational>{rat(1), rat(1, 2), rat(1, 2)});
  CHECK(weight_sequence(rat(7, 3)).weights ==
        std::vector<Rational>{rat(1), rat(1), rat(1, 3), rat(1, 3), rat(1, 3)});
  CHECK_THROWS_AS(weight_sequence(rat(1, 2)), OutOfDomain);
}

TEST_CASE("weight identities") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Rational a = rat(1) + random_rat(rng, 6, 13);
    const auto w = weight_sequence(a);
    Rational squares, sum;
    for (const auto& x : w.weights) {
      CHECK(x <= rat(1));
      squares += x * x;
      sum += x;
    }
    CHECK(squares == a);
    // total weight equals a + 1 - 1/den(a)
    CHECK(sum == a + rat(1) - Rational(BigInt(1), a.den()));
  }
}

TEST_CASE("check_decomposition") {
  CHECK(check_decomposition(rat(1), 50));
  CHECK(check_decomposition(rat(2), 200));
  CHECK(check_decomposition(rat(7, 3), 200));
  CHECK(check_decomposition(rat(5, 2), 300));
  // direct sum of ball sequences for a = 3/2
  const auto lhs = CapacitySeq(Ellipsoid(rat(1), rat(3, 2))).prefix(100);
  const auto rhs = seq_sum(seq_sum(ball(rat(1), 100), ball(rat(1, 2), 100), 100), ball(rat(1, 2), 100), 100);
  CHECK(lhs == rhs);
}
