#include <doctest.h>

#include <random>

#include "echlat/embed.hpp"
#include "echlat/error.hpp"
#include "oracles.hpp"

using namespace echlat;

namespace {

Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(big(p), big(q)); }

Rational random_rat(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t q = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
  const std::int64_t p = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_num * q)) + 1;
  return rat(p, q);
}

// First k <= K with c_k(source) > c_k(target), if any.
std::optional<std::size_t> direct_violation(const Ellipsoid& s, const Ellipsoid& t, std::size_t K) {
  const auto cs = CapacitySeq(s).prefix(K);
  const auto ct = CapacitySeq(t).prefix(K);
  for (std::size_t k = 0; k <= K; ++k) {
    if (cs[k] > ct[k]) return k;
  }
  return std::nullopt;
}

bool within(const CFunResult& r, const Rational& eps) { return r.upper - r.lower <= QuadraticNumber(eps); }

}  // namespace

TEST_CASE("embeds examples") {
  CHECK(embeds(Ellipsoid(rat(1), rat(4)), Ellipsoid(rat(2), rat(2))).embeds);
  CHECK(embeds(Ellipsoid(rat(1), rat(1)), Ellipsoid(rat(1), rat(1))).embeds);
  const auto no = embeds(Ellipsoid(rat(1), rat(2)), Ellipsoid(rat(19, 10), rat(19, 10)));
  REQUIRE_FALSE(no.embeds);
  REQUIRE(no.witness);
  CHECK(no.witness->k == 2);
  CHECK(no.witness->source_value == rat(2));
  CHECK(no.witness->target_value == rat(19, 10));
  CHECK(no.witness->scale == rat(10));
  CHECK(no.witness->t == 19);
  CHECK(embeds(Ellipsoid(rat(1), rat(1)), Ellipsoid(rat(2), rat(1, 2))).embeds == false);
  CHECK_THROWS_AS(embeds(Ellipsoid(rat(1), rat(1)), Ellipsoid(rat(1, 10007), rat(1, 10009)), {1000}),
                  DomainError);
}

TEST_CASE("first_negative") {
  // j^2 - 10 j + 21 < 0 on (3, 7)
  CHECK(first_negative(BigInt(1), BigInt(-10), BigInt(21), BigInt(0)) == BigInt(4));
  CHECK(first_negative(BigInt(1), BigInt(-10), BigInt(21), BigInt(5)) == BigInt(5));
  CHECK_FALSE(first_negative(BigInt(1), BigInt(-10), BigInt(21), BigInt(7)));
  CHECK_FALSE(first_negative(BigInt(1), BigInt(-10), BigInt(25), BigInt(0)));
  CHECK(first_negative(BigInt(-1), BigInt(0), BigInt(100), BigInt(0)) == BigInt(11));
  CHECK(first_negative(BigInt(0), BigInt(-3), BigInt(10), BigInt(0)) == BigInt(4));
  CHECK_FALSE(first_negative(BigInt(0), BigInt(0), BigInt(0), BigInt(0)));
  // (j - 10^12)^2 never goes negative
  CHECK_FALSE(first_negative(BigInt(1), BigInt("-2000000000000"), BigInt("1000000000000000000000000"), BigInt(0)));
  CHECK(first_negative(BigInt(1), BigInt("-2000000000000"), BigInt("999999999999999999999999"), BigInt(0)) ==
        BigInt("1000000000000"));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const long A = static_cast<long>(rng() % 7) - 3;
    const long B = static_cast<long>(rng() % 81) - 40;
    const long C = static_cast<long>(rng() % 401) - 200;
    const long j0 = static_cast<long>(rng() % 30);
    std::optional<BigInt> want;
    for (long j = j0; j < j0 + 2000; ++j) {
      if (A * j * j + B * j + C < 0) {
        want = BigInt(j);
        break;
      }
    }
    CHECK(first_negative(BigInt(A), BigInt(B), BigInt(C), BigInt(j0)) == want);
  }
}

TEST_CASE("decision agrees with direct capacity comparison") {
  std::mt19937_64 rng(13);
  int yes = 0, no = 0;
  for (int i = 0; i < 100; ++i) {
    const Ellipsoid s(random_rat(rng, 4, 4), random_rat(rng, 4, 4));
    const Rational lam = rat(1) + random_rat(rng, 1, 6) / rat(2);
    const Ellipsoid t(random_rat(rng, 4, 4) * lam, random_rat(rng, 4, 4) * lam);
    const auto d = embeds(s, t);
    const auto v = direct_violation(s, t, 10000);
    CHECK(d.embeds == !v.has_value());
    if (d.embeds) {
      ++yes;
      CHECK(s.volume() <= t.volume());
    } else {
      ++no;
      REQUIRE(d.witness);
      // the witness sits at the first violating level, possibly past the first violating index
      CHECK(d.witness->k >= static_cast<unsigned long>(*v));
      CHECK(d.witness->source_value > d.witness->target_value);
      CHECK(ech_capacity(s, d.witness->k) == d.witness->source_value);
      CHECK(ech_capacity(t, d.witness->k) == d.witness->target_value);
      CHECK(d.witness->target_value == ech_capacity(t, BigInt(static_cast<unsigned long>(*v))));
    }
  }
  CHECK(yes > 5);
  CHECK(no > 5);
}

TEST_CASE("volume necessity and target monotonicity") {
  std::mt19937_64 rng(14);
  int decided = 0;
  for (int i = 0; i < 500; ++i) {
    const Ellipsoid s(random_rat(rng, 5, 5), random_rat(rng, 5, 5));
    const Ellipsoid t(random_rat(rng, 6, 5), random_rat(rng, 6, 5));
    const auto d = embeds(s, t);
    if (d.embeds) CHECK(s.volume() <= t.volume());
    ++decided;
    if (i < 200 && d.embeds) {
      const Ellipsoid bigger(t.a + random_rat(rng, 2, 5), t.b + random_rat(rng, 2, 5));
      CHECK(embeds(s, bigger).embeds);
    }
  }
  CHECK(decided == 500);
}

TEST_CASE("capacity_ratio") {
  const auto r = capacity_ratio(rat(2), rat(1), 10);
  CHECK(r.ratio == rat(2));
  CHECK(r.k == 2);
  const auto one = capacity_ratio(rat(1), rat(1), 57);
  CHECK(one.ratio == rat(1));
  CHECK(one.k == 1);
  CHECK(capacity_ratio(rat(4), rat(1), 100).ratio == rat(2));
  CHECK_THROWS_AS(capacity_ratio(rat(4), rat(1), 0), DomainError);
  // brute force
  const auto a = oracle::capacities(rat(1), rat(7, 3), 300);
  const auto b = oracle::capacities(rat(1), rat(3, 2), 300);
  Rational best = a[1] / b[1];
  for (std::size_t k = 1; k <= 300; ++k) best = std::max(best, a[k] / b[k]);
  CHECK(capacity_ratio(rat(7, 3), rat(3, 2), 300).ratio == best);
}

TEST_CASE("count_constant_range") {
  for (std::int64_t A = 1; A <= 9; ++A) {
    for (std::int64_t B = 1; B <= 9; ++B) {
      if (gcd64(A, B) != 1) continue;
      const std::int64_t P = A * B;
      std::int64_t lo = 0, hi = 0;
      for (std::int64_t s = 0; s < 3 * P; ++s) {
        // 2AB L(s) - s^2 - s(A + B + 1)
        const std::int64_t v = 2 * P * oracle::lattice(A, B, s) - s * s - s * (A + B + 1);
        if (s == 0 || v < lo) lo = v;
        if (s == 0 || v > hi) hi = v;
      }
      const auto r = count_constant_range(A, B);
      CHECK(r.min2ab == lo);
      CHECK(r.max2ab == hi);
    }
  }
  CHECK_THROWS_AS(count_constant_range(2, 4), NotCoprime);
}

TEST_CASE("c_fun examples") {
  const auto one = c_fun(rat(1), rat(1), 100);
  CHECK(one.exact);
  CHECK(one.lower == QuadraticNumber(rat(1)));
  CHECK(one.upper == QuadraticNumber(rat(1)));

  const auto vol = c_fun(rat(9), rat(1), 100000);
  CHECK(vol.lower <= QuadraticNumber(rat(3)));
  CHECK(QuadraticNumber(rat(3)) <= vol.upper);
  CHECK(within(vol, rat(1, 100)));

  const auto plateau = c_fun(rat(3), rat(3, 2), 10000);
  CHECK(plateau.lower == QuadraticNumber(rat(3, 2)));
  CHECK(plateau.attained_k.has_value());
  CHECK(within(plateau, rat(1, 100)));

  const auto four = c_fun(rat(4), StairParams(1, 1), 10000);
  CHECK(four.exact);
  CHECK(four.lower == QuadraticNumber(rat(2)));

  CHECK_THROWS_AS(c_fun(rat(1, 2), rat(1), 10), OutOfDomain);
  CHECK_THROWS_AS(c_fun(rat(2), rat(0), 10), NonPositiveInput);
}

TEST_CASE("c_fun brackets the closed form") {
  for (const StairParams P : {StairParams(1, 1), StairParams(2, 1), StairParams(3, 2)}) {
    for (const Rational& a : staircase_samples(P, 12)) {
      const auto r = c_fun(a, P, 20000);
      const QuadraticNumber c(c_closed_form(a, P));
      CHECK(r.lower <= c);
      CHECK(c <= r.upper);
      CHECK(QuadraticNumber::sqrt(a * rat(P.l, P.k)) <= r.lower);
    }
  }
}

TEST_CASE("c_fun interval shrinks with K") {
  QuadraticNumber prev_width(rat(1000));
  for (std::uint64_t K : {1000u, 10000u, 100000u}) {
    CFunOptions o;
    o.certificate = false;
    const auto r = c_fun(rat(10), rat(1), K, o);
    const QuadraticNumber w = r.upper - r.lower;
    CHECK(w <= prev_width);
    prev_width = w;
  }
}

TEST_CASE("staircase_table") {
  const auto rows = staircase_table({3, 2}, {rat(2)}, 10000);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].closed_form == rat(4, 3));
  CHECK(rows[0].oracle.lower == QuadraticNumber(rat(4, 3)));
  CHECK(rows[0].inside);
  const auto unit = staircase_table({1, 1}, {rat(1)}, 1000);
  CHECK(unit[0].closed_form == rat(1));
  CHECK(unit[0].oracle.lower == QuadraticNumber(rat(1)));
  CHECK(unit[0].oracle.upper == QuadraticNumber(rat(1)));
  CHECK(unit[0].volume == QuadraticNumber(rat(1)));
  const auto pell = staircase_table({2, 1}, {rat(3)}, 10000);
  CHECK(pell[0].closed_form == rat(3, 2));
  CHECK(pell[0].volume == QuadraticNumber::sqrt(rat(3, 2)));
  CHECK(pell[0].volume < QuadraticNumber(pell[0].closed_form));
  CHECK_THROWS_AS(staircase_table({1, 1}, {rat(7)}, 100), OutOfDomain);

  const auto samples = staircase_samples({3, 2}, 200);
  CHECK(samples.size() >= 200);
  CHECK(std::is_sorted(samples.begin(), samples.end()));
  CHECK(samples.front() == rat(1));
  for (const Rational& a : {rat(2), rat(3), rat(7, 2), rat(8, 3), rat(27, 8)}) {
    CHECK(std::binary_search(samples.begin(), samples.end(), a));
  }
}
