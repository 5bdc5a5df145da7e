#include <doctest.h>

#include <random>

#include "echlat/dedekind.hpp"
#include "echlat/error.hpp"
#include "oracles.hpp"

using namespace echlat;

namespace {

Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(big(p), big(q)); }

double num(const FDParams& p) { return fd_sum_numeric(p).to_double(); }

}  // namespace

TEST_CASE("fd_sum_numeric examples") {
  CHECK(num({0, 1, 1, 2}) == doctest::Approx(1.0 / 8).epsilon(1e-15));
  CHECK(num({0, 1, 1, 1}) == 0.0);
  const double pair = num({0, 2, 1, 3}) + num({0, 3, 1, 2});
  CHECK(pair == doctest::Approx(25.0 / 72).epsilon(1e-14));
  CHECK(fd_pair_sum_exact(BigInt(2), BigInt(3), BigInt(0)) == rat(25, 72));
  CHECK_THROWS_AS(fd_sum_numeric({0, 2, 1, 4}), DomainError);
  CHECK_THROWS_AS(fd_sum_numeric({0, 1, 1, 0}), DomainError);
}

TEST_CASE("fd_sum_numeric against the double-precision definition") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t b = static_cast<std::int64_t>(rng() % 30) + 1;
    std::int64_t a1, a2;
    do {
      a1 = static_cast<std::int64_t>(rng() % 61) - 30;
      a2 = static_cast<std::int64_t>(rng() % 61) - 30;
    } while (b > 1 && (gcd64(a1, b) != 1 || gcd64(a2, b) != 1));
    const std::int64_t n = static_cast<std::int64_t>(rng() % 200) - 100;
    const ApproxReal v = fd_sum_numeric({n, a1, a2, b});
    CHECK(v.to_double() == doctest::Approx(oracle::fd_sum(n, a1, a2, b)).epsilon(1e-9).scale(1));
    CHECK(v.imag_residual <= v.error_bound);
  }
}

TEST_CASE("index is reduced mod b") {
  CHECK(num({-1, 2, 3, 5}) == doctest::Approx(num({4, 2, 3, 5})).epsilon(1e-30));
  CHECK(num({12, 2, 3, 5}) == doctest::Approx(num({2, 2, 3, 5})).epsilon(1e-30));
}

TEST_CASE("fd_sum_table matches single sums") {
  const auto table = fd_sum_table(3, 4, 7);
  REQUIRE(table.size() == 7);
  for (std::int64_t n = 0; n < 7; ++n) {
    const Real d = abs(table[static_cast<std::size_t>(n)].value - fd_sum_numeric({n, 3, 4, 7}).value);
    CHECK(d <= fd_tolerance(kDefaultPrecisionBits));
  }
}

TEST_CASE("pair sum formula") {
  // 1 point at n = 0 minus constant 47/72
  CHECK(triangle_count_polynomial(BigInt(2), BigInt(3), BigInt(0)) == rat(47, 72));
  // empty root-of-unity sums for e = f = 1
  CHECK(fd_pair_sum_exact(BigInt(1), BigInt(1), BigInt(0)) == rat(0));
  for (int n = 0; n < 20; ++n) CHECK(fd_pair_sum_exact(BigInt(1), BigInt(1), BigInt(n)) == rat(0));
  for (int n = 0; n < 6; ++n) {
    CHECK(fd_pair_sum_exact(BigInt(2), BigInt(3), BigInt(n + 6)) == fd_pair_sum_exact(BigInt(2), BigInt(3), BigInt(n)));
  }
  CHECK_THROWS_AS(fd_pair_sum_exact(BigInt(2), BigInt(4), BigInt(0)), NotCoprime);
}

TEST_CASE("pair sum equals numeric pair for coprime e, f <= 20") {
  const Real tol(rat(1, 1000000000), kDefaultPrecisionBits);
  for (std::int64_t e = 1; e <= 20; ++e) {
    for (std::int64_t f = 1; f <= 20; ++f) {
      if (gcd64(e, f) != 1) continue;
      const auto tf = fd_sum_table(e, 1, f);
      const auto te = fd_sum_table(f, 1, e);
      for (std::int64_t n = 0; n <= 3 * e * f; ++n) {
        const Real numeric = tf[static_cast<std::size_t>(((-n) % f + f) % f)].value +
                             te[static_cast<std::size_t>(((-n) % e + e) % e)].value;
        const Rational exact = fd_pair_sum_exact(big(e), big(f), big(n));
        REQUIRE(abs(numeric - Real(exact, kDefaultPrecisionBits)) <= tol);
        if (n >= e * f) REQUIRE(exact == fd_pair_sum_exact(big(e), big(f), big(n - e * f)));
      }
    }
  }
}

TEST_CASE("pair formula against brute-force counts for random coprime e, f") {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 50) {
    const std::int64_t e = static_cast<std::int64_t>(rng() % 40) + 1;
    const std::int64_t f = static_cast<std::int64_t>(rng() % 40) + 1;
    if (gcd64(e, f) != 1) continue;
    ++done;
    const std::int64_t n = static_cast<std::int64_t>(rng() % 500);
    const double s = oracle::fd_sum(-n, e, 1, f) + oracle::fd_sum(-n, f, 1, e);
    const double poly = triangle_count_polynomial(big(e), big(f), big(n)).to_double();
    CHECK(static_cast<double>(oracle::lattice(e, f, n)) == doctest::Approx(poly + s).epsilon(1e-9));
  }
}

TEST_CASE("rademacher examples") {
  CHECK(check_rademacher(1, 2, 1, 3));
  CHECK(check_rademacher(1, 1, 1, 1));
  CHECK(rademacher_rhs(1, 1, 1, 1) == rat(0));
  CHECK(check_rademacher(4, 2, 3, 5));
  CHECK(check_rademacher_zero(1, 1, 1));
  CHECK(check_rademacher_zero(2, 1, 3));
  CHECK(fd_pair_sum_exact(BigInt(2), BigInt(3), BigInt(0)) == rademacher_zero_rhs(2, 1, 3));
  CHECK(rademacher_zero_rhs(2, 1, 3) == rat(1) - rat(47, 72));
  CHECK(check_rademacher_zero(3, 4, 5));
  CHECK_THROWS_AS(check_rademacher(0, 2, 3, 5), DomainError);
  CHECK_THROWS_AS(check_rademacher(10, 2, 3, 5), DomainError);
  CHECK_THROWS_AS(check_rademacher(1, 2, 4, 5), DomainError);
}

TEST_CASE("rademacher numeric route matches double-precision sums") {
  // 4; 2, 3, 5: compare the closed form to the direct definition
  const double lhs = oracle::fd_sum(4, 2, 3, 5) + oracle::fd_sum(4, 5, 2, 3) + oracle::fd_sum(4, 3, 5, 2);
  CHECK(lhs == doctest::Approx(rademacher_rhs(4, 2, 3, 5).to_double()).epsilon(1e-12));
}

TEST_CASE("rademacher random cases") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::int64_t a, b, c;
    do {
      a = static_cast<std::int64_t>(rng() % 50) + 1;
      b = static_cast<std::int64_t>(rng() % 50) + 1;
      c = static_cast<std::int64_t>(rng() % 50) + 1;
    } while (gcd64(a, b) != 1 || gcd64(b, c) != 1 || gcd64(a, c) != 1);
    const std::int64_t n = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(a + b + c - 1)) + 1;
    CHECK(check_rademacher(n, a, b, c));
    CHECK(check_rademacher_zero(a, b, c));
  }
}

TEST_CASE("convolution examples") {
  CHECK(check_convolution(1, 1, 2, 3));
  CHECK(check_convolution(1, 2, 3, 1));
  // b | a1 + a2 and bc does not: the sum vanishes
  const auto zero = convolution_sides(1, 2, 3, 2);
  CHECK(zero.rhs.re.to_double() == 0.0);
  CHECK(abs(zero.lhs.re) <= fd_tolerance(kDefaultPrecisionBits));
  CHECK(abs(zero.lhs.im) <= fd_tolerance(kDefaultPrecisionBits));
  CHECK(check_convolution(1, 2, 3, 2));
  // bc | a1 + a2: gamma = c
  CHECK(check_convolution(2, 4, 3, 2));
  CHECK_THROWS_AS(check_convolution(3, 1, 3, 2), DomainError);
  CHECK_THROWS_AS(check_convolution(1, 1, 1, 2), DomainError);
}

TEST_CASE("convolution random cases") {
  std::mt19937_64 rng(8);
  int zeros = 0;
  for (int i = 0; i < 200; ++i) {
    const std::int64_t b = static_cast<std::int64_t>(rng() % 11) + 2;
    const std::int64_t c = static_cast<std::int64_t>(rng() % 12) + 1;
    const std::int64_t a1 = static_cast<std::int64_t>(rng() % 61) - 30;
    const std::int64_t a2 = static_cast<std::int64_t>(rng() % 61) - 30;
    if (a1 % b == 0 || a2 % b == 0) continue;
    if ((a1 + a2) % b == 0 && (a1 + a2) % (b * c) != 0) ++zeros;
    CHECK(check_convolution(a1, a2, b, c));
  }
  CHECK(zeros > 0);
}
