#include "echlat/bigint.hpp"

#include <algorithm>
#include <cstdlib>

namespace echlat {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt big128(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

std::optional<i128> to_i128(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return std::nullopt;
  BigInt a = abs(v);
  BigInt hi = a >> 64;
  BigInt lo = a - (hi << 64);
  u128 u = (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
  i128 r = static_cast<i128>(u);
  return sgn(v) < 0 ? -r : r;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& v) { return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& n, const BigInt& d) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

SquarefreeSplit squarefree_split(const BigInt& v) {
  SquarefreeSplit out{BigInt(1), BigInt(1)};
  if (sgn(v) == 0) return {BigInt(0), BigInt(0)};
  BigInt rest = abs(v);
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) out.root *= p;
    if (e % 2 == 1) out.kernel *= p;
  };
  strip(2);
  for (unsigned long p = 3; p <= 1000000UL; p += 2) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    strip(p);
  }
  if (rest != 1) {
    if (is_perfect_square(rest)) {
      out.root *= isqrt(rest);
    } else {
      out.kernel *= rest;
    }
  }
  return out;
}

}  // namespace echlat
