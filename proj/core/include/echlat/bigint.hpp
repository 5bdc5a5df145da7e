#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace echlat {

using BigInt = mpz_class;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

BigInt big(std::int64_t v);
BigInt big128(i128 v);
std::optional<std::int64_t> to_int64(const BigInt& v);
std::optional<i128> to_i128(const BigInt& v);
std::string to_string(i128 v);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);
bool is_perfect_square(const BigInt& v);

// Floor / ceiling division with signed operands, d != 0.
BigInt floor_div(const BigInt& n, const BigInt& d);
BigInt ceil_div(const BigInt& n, const BigInt& d);
BigInt mod_floor(const BigInt& n, const BigInt& d);

// Writes v = square * squarefree with square >= 1. Trial division up to 10^6;
// any cofactor left above that is assumed squarefree unless it is itself a
// perfect square, which is exact for v < 10^18.
struct SquarefreeSplit {
  BigInt root;        // v = root^2 * kernel
  BigInt kernel;
};
SquarefreeSplit squarefree_split(const BigInt& v);

}  // namespace echlat
