#include "echlat/lattice.hpp"

#include <limits>
#include <vector>

#include "echlat/error.hpp"

namespace echlat {

namespace detail {

namespace {

template <typename Int>
Int floor_sum_impl(Int n, Int m, Int a, Int b) {
  Int ans = 0;
  while (true) {
    if (a >= m) {
      ans += (n - 1) * n / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    const Int y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    Int t = m;
    m = a;
    a = t;
  }
  return ans;
}

}  // namespace

i128 floor_sum(i128 n, i128 m, i128 a, i128 b) { return floor_sum_impl<i128>(n, m, a, b); }

BigInt floor_sum(BigInt n, BigInt m, BigInt a, BigInt b) {
  BigInt ans = 0;
  while (true) {
    if (a >= m) {
      ans += (n - 1) * n / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    const BigInt y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    swap(m, a);
  }
  return ans;
}

}  // namespace detail

namespace {

constexpr i128 kFastLimit = static_cast<i128>(1) << 60;

i128 lattice_count_fast(i128 e, i128 f, i128 n) {
  const i128 cols = n / e;
  return detail::floor_sum(cols + 1, f, e, n - e * cols) + cols + 1;
}

void require_coefficients(const BigInt& e, const BigInt& f, const BigInt& n) {
  if (e < 1 || f < 1) throw DomainError("lattice_count needs positive coefficients");
  if (sgn(n) < 0) throw DomainError("lattice_count needs n >= 0");
}

}  // namespace

BigInt lattice_count(const BigInt& e, const BigInt& f, const BigInt& n) {
  require_coefficients(e, f, n);
  const auto e128 = to_i128(e);
  const auto f128 = to_i128(f);
  const auto n128 = to_i128(n);
  if (e128 && f128 && n128 && *e128 < kFastLimit && *f128 < kFastLimit && *n128 < kFastLimit) {
    return big128(lattice_count_fast(*e128, *f128, *n128));
  }
  const BigInt cols = n / e;
  return detail::floor_sum(cols + 1, f, e, n - e * cols) + cols + 1;
}

BigInt lattice_count_by_rows(const BigInt& e, const BigInt& f, const BigInt& n) {
  require_coefficients(e, f, n);
  // iterate along the axis with fewer lattice lines
  const BigInt& step = e >= f ? e : f;
  const BigInt& other = e >= f ? f : e;
  BigInt total = 0;
  for (BigInt x = 0; step * x <= n; ++x) total += (n - step * x) / other + 1;
  return total;
}

Triangle::Triangle(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.sign() <= 0 || v_.sign() <= 0) throw NonPositiveInput("triangle intercepts must be positive");
  // m/v + n/u <= t with u = alpha/beta, v = gamma/delta
  const BigInt& alpha = u_.num();
  const BigInt& beta = u_.den();
  const BigInt& gamma = v_.num();
  const BigInt& delta = v_.den();
  const BigInt xc = delta * alpha;
  const BigInt yc = beta * gamma;
  const BigInt g = gcd(xc, yc);
  x_coeff_ = xc / g;
  y_coeff_ = yc / g;
  const BigInt rhs = alpha * gamma;
  const BigInt h = gcd(rhs, g);
  rhs_num_ = rhs / h;
  rhs_den_ = g / h;
}

BigInt triangle_count(const Triangle& tri, const BigInt& t) {
  if (sgn(t) < 0) throw DomainError("triangle_count needs t >= 0");
  return lattice_count(tri.x_coeff(), tri.y_coeff(), (t * tri.rhs_num()) / tri.rhs_den());
}

QuasiPolynomial ehrhart_quasipoly(const Triangle& tri) {
  const BigInt dbig = tri.denominator();
  if (dbig > BigInt(1UL << 28)) throw DomainError("triangle denominator too large for interpolation");
  const std::uint64_t D = dbig.get_ui();
  const std::uint64_t samples = 3 * D + 1;

  std::vector<BigInt> counts(samples);
  const auto e = to_i128(tri.x_coeff());
  const auto f = to_i128(tri.y_coeff());
  const auto rn = to_i128(tri.rhs_num());
  const auto rd = to_i128(tri.rhs_den());
  const bool fast = e && f && rn && rd && *e < kFastLimit && *f < kFastLimit &&
                    *rn < kFastLimit / static_cast<i128>(samples);
  for (std::uint64_t t = 0; t < samples; ++t) {
    if (fast) {
      counts[t] = big128(lattice_count_fast(*e, *f, static_cast<i128>(t) * *rn / *rd));
    } else {
      counts[t] = triangle_count(tri, BigInt(static_cast<unsigned long>(t)));
    }
  }

  // Newton form through (t0, t0+D, t0+2D); numerators share the denominator 2D^2.
  const BigInt Db(static_cast<unsigned long>(D));
  const BigInt den = 2 * Db * Db;
  std::vector<QuasiPolynomial::Coeffs> classes(D);
  std::vector<std::array<BigInt, 3>> numerators(D);
  for (std::uint64_t r = 0; r < D; ++r) {
    const std::uint64_t t0 = r == 0 ? D : r;
    const BigInt& y0 = counts[t0];
    const BigInt& y1 = counts[t0 + D];
    const BigInt& y2 = counts[t0 + 2 * D];
    const BigInt tb(static_cast<unsigned long>(t0));
    const BigInt n2 = y2 - 2 * y1 + y0;
    const BigInt n1 = 2 * Db * (y1 - y0) - n2 * (2 * tb + Db);
    const BigInt n0 = den * y0 - n1 * tb - n2 * tb * tb;
    numerators[r] = {n0, n1, n2};
    classes[r] = {Rational(n0, den), Rational(n1, den), Rational(n2, den)};
  }

  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto& n = numerators[t % D];
    const BigInt tb(static_cast<unsigned long>(t));
    if (n[0] + tb * (n[1] + tb * n[2]) != den * counts[t]) {
      throw InternalVerificationFailure("Ehrhart interpolation does not reproduce the count at t = " +
                                        std::to_string(t));
    }
  }
  return QuasiPolynomial(2, D, std::move(classes));
}

bool ehrhart_equivalent(const Triangle& a, const Triangle& b) { return ehrhart_quasipoly(a) == ehrhart_quasipoly(b); }

}  // namespace echlat
