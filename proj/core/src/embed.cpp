#include "echlat/embed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "echlat/error.hpp"
#include "echlat/lattice.hpp"

namespace echlat {

namespace {

struct Scaled {
  Ellipsoid source;
  Ellipsoid target;
  Rational scale;
  Triangle source_tri;
  Triangle target_tri;
};

Scaled scale_to_integral_target(const Ellipsoid& source, const Ellipsoid& target) {
  const Rational lam(lcm(target.a.den(), target.b.den()));
  Ellipsoid s(source.a * lam, source.b * lam);
  Ellipsoid t(target.a * lam, target.b * lam);
  Triangle ts(Rational(1) / s.a, Rational(1) / s.b);
  Triangle tt(Rational(1) / t.a, Rational(1) / t.b);
  return {std::move(s), std::move(t), lam, std::move(ts), std::move(tt)};
}

BigInt eval_quadratic(const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& j) {
  return (A * j + B) * j + C;
}

BigInt first_of(const BigInt& A, const BigInt& B, const BigInt& C, BigInt j, int window, bool& found) {
  for (int i = 0; i <= window; ++i, ++j) {
    if (sgn(eval_quadratic(A, B, C, j)) < 0) {
      found = true;
      return j;
    }
  }
  found = false;
  return j;
}

}  // namespace

std::optional<BigInt> first_negative(const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& j0) {
  if (sgn(eval_quadratic(A, B, C, j0)) < 0) return j0;
  if (sgn(A) == 0) {
    if (sgn(B) >= 0) return std::nullopt;  // nondecreasing from a nonnegative start
    // B j + C < 0 <=> j > C / (-B)
    return std::max(j0, BigInt(floor_div(C, -B) + 1));
  }
  const BigInt disc = B * B - 4 * A * C;
  bool found = false;
  if (sgn(A) > 0) {
    if (sgn(disc) <= 0) return std::nullopt;
    const BigInt sq = isqrt(disc);
    // Strictly below the smaller root (-B - sqrt(disc)) / 2A.
    const BigInt start = std::max(j0, BigInt(floor_div(-B - sq - 1, 2 * A) - 1));
    BigInt j = first_of(A, B, C, start, 8, found);
    if (found) return j;
    return std::nullopt;
  }
  // A < 0: g(j0) >= 0 puts j0 between the roots; the answer is the first integer past the larger root.
  const BigInt absA = -A;
  const BigInt sq = isqrt(disc);
  const BigInt start = std::max(j0, BigInt(floor_div(B + sq, 2 * absA) - 2));
  BigInt j = first_of(A, B, C, start, 10, found);
  if (!found) throw InternalVerificationFailure("first_negative missed the root window");
  return j;
}

EmbedDecision embeds(const Ellipsoid& source, const Ellipsoid& target, const EmbedLimits& limits) {
  const Scaled sc = scale_to_integral_target(source, target);
  const BigInt Ds = sc.source_tri.denominator();
  const BigInt Dt = sc.target_tri.denominator();
  const BigInt Pbig = lcm(Ds, Dt);
  if (Pbig > BigInt(std::to_string(limits.max_period))) {
    throw DomainError("embedding decision needs period " + Pbig.get_str() + ", above the limit " +
                      std::to_string(limits.max_period));
  }
  const QuasiPolynomial qs = ehrhart_quasipoly(sc.source_tri);
  const QuasiPolynomial qt = ehrhart_quasipoly(sc.target_tri);
  const std::uint64_t P = *to_int64(Pbig);
  const Rational Pq(Pbig);

  std::optional<BigInt> best;
  for (std::uint64_t r = 0; r < P; ++r) {
    const auto& cs = qs.coeffs(r);
    const auto& ct = qt.coeffs(r);
    const Rational c0 = cs[0] - ct[0];
    const Rational c1 = cs[1] - ct[1];
    const Rational c2 = cs[2] - ct[2];
    const Rational rq(big(static_cast<std::int64_t>(r)));
    // difference at t = r + j P as a quadratic in j
    const Rational qa = c2 * Pq * Pq;
    const Rational qb = (Rational(2) * c2 * rq + c1) * Pq;
    const Rational qc = (c2 * rq + c1) * rq + c0;
    const BigInt den = lcm(lcm(qa.den(), qb.den()), qc.den());
    const BigInt A = qa.num() * (den / qa.den());
    const BigInt B = qb.num() * (den / qb.den());
    const BigInt C = qc.num() * (den / qc.den());
    const BigInt j0 = r == 0 ? BigInt(1) : BigInt(0);
    auto j = first_negative(A, B, C, j0);
    if (!j) continue;
    BigInt t = big(static_cast<std::int64_t>(r)) + *j * Pbig;
    if (!best || t < *best) best = std::move(t);
  }

  EmbedDecision out;
  if (!best) {
    out.embeds = true;
    return out;
  }
  const BigInt L_tgt = triangle_count(sc.target_tri, *best);
  const BigInt L_src = triangle_count(sc.source_tri, *best);
  if (L_src >= L_tgt) throw InternalVerificationFailure("embedding witness level does not violate the counts");
  EmbedWitness w{*best, sc.scale, L_tgt - 1, Rational(0), Rational(0)};
  w.source_value = ech_capacity(source, w.k);
  w.target_value = ech_capacity(target, w.k);
  if (w.source_value <= w.target_value) {
    throw InternalVerificationFailure("embedding witness capacities are not strictly ordered");
  }
  out.witness = std::move(w);
  return out;
}

namespace {

struct RatioData {
  RatioResult best;
  Rational target_next;  // c_{K+1}(E(1,b))
};

RatioData compute_ratio(const Rational& a, const Rational& b, std::uint64_t K) {
  if (K < 1) throw DomainError("capacity_ratio needs K >= 1");
  CapacitySeq src(Ellipsoid(Rational(1), a));
  CapacitySeq tgt(Ellipsoid(Rational(1), b));
  const auto vs = src.scaled_prefix(K);
  const auto vt = tgt.scaled_prefix(K + 1);
  std::uint64_t best = 1;
  for (std::uint64_t k = 2; k <= K; ++k) {
    // vs[k] / vt[k] > vs[best] / vt[best]
    if (static_cast<i128>(vs[k]) * vt[best] > static_cast<i128>(vs[best]) * vt[k]) best = k;
  }
  RatioData out;
  out.best.k = best;
  out.best.ratio = Rational(vs[best]) * src.unit() / (Rational(vt[best]) * tgt.unit());
  out.target_next = Rational(vt[K + 1]) * tgt.unit();
  return out;
}

void require_cfun_args(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw NonPositiveInput("c_fun needs positive a and b");
  if (a < Rational(1)) throw OutOfDomain("c_fun needs a >= 1, got " + a.to_string());
}

// Exact lower bound for N(1,a;T) and upper bound for #{k : mu c_k(E(1,b)) <= T}
// as quadratics in T, valid for T >= mu c_{K+1}(E(1,b)).
struct TailCheck {
  Rational c2s, c1s, cmin_s, is, us;
  Rational c2t, c1t, cmax_t, it;
  Rational ratio_max;
  Rational target_next;

  bool ok(const Rational& mu) const {
    if (mu < ratio_max) return false;
    const Rational t0 = mu * target_next;
    if (t0 < us) return false;
    const Rational alpha = c2s * is * is - c2t * it * it / (mu * mu);
    if (alpha.sign() <= 0) return false;
    const Rational beta = Rational(-2) * c2s * is + c1s * is - c1t * it / mu;
    const Rational gamma = c2s - c1s + cmin_s - cmax_t;
    const Rational value = (alpha * t0 + beta) * t0 + gamma;
    const Rational slope = Rational(2) * alpha * t0 + beta;
    return value.sign() >= 0 && slope.sign() >= 0;
  }
};

std::optional<TailCheck> make_tail(const Rational& a, const Rational& b, const RatioData& rd, std::uint64_t limit) {
  const ScaledEllipsoid s = scaled(Ellipsoid(Rational(1), a));
  const ScaledEllipsoid t = scaled(Ellipsoid(Rational(1), b));
  const BigInt lim(std::to_string(limit));
  if (s.A * s.B > lim || t.A * t.B > lim) return std::nullopt;
  const auto rs = count_constant_range(*to_int64(s.A), *to_int64(s.B));
  const auto rt = count_constant_range(*to_int64(t.A), *to_int64(t.B));
  auto quad = [](const ScaledEllipsoid& e, Rational& c2, Rational& c1) {
    const Rational A(e.A);
    const Rational B(e.B);
    c2 = Rational(1) / (Rational(2) * A * B);
    c1 = (Rational(1) / A + Rational(1) / B + Rational(1) / (A * B)) / Rational(2);
  };
  TailCheck tc;
  quad(s, tc.c2s, tc.c1s);
  quad(t, tc.c2t, tc.c1t);
  tc.cmin_s = Rational(rs.min2ab, 2 * s.A * s.B);
  tc.cmax_t = Rational(rt.max2ab, 2 * t.A * t.B);
  tc.is = Rational(1) / s.unit;
  tc.us = s.unit;
  tc.it = Rational(1) / t.unit;
  tc.ratio_max = rd.best.ratio;
  tc.target_next = rd.target_next;
  return tc;
}

// sqrt(a/b) / (1 - (1+b)/sqrt(2b(K+2))), rounded up, when the denominator is positive.
std::optional<Rational> sandwich_bound(const Rational& a, const Rational& b, std::uint64_t K) {
  constexpr unsigned bits = 96;
  const Rational ulp = Rational(BigInt(1), BigInt(BigInt(1) << bits));
  const Rational root_up = sqrt_lower(a / b, bits) + ulp;
  const Rational denom_root = sqrt_lower(Rational(2) * b * Rational(big(static_cast<std::int64_t>(K)) + 2), bits);
  if (denom_root.sign() <= 0) return std::nullopt;
  const Rational eps = (Rational(1) + b) / denom_root;
  if (eps >= Rational(1)) return std::nullopt;
  return root_up / (Rational(1) - eps);
}

BigInt period_of(const Ellipsoid& source, const Ellipsoid& target) {
  const Scaled sc = scale_to_integral_target(source, target);
  return lcm(sc.source_tri.denominator(), sc.target_tri.denominator());
}

}  // namespace

RatioResult capacity_ratio(const Rational& a, const Rational& b, std::uint64_t K) {
  if (a.sign() <= 0 || b.sign() <= 0) throw NonPositiveInput("capacity_ratio needs positive a and b");
  return compute_ratio(a, b, K).best;
}

ConstantRange count_constant_range(std::int64_t A, std::int64_t B) {
  if (A < 1 || B < 1 || gcd64(A, B) != 1) throw NotCoprime("count_constant_range needs coprime positive A, B");
  const std::int64_t period = A * B;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(period), 0);
  for (std::int64_t x = 0; x < period; x += A) {
    for (std::int64_t v = x; v < period; v += B) hit[static_cast<std::size_t>(v)] = 1;
  }
  i128 count = 0;
  i128 lo = 0;
  i128 hi = 0;
  const i128 two_ab = 2 * static_cast<i128>(period);
  for (std::int64_t s = 0; s < period; ++s) {
    count += hit[static_cast<std::size_t>(s)];
    const i128 si = s;
    const i128 v = two_ab * count - si * si - static_cast<i128>(A + B + 1) * si;
    if (s == 0 || v < lo) lo = v;
    if (s == 0 || v > hi) hi = v;
  }
  return {big128(lo), big128(hi)};
}

CFunResult c_fun(const Rational& a, const Rational& b, std::uint64_t K, const CFunOptions& opts) {
  require_cfun_args(a, b);
  const RatioData rd = compute_ratio(a, b, K);
  const QuadraticNumber vol = QuadraticNumber::sqrt(a / b);

  CFunResult res;
  if (quad_compare(QuadraticNumber(rd.best.ratio), vol) >= 0) {
    res.lower = rd.best.ratio;
    res.attained_k = rd.best.k;
  } else {
    res.lower = vol;
  }
  const auto lower_rat = res.lower.as_rational();

  // E(1,a) sits inside E(mu, b mu) once mu >= max(1, a/b).
  Rational upper = max(Rational(1), a / b);
  auto finish = [&](const QuadraticNumber& up) {
    res.upper = quad_compare(up, res.lower) < 0 ? res.lower : up;
    res.exact = res.upper == res.lower;
    return res;
  };

  const auto tail = make_tail(a, b, rd, opts.tail_period);
  if (lower_rat && tail && tail->ok(*lower_rat)) return finish(res.lower);

  if (lower_rat && opts.certificate) {
    const Ellipsoid src(Rational(1), a);
    const Ellipsoid tgt(*lower_rat, b * *lower_rat);
    if (period_of(src, tgt) <= BigInt(std::to_string(opts.certificate_period))) {
      if (embeds(src, tgt, {opts.certificate_period}).embeds) return finish(res.lower);
    }
  }

  if (auto s = sandwich_bound(a, b, K)) upper = min(upper, max(*s, rd.best.ratio));

  if (tail) {
    Rational lo = max(rd.best.ratio, sqrt_lower(a / b, 64));
    Rational hi = upper;
    if (tail->ok(hi)) {
      for (int i = 0; i < opts.bisection_steps; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        if (tail->ok(mid)) {
          hi = std::move(mid);
        } else {
          lo = std::move(mid);
        }
      }
      upper = min(upper, hi);
    }
  }
  return finish(upper);
}

CFunResult c_fun(const Rational& a, const StairParams& P, std::uint64_t K, const CFunOptions& opts) {
  return c_fun(a, P.ratio(), K, opts);
}

std::vector<StaircaseRow> staircase_table(const StairParams& P, const std::vector<Rational>& samples,
                                          std::uint64_t K, const CFunOptions& opts) {
  P.require_triplet();
  std::vector<StaircaseRow> rows;
  rows.reserve(samples.size());
  const Rational inv(big(P.l), big(P.k));
  for (const auto& a : samples) {
    StaircaseRow row;
    row.a = a;
    row.closed_form = c_closed_form(a, P);
    row.oracle = c_fun(a, P, K, opts);
    row.volume = QuadraticNumber::sqrt(a * inv);
    const QuadraticNumber cf(row.closed_form);
    row.inside = quad_compare(row.oracle.lower, cf) <= 0 && quad_compare(cf, row.oracle.upper) <= 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> staircase_samples(const StairParams& P, std::size_t count) {
  const QuadraticNumber ph = phi(P);
  const double span = ph.to_double() - 1.0;
  const auto half = static_cast<std::int64_t>(std::ceil(static_cast<double>(std::max<std::size_t>(count, 1)) / (2.0 * span)));
  const std::int64_t s = 2 * std::max<std::int64_t>(1, half);
  std::vector<Rational> out;
  for (std::int64_t j = s;; ++j) {
    Rational a(big(j), big(s));
    if (quad_compare(QuadraticNumber(a), ph) > 0) break;
    out.push_back(std::move(a));
  }
  // Breakpoints whose exact certificates stay small.
  const auto steps = stair_points(P, 12);
  for (const auto& st : steps) {
    for (const Rational& x : {st.a, st.b}) {
      if (x.den() <= 400 && quad_compare(QuadraticNumber(x), ph) <= 0) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace echlat
