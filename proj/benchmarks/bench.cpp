#include <benchmark/benchmark.h>

#include "echlat/capacities.hpp"
#include "echlat/dedekind.hpp"
#include "echlat/embed.hpp"
#include "echlat/lattice.hpp"
#include "echlat/staircase.hpp"

using namespace echlat;

namespace {

Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(big(p), big(q)); }

void BM_LatticeCount(benchmark::State& state) {
  const BigInt e(1234577), f(987653);
  const BigInt n = BigInt(1) << static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_count(e, f, n));
}
BENCHMARK(BM_LatticeCount)->Arg(32)->Arg(64)->Arg(128);

void BM_EchCapacity(benchmark::State& state) {
  const Ellipsoid e(rat(1), rat(27, 8));
  const BigInt k(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ech_capacity(e, k));
}
BENCHMARK(BM_EchCapacity)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_CapacityPrefix(benchmark::State& state) {
  for (auto _ : state) {
    CapacitySeq seq(Ellipsoid(rat(1), rat(13, 6)));
    benchmark::DoNotOptimize(seq.scaled_prefix(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_CapacityPrefix)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_EhrhartQuasipoly(benchmark::State& state) {
  // descent solution (11, 7) for (3, 2)
  const Triangle tri(rat(7, 33), rat(11, 14));
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_quasipoly(tri));
}
BENCHMARK(BM_EhrhartQuasipoly)->Unit(benchmark::kMillisecond);

void BM_Embeds(benchmark::State& state) {
  const Ellipsoid source(rat(1), rat(7, 2));
  const Ellipsoid target(rat(14, 9), rat(7, 3));
  for (auto _ : state) benchmark::DoNotOptimize(embeds(source, target));
}
BENCHMARK(BM_Embeds)->Unit(benchmark::kMillisecond);

void BM_FdSumTable(benchmark::State& state) {
  const auto b = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fd_sum_table(3, 1, b));
}
BENCHMARK(BM_FdSumTable)->Arg(31)->Arg(211)->Unit(benchmark::kMillisecond);

void BM_PeriodScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(period_collapse_scan({2, 1}, state.range(0)));
}
BENCHMARK(BM_PeriodScan)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
