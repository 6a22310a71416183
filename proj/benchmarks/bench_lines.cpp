#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "orchard/generators.hpp"
#include "orchard/rich_lines.hpp"

namespace {

orchard::PointSet random_points(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  std::vector<orchard::ProjPoint> pts;
  while (pts.size() < n) {
    auto p = orchard::mk_point(coord(rng), coord(rng));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return orchard::PointSet(std::move(pts));
}

void BM_SpannedLinesRandom(benchmark::State& state) {
  const auto set = random_points(static_cast<std::size_t>(state.range(0)), 7);
  const orchard::EnumerationOptions opts{static_cast<unsigned>(state.range(1)), false};
  for (auto _ : state) benchmark::DoNotOptimize(orchard::spanned_lines(set, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpannedLinesRandom)->Args({250, 1})->Args({500, 1})->Args({1000, 1})->Args({1000, 0});

void BM_SpannedLinesBignum(benchmark::State& state) {
  const auto set = random_points(static_cast<std::size_t>(state.range(0)), 7);
  const orchard::EnumerationOptions opts{1, true};
  for (auto _ : state) benchmark::DoNotOptimize(orchard::spanned_lines(set, opts));
}
BENCHMARK(BM_SpannedLinesBignum)->Arg(250)->Arg(500);

void BM_TripleLinesCubicPower(benchmark::State& state) {
  const auto set = orchard::gen_cubic_power(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto table = orchard::spanned_lines(set);
    benchmark::DoNotOptimize(orchard::k_rich_count(table, 3, orchard::RichMode::at_least));
  }
}
BENCHMARK(BM_TripleLinesCubicPower)->Arg(50)->Arg(200);

void BM_TripartiteParallelAps(benchmark::State& state) {
  const auto set = orchard::gen_parallel_aps(static_cast<int>(state.range(0)));
  const auto pattern = orchard::parse_pattern("123");
  for (auto _ : state) benchmark::DoNotOptimize(orchard::tripartite_count(set, pattern));
}
BENCHMARK(BM_TripartiteParallelAps)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
