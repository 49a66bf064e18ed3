#include <benchmark/benchmark.h>

#include "twistcong/enumeration.hpp"
#include "twistcong/fcmatrix.hpp"
#include "twistcong/lattice.hpp"
#include "twistcong/oracle.hpp"
#include "twistcong/partition.hpp"

#include <random>

using namespace twistcong;

static void BM_DiagramMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(12345);
  auto pool = all_diagrams(3);
  // widen degree by stacking identity tails onto degree-3 diagrams
  std::vector<Partition> ps;
  for (const auto& p : pool) {
    std::vector<std::vector<int>> blocks = p.blocks;
    for (int k = 4; k <= n; ++k) blocks.push_back({k, -k});
    ps.push_back(make_partition(n, blocks));
  }
  std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
  for (auto _ : state) {
    auto r = multiply(ps[pick(rng)], ps[pick(rng)]);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_DiagramMultiply)->Arg(6)->Arg(9);

static void BM_CongruenceClosure(benchmark::State& state) {
  auto m = build_monoid(2, 1);
  std::vector<std::pair<int, int>> seed = {{0, 1}};
  for (auto _ : state) {
    auto c = congruence_closure(m, seed);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CongruenceClosure);

static void BM_EnumerateMatrices(benchmark::State& state) {
  for (auto _ : state) {
    auto v = enumerate_fc(3, 3);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EnumerateMatrices);

static void BM_CountClosed(benchmark::State& state) {
  for (auto _ : state) {
    auto v = count_closed(10, 10);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CountClosed);

static void BM_MatrixJoin(benchmark::State& state) {
  auto all = enumerate_fc(2, 2);
  std::mt19937 rng(99);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (auto _ : state) {
    auto j = fc_join(all[pick(rng)], all[pick(rng)]);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_MatrixJoin);

BENCHMARK_MAIN();
