#include <benchmark/benchmark.h>

#include "kpave/constructions.hpp"
#include "kpave/gf2.hpp"
#include "kpave/loose.hpp"
#include "kpave/random_matroids.hpp"
#include "kpave/search.hpp"

namespace {

using namespace kpave;

// Syndrome BFS on the loose element of the extremal construction.
void BM_BinaryLocalGirth(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto ext = extremal_k_loose(r, 2);
  for (auto _ : state) {
    const GirthEngine engine(ext.matroid);
    benchmark::DoNotOptimize(engine.local_girth(ext.loose_element));
  }
  state.SetLabel("n=" + std::to_string(ext.matroid.size()));
}
BENCHMARK(BM_BinaryLocalGirth)->DenseRange(8, 16, 4);

// Iterative deepening over independent subsets in GF(3).
void BM_TernaryLocalGirth(benchmark::State& state) {
  random::Rng rng(1);
  const int r = static_cast<int>(state.range(0));
  const auto m = random::random_simple_coloop_free(make_field(3), r, r + 8, rng);
  for (auto _ : state) {
    const GirthEngine engine(m);
    benchmark::DoNotOptimize(engine.local_girth(0));
  }
}
BENCHMARK(BM_TernaryLocalGirth)->DenseRange(4, 8, 2);

void BM_PackedRank(benchmark::State& state) {
  random::Rng rng(2);
  const int rows = static_cast<int>(state.range(0));
  const int cols = 4 * rows;
  gf2::BitMatrix base(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) base.set(i, j, (rng() & 1U) != 0);
  for (auto _ : state) {
    gf2::BitMatrix m = base;
    benchmark::DoNotOptimize(m.eliminate());
  }
}
BENCHMARK(BM_PackedRank)->RangeMultiplier(2)->Range(32, 512);

void BM_FeasibilityPush(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  FeasibilityState fs(make_field(2), r, 2);
  std::uint32_t unit = 1;
  for (int i = 0; i < r; ++i, unit <<= 1) fs.push(unit);
  const std::uint32_t v = (1U << r) - 1;
  for (auto _ : state) {
    fs.push(v);
    fs.pop();
  }
}
BENCHMARK(BM_FeasibilityPush)->DenseRange(8, 16, 4);

void BM_MaxSizeSearch(benchmark::State& state) {
  SearchConfig cfg;
  cfg.r = static_cast<int>(state.range(0));
  cfg.k = 3;
  for (auto _ : state) benchmark::DoNotOptimize(max_kpaving_size(cfg).best_size);
}
BENCHMARK(BM_MaxSizeSearch)->DenseRange(7, 9, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
