#include "sc2/corpus.hpp"
#include "sc2/cyclic.hpp"
#include "sc2/decide.hpp"
#include "sc2/matroid.hpp"
#include "sc2/obstructions.hpp"
#include "sc2/realize.hpp"
#include "sc2/splitting.hpp"

#include <benchmark/benchmark.h>

using namespace sc2;

namespace {

DecideOptions asserted() {
  DecideOptions o;
  o.simply_connected_asserted = true;
  return o;
}

void BM_DualMatroidGrid(benchmark::State& state) {
  auto c = grid_complex(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dual_matroid(c));
  state.counters["faces"] = static_cast<double>(c.num_faces());
}
BENCHMARK(BM_DualMatroidGrid)->DenseRange(1, 6);

void BM_SplitComplexRandom(benchmark::State& state) {
  std::vector<Complex2> cs;
  for (std::uint32_t s = 1; s <= 20; ++s) cs.push_back(random_complex(s, 12));
  for (auto _ : state)
    for (const auto& c : cs) benchmark::DoNotOptimize(split_complex(c));
}
BENCHMARK(BM_SplitComplexRandom);

void BM_RealizeGrid(benchmark::State& state) {
  auto m = dual_matroid(grid_complex(static_cast<int>(state.range(0)), 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(realize_graph(m, RealizeMode::First));
}
BENCHMARK(BM_RealizeGrid)->DenseRange(1, 6);

void BM_DecideGrid(benchmark::State& state) {
  auto c = grid_complex(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decide_embeddability(c, asserted()));
}
BENCHMARK(BM_DecideGrid)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DecideAn(benchmark::State& state) {
  auto c = generate_An(static_cast<int>(state.range(0)), AnMode::Adjusted);
  for (auto _ : state) benchmark::DoNotOptimize(decide_embeddability(c, asserted()));
}
BENCHMARK(BM_DecideAn)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ConstraintsMn(benchmark::State& state) {
  auto cm = make_Mn_with_constraints(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(constraints_satisfiable(cm));
}
BENCHMARK(BM_ConstraintsMn)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_ImprovingLemma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_improving_lemma(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ImprovingLemma)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another
// compiler release, so the entry point is defined here.
BENCHMARK_MAIN();
