#include <benchmark/benchmark.h>

#include "patsemi/admission.hpp"
#include "patsemi/variety.hpp"

using namespace patsemi;

namespace {

struct Case {
  NumericalSemigroup s;
  Pattern p;
};

// Sums of members are members, so these are admitted and the whole box is scanned.
Case large_box(std::int64_t which) {
  switch (which) {
    case 0: return {NumericalSemigroup::from_generators({11, 13}), Pattern({1, 1, 1}, 0)};
    case 1: return {NumericalSemigroup::from_generators({17, 19, 23}), Pattern({2, 1, 1}, 0)};
    default: return {NumericalSemigroup::from_generators({9, 31}), Pattern({1, 1, 1}, 0)};
  }
}

void BM_AdmitsParallel(benchmark::State& state) {
  const auto c = large_box(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admits(c.s, c.p));
  state.SetLabel(format_pattern(c.p) + " in " + format_semigroup(c.s));
}

void BM_AdmitsSerial(benchmark::State& state) {
  const auto c = large_box(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admits_serial(c.s, c.p));
  state.SetLabel(format_pattern(c.p) + " in " + format_semigroup(c.s));
}

void BM_ViolatingSequence(benchmark::State& state) {
  const auto c = large_box(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(violating_sequence(c.s, c.p));
}

void tree_bench(benchmark::State& state, bool parallel) {
  TreeOptions opts;
  opts.parallel = parallel;
  opts.max_genus = state.range(0);
  std::size_t nodes = 0;
  for (auto _ : state) nodes = tree_enumerate(med_pattern(4), 4, opts).nodes.size();
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_TreeParallel(benchmark::State& state) { tree_bench(state, true); }
void BM_TreeSerial(benchmark::State& state) { tree_bench(state, false); }

}  // namespace

BENCHMARK(BM_AdmitsParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdmitsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ViolatingSequence)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeParallel)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeSerial)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
