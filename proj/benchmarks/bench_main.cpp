#include <benchmark/benchmark.h>

#include "idca/idempotency.hpp"
#include "idca/order.hpp"
#include "idca/shiftspace.hpp"

namespace {

using namespace idca;

PatternCA zero_pattern_ca(std::int64_t lo, std::int64_t hi) {
  const GroupSubset domain = GroupSubset::integer_range(lo, hi);
  return PatternCA(Pattern::constant(domain, 0, Alphabet(2)), 1);
}

void BM_StarComposition(benchmark::State& state) {
  const PatternCA ca = zero_pattern_ca(-state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(star(ca.rule(), ca.rule()));
}
BENCHMARK(BM_StarComposition)->DenseRange(1, 4);

void BM_IdempotentByComposition(benchmark::State& state) {
  const PatternCA ca = zero_pattern_ca(-state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_idempotent_by_composition(ca.rule()));
}
BENCHMARK(BM_IdempotentByComposition)->DenseRange(1, 4);

void BM_WitnessSearch(benchmark::State& state) {
  const GroupSubset domain = GroupSubset::integer_range(-2, 2);
  const PatternCA ca(Pattern(domain, {0, 0, 0, 0, 1}, Alphabet(2)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(ca));
}
BENCHMARK(BM_WitnessSearch);

void BM_ClassifyDomain(benchmark::State& state) {
  const GroupSubset domain = GroupSubset::integer_range(-3, 3);
  ClassifyOptions opts;
  opts.crosscheck = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_domain(domain, Alphabet(2), opts, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_ClassifyDomain)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CountWords(benchmark::State& state) {
  const Pattern golden(GroupSubset::integer_range(0, 1), {1, 1}, Alphabet(2));
  const DeBruijnGraph graph = build_graph(golden);
  for (auto _ : state) benchmark::DoNotOptimize(count_words(graph, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountWords)->Arg(20)->Arg(80);

void BM_Entropy(benchmark::State& state) {
  const Pattern p = Pattern::constant(GroupSubset::integer_range(0, state.range(0) - 1), 0, Alphabet(2));
  const DeBruijnGraph graph = build_graph(p);
  for (auto _ : state) benchmark::DoNotOptimize(entropy(graph));
}
BENCHMARK(BM_Entropy)->Arg(2)->Arg(6)->Arg(10);

void BM_HasseChain(benchmark::State& state) {
  const auto chain = chain_family(Group::integers(), Element::scalar(1), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hasse(chain));
}
BENCHMARK(BM_HasseChain)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
