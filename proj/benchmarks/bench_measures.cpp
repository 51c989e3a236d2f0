#include <benchmark/benchmark.h>

#include "fockent/asymptotics.hpp"
#include "fockent/measures.hpp"
#include "fockent/parser.hpp"

using namespace fockent;

namespace {

FockState split_single() {
  return FockState(Statistics::boson, 2, {{{0, 1}, 1.0}, {{1, 0}, 1.0}});
}

std::pair<FockState, ModePartition> composed_singles(int n) {
  FockState current = split_single();
  ModePartition partition{1, 1};
  for (int i = 1; i < n; ++i) {
    auto [next, joined] =
        compose(current, split_single(), partition, ModePartition{1, 1});
    current = std::move(next);
    partition = joined;
  }
  return {std::move(current), partition};
}

}  // namespace

static void BM_ComposeSingles(benchmark::State& state) {
  const int copies = int(state.range(0));
  for (auto _ : state) {
    auto composed = composed_singles(copies);
    benchmark::DoNotOptimize(composed);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComposeSingles)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void BM_ModeEntanglement(benchmark::State& state) {
  auto [composed, partition] = composed_singles(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mode_entanglement(composed, partition));
  }
}
BENCHMARK(BM_ModeEntanglement)->RangeMultiplier(2)->Range(2, 16);

static void BM_ParticleEntanglement(benchmark::State& state) {
  auto [composed, partition] = composed_singles(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(particle_entanglement(composed, partition));
  }
}
BENCHMARK(BM_ParticleEntanglement)->RangeMultiplier(2)->Range(2, 16);

static void BM_SplitSinglesExact(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ep_split_singles_exact(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SplitSinglesExact)
    ->RangeMultiplier(4)
    ->Range(16, 4096)
    ->Complexity();

static void BM_OneBodyEntropy(benchmark::State& state) {
  auto [composed, partition] = composed_singles(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(single_particle_entropy(composed));
  }
}
BENCHMARK(BM_OneBodyEntropy);

static void BM_ParseReference(benchmark::State& state) {
  const std::string text = "(|0,1>+|1,0>)^4+2*sqrt(2)(|0,1>+|1,0>)^4";
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_state(text, Statistics::boson));
  }
}
BENCHMARK(BM_ParseReference);

BENCHMARK_MAIN();
