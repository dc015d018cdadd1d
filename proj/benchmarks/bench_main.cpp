#include <benchmark/benchmark.h>

#include "crownforge/chief.hpp"
#include "crownforge/constructions.hpp"
#include "crownforge/generation.hpp"
#include "crownforge/group_io.hpp"

using namespace crownforge;

static void BM_ChainSym(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = builtin_group("Sym(" + std::to_string(n) + ")");
  for (auto _ : state) {
    PermGroup h(g.degree(), g.generators());
    benchmark::DoNotOptimize(h.order());
  }
}
BENCHMARK(BM_ChainSym)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_IteratedWreathC2(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const GroupSequence seq(std::vector<PermGroup>(m, builtin_group("Cyclic(2)")));
  for (auto _ : state) benchmark::DoNotOptimize(iterated_wreath(seq, m).order());
}
BENCHMARK(BM_IteratedWreathC2)->DenseRange(3, 7);

static void BM_ExactProbability(benchmark::State& state) {
  const auto g = builtin_group(state.range(0) == 5 ? "Alt(5)" : "Alt(6)");
  for (auto _ : state) benchmark::DoNotOptimize(exact_gen_probability(g, 2).value);
}
BENCHMARK(BM_ExactProbability)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
  const auto g = builtin_group("Alt(4)");
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mc_gen_probability(g, 2, 10000, seed++).point);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

static void BM_ChiefSeriesS3WrC3(benchmark::State& state) {
  const auto w = wreath_product(builtin_group("Sym(3)"), builtin_group("Cyclic(3)"));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(chief_series(w, {}, seed++).factors.size());
}
BENCHMARK(BM_ChiefSeriesS3WrC3)->Unit(benchmark::kMillisecond);

static void BM_DBoundsCrownPower(benchmark::State& state) {
  const auto a5 = builtin_group("Alt(5)");
  const auto p = crown_based_power(a5, a5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(d_bounds(p, 1, 1000000).upper);
}
BENCHMARK(BM_DBoundsCrownPower)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond)->Iterations(1);
