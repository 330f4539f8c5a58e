// Serial reference against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "tiltlab/bijectlab.hpp"
#include "tiltlab/oracle.hpp"

using namespace tiltlab;

namespace {

const char* const kTags[] = {"A4", "D4", "A5", "D5"};

Exec mode(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) {
  state.SetLabel(std::string(kTags[state.range(0)]) + " " + exec_name(mode(state)));
}

void BM_CensusBuild(benchmark::State& state) {
  const auto q = family_quiver(kTags[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(Census::build(q, 3, mode(state)).size());
  label(state);
}

void BM_EnumerateSupportTilting(benchmark::State& state) {
  const auto c = Census::build(family_quiver(kTags[state.range(0)]), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_set(c, SetKind::support_tilting, mode(state)).size());
  label(state);
}

void BM_VerifyBijections(benchmark::State& state) {
  const auto c = Census::build(family_quiver(kTags[state.range(0)]), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijections(c, mode(state)).passed());
  label(state);
}

void BM_OracleTorsion(benchmark::State& state) {
  const auto c = Census::build(family_quiver(kTags[state.range(0)]), 2);
  ClosureSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(all_closed_classes(c, spec, mode(state)).size());
  label(state);
}

}  // namespace

BENCHMARK(BM_CensusBuild)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSupportTilting)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBijections)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleTorsion)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
