// Parallel kernels against their serial reference paths.

#include <benchmark/benchmark.h>

#include "qmarkoff/cyclotomic.hpp"
#include "qmarkoff/identities.hpp"
#include "qmarkoff/search.hpp"

using namespace qmarkoff;

static void BM_collide_mu(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collide(MapKind::mu, len));
}
BENCHMARK(BM_collide_mu)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_collide_mu_serial(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collide_serial(MapKind::mu, len));
}
BENCHMARK(BM_collide_mu_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_collide_M(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collide(MapKind::M, len));
}
BENCHMARK(BM_collide_M)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_collide_M_serial(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collide_serial(MapKind::M, len));
}
BENCHMARK(BM_collide_M_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_residues(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(residue_relation_check(k, 10));
}
BENCHMARK(BM_residues)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_residues_serial(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(residue_relation_check_serial(k, 10));
}
BENCHMARK(BM_residues_serial)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_identity_suite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(IdentityFamily::identity2_M, 1000, 7));
}
BENCHMARK(BM_identity_suite)->Unit(benchmark::kMillisecond);

static void BM_identity_suite_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(IdentityFamily::identity2_M, 1000, 7, {}, 1));
}
BENCHMARK(BM_identity_suite_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
