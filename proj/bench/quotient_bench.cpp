// Serial vs threaded construction of level quotients.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "treegroups/quotient.hpp"

namespace {

const tg::OmegaSeq kOmega = tg::OmegaSeq::parse("(012)");

void BM_QuotientSerial(benchmark::State& state) {
  const auto gens = tg::g_generators(kOmega);
  for (auto _ : state) {
    auto q = tg::build_quotient_serial(gens, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(q.perms().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)) * 4);
}

void BM_QuotientParallel(benchmark::State& state) {
  const auto gens = tg::g_generators(kOmega);
  for (auto _ : state) {
    auto q = tg::build_quotient(gens, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(q.perms().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)) * 4);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_StabilizerChain(benchmark::State& state) {
  const auto q = tg::build_quotient(tg::g_generators(kOmega), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    tg::StabilizerChain chain(q.points(), q.perms());
    benchmark::DoNotOptimize(chain.order());
  }
}

}  // namespace

BENCHMARK(BM_QuotientSerial)->DenseRange(8, 14, 2);
BENCHMARK(BM_QuotientParallel)->DenseRange(8, 14, 2);
BENCHMARK(BM_StabilizerChain)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
