#include <benchmark/benchmark.h>

#include "petristruct/coverability.hpp"
#include "petristruct/models.hpp"
#include "petristruct/reach_graph.hpp"
#include "petristruct/semiflow.hpp"

using namespace petristruct;

namespace {

void BM_GeneratingSetTned(benchmark::State& state) {
  const auto fx = models::tned(static_cast<std::size_t>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nonneg_generating_set(fx.net()));
}
BENCHMARK(BM_GeneratingSetTned)->DenseRange(2, 8, 2);

void BM_ZBasisTned(benchmark::State& state) {
  const auto fx = models::tned(static_cast<std::size_t>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(z_flow_basis(fx.net()));
}
BENCHMARK(BM_ZBasisTned)->DenseRange(2, 8, 2);

void BM_ReachGraphTned(benchmark::State& state) {
  const auto fx = models::tned(3, state.range(0), 1);
  std::size_t nodes = 0;
  for (auto _ : state) {
    const ReachGraph rg = build_rg(fx.net(), fx.init());
    nodes = rg.nodes.size();
    benchmark::DoNotOptimize(live_transitions_exact(rg));
  }
  state.counters["states"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ReachGraphTned)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_CoverabilityTreeTned(benchmark::State& state) {
  const auto fx = models::tned(3, state.range(0), 1);
  const Marking qh = models::tned_facts(3, state.range(0), 1).q_h;
  for (auto _ : state) benchmark::DoNotOptimize(build_lct(fx.net(), qh));
}
BENCHMARK(BM_CoverabilityTreeTned)->Arg(2)->Arg(4)->Arg(8);

void BM_StateMachineSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(models::state_machine_class_sweep(5, 2));
}
BENCHMARK(BM_StateMachineSweep)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode of another
// compiler release; define main here instead.
BENCHMARK_MAIN();
