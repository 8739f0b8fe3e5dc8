#include <benchmark/benchmark.h>

#include "fht/airfoil.hpp"
#include "fht/transform.hpp"

using namespace fht;

namespace {

Evaluable workload() {
  return Evaluable(EndpointWeightedFunction(-0.3, 0.2, ChebyshevSeries({1.0, 0.5, -0.25, 0.125, 2.0})));
}

template <bool Parallel>
void batch(benchmark::State& state) {
  const Evaluable f = workload();
  const auto pts = interior_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? fht_batch(f, pts) : fht_batch_serial(f, pts);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(batch<false>)->Name("fht_batch_serial")->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(batch<true>)->Name("fht_batch_openmp")->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
