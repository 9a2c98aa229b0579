#include <benchmark/benchmark.h>

#include "qfc/analysis.hpp"
#include "qfc/fock.hpp"

static void BM_WignerGrid(benchmark::State& state) {
    const qfc::StateVector psi = qfc::coherent_state({1.5, -0.5}, 40);
    qfc::WignerAxes axes;
    axes.x_points = axes.p_points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfc::wigner(psi, axes));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_WignerGrid)->Arg(31)->Arg(121)->Unit(benchmark::kMillisecond);

static void BM_FockStatistics(benchmark::State& state) {
    const qfc::StateVector psi = qfc::coherent_state({3.0, 1.0}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfc::fock_statistics(psi));
    }
}
BENCHMARK(BM_FockStatistics)->Arg(161)->Unit(benchmark::kMicrosecond);
