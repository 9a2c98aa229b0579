#include <benchmark/benchmark.h>

#include "qfc/model.hpp"
#include "qfc/propagator.hpp"

#include <numbers>

namespace {

qfc::ScenarioSpec rabi(int n_max) {
    qfc::PresetParams p;
    p.g = 0.05;
    p.control_time = 25.0;
    p.theta = std::numbers::pi / 2;
    p.n_max = n_max;
    return qfc::make_preset(qfc::Preset::rabi_resonant, p);
}

}  // namespace

// Real symmetric input: the LAPACK dsyevd path.
static void BM_EigendecomposeRabi(benchmark::State& state) {
    const qfc::ComplexMatrix h = qfc::build_hamiltonian(rabi(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfc::eigendecompose(h));
    }
    state.counters["dim"] = static_cast<double>(h.rows());
}
BENCHMARK(BM_EigendecomposeRabi)->Arg(20)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EvolveState(benchmark::State& state) {
    const qfc::ScenarioSpec spec = rabi(80);
    const qfc::SpectralDecomposition d = qfc::eigendecompose(qfc::build_hamiltonian(spec));
    const qfc::StateVector psi0 = qfc::product_state(qfc::fock_state(10, spec.field.dim()), spec.initial_atomic);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfc::evolve_state(d, psi0, 25.0));
    }
}
BENCHMARK(BM_EvolveState)->Unit(benchmark::kMicrosecond);
