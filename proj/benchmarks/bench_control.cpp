#include <benchmark/benchmark.h>

#include "qfc/control.hpp"
#include "qfc/model.hpp"

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

// One control time given a cached decomposition.
static void BM_TransitionFactoryAt(benchmark::State& state) {
    const qfc::ControlProblem problem(rabi(static_cast<int>(state.range(0))));
    double t = 25.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(problem.transition_at(t));
        t += 1e-3;
    }
}
BENCHMARK(BM_TransitionFactoryAt)->Arg(20)->Arg(80)->Unit(benchmark::kMicrosecond);

static void BM_SolveAt(benchmark::State& state) {
    const qfc::ControlProblem problem(rabi(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(problem.solve_at(25.0));
    }
}
BENCHMARK(BM_SolveAt)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_CoherentBaseline(benchmark::State& state) {
    const qfc::ControlProblem problem(rabi(80));
    const qfc::ComplexMatrix m = problem.control_operator_at(25.0);
    qfc::BaselineOptions opt;
    opt.radial_points = static_cast<int>(state.range(0));
    opt.phase_points = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfc::coherent_baseline(m, 80, opt));
    }
}
BENCHMARK(BM_CoherentBaseline)->Args({50, 32})->Args({200, 128})->Unit(benchmark::kMillisecond);
