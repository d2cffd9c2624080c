#include <benchmark/benchmark.h>

#include "stefanlab/model.hpp"
#include "stefanlab/phase_plane.hpp"
#include "stefanlab/solver.hpp"

namespace {

stefanlab::ModelParams reference_params() {
    stefanlab::ModelParams p;
    p.lambda = 1.0;
    p.b = 0.5;
    p.m = 1.0;
    p.d = 1.0;
    p.nu = 1.0;
    p.c = 0.5;
    p.mu = 1.0;
    p.rho = 1.0;
    p.h0 = 1.0;
    return p;
}

void BM_SolverStep(benchmark::State& state) {
    using namespace stefanlab;
    ModelParams p = reference_params();
    GridSpec g;
    g.n = std::size_t(state.range(0));
    g.dt = 1e-3;
    InitialData init = make_cosine_init(p, 0.5, 0.5, 401);
    RunOptions opts;
    opts.stop = [](const SolutionState&) { return false; };
    GridSpec warm = g;
    warm.t_end = warm.dt;  // one-step run to build the state
    Trajectory tr = run(p, init, warm, opts);
    SolutionState s = tr.final_state;
    for (auto _ : state) {
        s = step(s, p, g, g.dt);
        benchmark::DoNotOptimize(s.h);
    }
}
BENCHMARK(BM_SolverStep)->Arg(100)->Arg(200)->Arg(400);

void BM_ZEta(benchmark::State& state) {
    using namespace stefanlab;
    const WaveNonlinearity w = make_wave_nonlinearity(reference_params());
    const double eta = 0.5 * eta_star(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_eta(w, eta));
    }
}
BENCHMARK(BM_ZEta);

void BM_FiniteWave(benchmark::State& state) {
    using namespace stefanlab;
    const WaveNonlinearity w = make_wave_nonlinearity(reference_params());
    const double eta = 0.5 * eta_star(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_wave(w, 0.0, eta).z_end);
    }
}
BENCHMARK(BM_FiniteWave);

}  // namespace

BENCHMARK_MAIN();
