// Serial vs parallel kernels on the boundary of the n-cross-polytope
// (2n vertices, 3^n - 1 simplices). The parallel wins only show up with
// more than one hardware thread; on a single core the pair should tie.

#include "morsecat/builder.hpp"
#include "morsecat/strong.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace morsecat;

namespace {

SimplicialComplex cross_polytope_boundary(int n) {
    std::vector<std::vector<VertexId>> facets;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<VertexId> f;
        for (int i = 0; i < n; ++i)
            f.push_back(2 * i + ((mask >> i) & 1));
        facets.push_back(f);
    }
    return SimplicialComplex::from_vertex_lists(facets);
}

void bm_scrit(benchmark::State& state, Exec exec) {
    SimplicialComplex K = cross_polytope_boundary(static_cast<int>(state.range(0)));
    MorseFunction f = random_dmf(K, 0);
    StrongOptions opt;
    opt.exec = exec;
    for (auto _ : state) {
        ScritReport rep = scrit(K, f, opt);
        benchmark::DoNotOptimize(rep.objects.data());
    }
    state.SetLabel(std::to_string(K.size()) + " simplices");
}

void BM_scrit_serial(benchmark::State& state) { bm_scrit(state, Exec::Serial); }
void BM_scrit_parallel(benchmark::State& state) {
    bm_scrit(state, Exec::Parallel);
}

void bm_optimize(benchmark::State& state, int jobs) {
    SimplicialComplex K = cross_polytope_boundary(4);
    OptimizerConfig cfg;
    cfg.budget = 64;
    cfg.trials = 4;
    cfg.jobs = jobs;
    for (auto _ : state) {
        OptimizerResult res = optimize_scrit(K, cfg);
        benchmark::DoNotOptimize(res.best_count);
    }
}

void BM_optimize_jobs1(benchmark::State& state) { bm_optimize(state, 1); }
void BM_optimize_jobs_auto(benchmark::State& state) { bm_optimize(state, 0); }

} // namespace

BENCHMARK(BM_scrit_serial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scrit_parallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_optimize_jobs1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_optimize_jobs_auto)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
