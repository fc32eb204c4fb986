#include <benchmark/benchmark.h>

#include "mwg/closure.hpp"
#include "mwg/graph_io.hpp"
#include "mwg/paths.hpp"
#include "mwg/psd.hpp"

namespace {

mwg::MwGraph dense_pd_graph(int n) {
    mwg::GenParams params;
    params.n = n;
    params.d = 3;
    params.seed = 4242;
    params.edge_prob = 1.0;
    params.profile = mwg::RankProfile::Full;
    return mwg::parse_graph_text(mwg::generate_graph_text(params), "bench").graph;
}

mwg::MwGraph sparse_mixed_graph(int n) {
    mwg::GenParams params;
    params.n = n;
    params.d = 2;
    params.seed = 4242;
    params.edge_prob = 0.3;
    params.profile = mwg::RankProfile::Mixed;
    return mwg::parse_graph_text(mwg::generate_graph_text(params), "bench").graph;
}

void BM_ParallelSum(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    mwg::GenParams params;
    params.n = 2;
    params.d = d;
    params.seed = 7;
    params.edge_prob = 1.0;
    params.profile = mwg::RankProfile::Mixed;
    const auto g = mwg::parse_graph_text(mwg::generate_graph_text(params), "bench").graph;
    const auto& a = g.edges()[0].weight;
    const auto b = mwg::PsdMatrix::identity(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mwg::parallel_sum(a, b));
    }
}
BENCHMARK(BM_ParallelSum)->Arg(2)->Arg(3)->Arg(5);

void BM_Closure(benchmark::State& state) {
    const auto g = dense_pd_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mwg::warshall_run(g));
    }
}
BENCHMARK(BM_Closure)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_PairEnumeration(benchmark::State& state) {
    const auto g = sparse_mixed_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mwg::pair_kernel(g, 1, g.n(), false));
    }
}
BENCHMARK(BM_PairEnumeration)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
