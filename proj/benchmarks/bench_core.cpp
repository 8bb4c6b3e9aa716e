#include <benchmark/benchmark.h>

#include "gono/additive_set.hpp"
#include "gono/divisor.hpp"
#include "gono/fibsets.hpp"
#include "gono/jacobian.hpp"
#include "gono/laplacian.hpp"
#include "gono/multigraph.hpp"

namespace {

void BM_sumset_kernel(benchmark::State& state) {
    int n = int(state.range(0));
    gono::AdditiveSet a = gono::family_additive_set(gono::FibFamily::strip_a, n);
    for (auto _ : state) {
        gono::AdditiveSet s = a + a;
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(BM_sumset_kernel)->Arg(8)->Arg(12)->Arg(14);

void BM_covering_number(benchmark::State& state) {
    int n = int(state.range(0));
    gono::AdditiveSet a = gono::family_additive_set(gono::FibFamily::strip_a, n);
    for (auto _ : state) {
        auto c = gono::covering_number(a);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_covering_number)->Arg(10)->Arg(14);

void BM_spanning_trees(benchmark::State& state) {
    gono::Multigraph g = gono::strip(int(state.range(0)));
    for (auto _ : state) {
        gono::int128 k = gono::spanning_tree_count(g);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_spanning_trees)->Arg(14)->Arg(30);

void BM_q_reduce(benchmark::State& state) {
    int n = int(state.range(0));
    gono::Multigraph g = gono::strip(n);
    gono::Divisor d(n + 1);
    d[0] = 3 * n;                                 // far from the base, heavy phase 1
    d[1] = -n;
    for (auto _ : state) {
        gono::ReducedDivisor r = gono::q_reduce(g, d, n);
        benchmark::DoNotOptimize(r.divisor.degree());
    }
}
BENCHMARK(BM_q_reduce)->Arg(8)->Arg(20);

void BM_rank(benchmark::State& state) {
    int n = int(state.range(0));
    gono::Multigraph g = gono::strip(n);
    gono::Divisor d = gono::Divisor::parse("3@0,2@1", n + 1);
    for (auto _ : state) {
        int r = gono::rank(g, d);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_rank)->Arg(8)->Arg(10);

void BM_gonality_dhar(benchmark::State& state) {
    gono::Multigraph g = gono::strip(int(state.range(0)));
    for (auto _ : state) {
        gono::DharGonality out = gono::gonality_dhar(g, 1);
        benchmark::DoNotOptimize(out.degree);
    }
}
BENCHMARK(BM_gonality_dhar)->Arg(6)->Arg(8);

void BM_classify_2a(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        gono::SumsetClassification c = gono::classify_sumset(n, 2);
        benchmark::DoNotOptimize(c.classes.size());
    }
}
BENCHMARK(BM_classify_2a)->Arg(10)->Arg(14);

} // namespace

BENCHMARK_MAIN();
