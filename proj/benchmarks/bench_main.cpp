#include <benchmark/benchmark.h>

#include "clawchrome/cliques.hpp"
#include "clawchrome/colorers.hpp"
#include "clawchrome/generators.hpp"
#include "clawchrome/matching.hpp"
#include "clawchrome/oracle.hpp"
#include "clawchrome/params.hpp"
#include "clawchrome/vizing.hpp"

using namespace clawchrome;

namespace {

void BM_delta2(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(delta2(g));
}
BENCHMARK(BM_delta2)->Arg(100)->Arg(400)->Arg(1000);

void BM_maximum_matching(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.1, 42);
    for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g).size());
}
BENCHMARK(BM_maximum_matching)->Arg(50)->Arg(150)->Arg(400);

void BM_vizing(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.2, 42);
    for (auto _ : state) benchmark::DoNotOptimize(vizing_edge_color(g).colors_used());
}
BENCHMARK(BM_vizing)->Arg(40)->Arg(120)->Arg(300);

void BM_clique_number(benchmark::State& state) {
    Graph g = random_graph((int)state.range(0), 0.4, 42);
    for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_clique_number)->Arg(30)->Arg(60);

void BM_oracle_chi(benchmark::State& state) {
    auto inst = random_claw_free((int)state.range(0), ClawFreeFamily::line_of_random, 42);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(inst.graph).chi);
}
BENCHMARK(BM_oracle_chi)->Arg(15)->Arg(20)->Arg(25);

void BM_circular_colorer(benchmark::State& state) {
    auto rr = random_circular_interval((int)state.range(0), 2 * (int)state.range(0), 10, 42);
    int d2 = delta2(rr.graph);
    auto lists = ListAssignment::uniform(rr.graph.n(), d2 + 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(color_circular_interval(rr.graph, rr.rep, lists).count_colors());
}
BENCHMARK(BM_circular_colorer)->Arg(60)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
