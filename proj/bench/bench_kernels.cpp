// Serial reference implementations against the kernels the pipeline uses.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "girth5/canon.hpp"
#include "girth5/families.hpp"
#include "girth5/graph.hpp"
#include "girth5/local_search.hpp"
#include "girth5/pipeline.hpp"

using namespace girth5;

namespace {

// Girth >= 5 graph grown by random legal insertions.
Graph sparse_girth5(std::size_t n, std::size_t edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (std::size_t tries = 0; g.size() < edges && tries < 50 * edges; ++tries) {
        const auto u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
        if (u != v && is_legal_edge(g, u, v)) g.connect(u, v);
    }
    return g;
}

SearchParams params(std::size_t n, std::uint64_t iters) {
    SearchParams p = first_run_template().at(n, 1);
    p.total_num_iters = iters;
    return p;
}

std::vector<SearchTask> task_batch(std::size_t count, std::size_t n) {
    std::vector<SearchTask> tasks;
    for (std::size_t i = 0; i < count; ++i) {
        auto p = first_run_template().at(n, i);
        p.total_num_iters = 200 * n;
        tasks.push_back({Graph(n), p});
    }
    return tasks;
}

void BM_LegalPairs(benchmark::State& state) {
    const auto g = sparse_girth5(static_cast<std::size_t>(state.range(0)), state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_legal_edges(g));
}
BENCHMARK(BM_LegalPairs)->Arg(32)->Arg(64)->Arg(128);

void BM_LegalPairsReference(benchmark::State& state) {
    const auto g = sparse_girth5(static_cast<std::size_t>(state.range(0)), state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_legal_edges(g));
}
BENCHMARK(BM_LegalPairsReference)->Arg(32)->Arg(64)->Arg(128);

void BM_LocalSearch(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(local_search(Graph(n), params(n, 200)));
}
BENCHMARK(BM_LocalSearch)->Arg(12)->Arg(50)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_LocalSearchReference(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::local_search(Graph(n), params(n, 200)));
}
BENCHMARK(BM_LocalSearchReference)->Arg(12)->Arg(50)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_LocalSearchHoffmanSingleton(benchmark::State& state) {
    const Graph seed = add_isolated_vertex(families::hoffman_singleton());
    for (auto _ : state) benchmark::DoNotOptimize(local_search(seed, params(51, 5000)));
}
BENCHMARK(BM_LocalSearchHoffmanSingleton)->Unit(benchmark::kMillisecond);

void BM_TasksSerial(benchmark::State& state) {
    const auto tasks = task_batch(16, 20);
    for (auto _ : state) benchmark::DoNotOptimize(run_tasks_serial(tasks));
}
BENCHMARK(BM_TasksSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TasksParallel(benchmark::State& state) {
    const auto tasks = task_batch(16, 20);
    const auto threads = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_tasks_parallel(tasks, threads));
}
BENCHMARK(BM_TasksParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CanonicalFormsSerial(benchmark::State& state) {
    std::vector<Graph> graphs;
    for (std::uint64_t s = 0; s < 64; ++s) graphs.push_back(sparse_girth5(40, 70, s));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_forms_serial(graphs));
}
BENCHMARK(BM_CanonicalFormsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CanonicalFormsParallel(benchmark::State& state) {
    std::vector<Graph> graphs;
    for (std::uint64_t s = 0; s < 64; ++s) graphs.push_back(sparse_girth5(40, 70, s));
    const auto threads = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_forms_parallel(graphs, threads));
}
BENCHMARK(BM_CanonicalFormsParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CanonicalFormHoffmanSingleton(benchmark::State& state) {
    const Graph hs = families::hoffman_singleton();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(hs));
}
BENCHMARK(BM_CanonicalFormHoffmanSingleton)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
