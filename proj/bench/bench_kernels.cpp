// Serial reference loops against the OpenMP kernels on the same inputs.

#include "modann/annclass.hpp"
#include "modann/anngraph.hpp"
#include "modann/catalog.hpp"
#include "modann/verify.hpp"

#include <benchmark/benchmark.h>

using namespace modann;

namespace {

Module benchModule(int which) {
    switch (which) {
    case 0: return Module::finite(Ring::integers(), {8, 4, 2});
    case 1: return Module::finite(Ring::integers(), {16, 4, 4, 3});
    default: return Module::finite(Ring::integers(), {27, 9, 4, 2});
    }
}

Exec execOf(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void labels(benchmark::State& state, const Module& m) {
    state.SetLabel(m.spec() + (state.range(1) ? " parallel" : " serial"));
}

void BM_ColonTable(benchmark::State& state) {
    const auto m = benchModule(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(colonTable(m, execOf(state)));
    labels(state, m);
}

void BM_ClassifyAll(benchmark::State& state) {
    const auto m = benchModule(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classifyAll(m, execOf(state)));
    labels(state, m);
}

void BM_AnnihilationEdges(benchmark::State& state) {
    const auto m = benchModule(static_cast<int>(state.range(0)));
    const auto colons = colonTable(m);
    const auto ann = annihilatorOfModule(m);
    for (auto _ : state) benchmark::DoNotOptimize(annihilationEdges(colons, ann, execOf(state)));
    labels(state, m);
}

void BM_RunCorpus(benchmark::State& state) {
    const auto corpus = defaultCorpus();
    for (auto _ : state) benchmark::DoNotOptimize(runCorpus(corpus, allTheoremIds(), execOf(state)));
    state.SetLabel(state.range(1) ? "default corpus parallel" : "default corpus serial");
}

} // namespace

BENCHMARK(BM_ColonTable)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyAll)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnihilationEdges)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunCorpus)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
