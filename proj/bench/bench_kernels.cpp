// Serial reference kernels against their OpenMP counterparts.
// Thread count follows OMP_NUM_THREADS.

#include "mdim/games.hpp"
#include "mdim/generators.hpp"
#include "mdim/pair_cover.hpp"
#include "mdim/product.hpp"
#include "mdim/reference.hpp"
#include "mdim/resolver.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mdim;

Graph bench_graph(int which)
{
    switch (which) {
    case 0: return hypercube(8);
    case 1: return cartesian_product(complete_graph(12), complete_graph(12)).graph;
    default: return cartesian_product(cycle_graph(20), cycle_graph(20)).graph;
    }
}

const char* bench_name(int which) { return which == 0 ? "Q8" : which == 1 ? "K12xK12" : "C20xC20"; }

VertexSet first_vertices(int count)
{
    std::vector<Vertex> v;
    for (int i = 0; i < count; ++i)
        v.push_back(static_cast<Vertex>(i));
    return VertexSet(std::move(v));
}

void apsp_parallel(benchmark::State& state)
{
    auto g = bench_graph(static_cast<int>(state.range(0)));
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(all_pairs_distances(g));
}

void apsp_reference(benchmark::State& state)
{
    auto g = bench_graph(static_cast<int>(state.range(0)));
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::all_pairs_distances(g));
}

void resolves_parallel(benchmark::State& state)
{
    auto g = bench_graph(static_cast<int>(state.range(0)));
    auto dm = all_pairs_distances(g);
    auto s = first_vertices(8);
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(resolves(g, dm, s));
}

void resolves_reference(benchmark::State& state)
{
    auto g = bench_graph(static_cast<int>(state.range(0)));
    auto dm = all_pairs_distances(g);
    auto s = first_vertices(8);
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::resolves(dm, s));
}

void pair_cover_parallel(benchmark::State& state)
{
    auto dm = all_pairs_distances(bench_graph(static_cast<int>(state.range(0))));
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(PairCoverTable::resolving(dm));
}

void pair_cover_reference(benchmark::State& state)
{
    auto dm = all_pairs_distances(bench_graph(static_cast<int>(state.range(0))));
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::pair_cover_rows(dm));
}

// Hamming H(7,4): 16384 secrets, coordinate questions.
std::vector<CodeVector> coordinate_questions(int n, int k)
{
    std::vector<CodeVector> qs{CodeVector(n, 1)};
    for (int i = 0; i < n; ++i)
        for (int j = 2; j <= k; ++j) {
            CodeVector q(n, 1);
            q[i] = j;
            qs.push_back(q);
        }
    return qs;
}

void static_questions_parallel(benchmark::State& state)
{
    auto qs = coordinate_questions(7, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(static_questions_verify(7, 4, qs));
}

void static_questions_reference(benchmark::State& state)
{
    auto qs = coordinate_questions(7, 4);
    std::vector<std::vector<int>> raw(qs.begin(), qs.end());
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::static_questions_injective(7, 4, raw));
}

std::vector<std::vector<int>> singleton_weighings(int n)
{
    std::vector<std::vector<int>> w;
    for (int c = 0; c < n; ++c)
        w.push_back({c});
    return w;
}

void weighing_parallel(benchmark::State& state)
{
    WeighingScheme scheme{18, singleton_weighings(18)};
    for (auto _ : state)
        benchmark::DoNotOptimize(weighing_scheme_verify(scheme));
}

void weighing_reference(benchmark::State& state)
{
    auto w = singleton_weighings(18);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::weighing_injective(18, w));
}

} // namespace

BENCHMARK(apsp_reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(apsp_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(resolves_reference)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(resolves_parallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(pair_cover_reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(pair_cover_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(static_questions_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(static_questions_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(weighing_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(weighing_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
