#include <benchmark/benchmark.h>

#include <random>

#include "bramble/certificates.hpp"
#include "bramble/ddp.hpp"
#include "bramble/generators.hpp"
#include "bramble/lll.hpp"
#include "bramble/menger.hpp"
#include "bramble/reduction.hpp"
#include "bramble/ugraph.hpp"

using namespace bramble;

namespace {

Digraph randomDigraph(std::uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) d.addEdge(u, v);
    return d;
}

Ugraph randomUgraph(std::uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    Ugraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.addEdge(u, v);
    return g;
}

}  // namespace

static void BM_MengerFlow(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Digraph d = randomDigraph(1, n, 0.2);
    std::vector<int> a = {0, 1, 2};
    std::vector<int> b = {n - 3, n - 2, n - 1};
    for (auto _ : state) {
        auto cert = mengerPathsAndSeparator(d, a, b);
        benchmark::DoNotOptimize(cert.separator);
    }
}
BENCHMARK(BM_MengerFlow)->Arg(30)->Arg(100)->Arg(300);

static void BM_BuildPathSystem(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    Digraph d = genComplete(2 * k * k + 1);
    for (auto _ : state) {
        auto ps = buildPathSystem(d, k);
        benchmark::DoNotOptimize(ps.linkages);
    }
}
BENCHMARK(BM_BuildPathSystem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Degeneracy(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Ugraph g = randomUgraph(2, n, 0.05);
    for (auto _ : state) {
        auto res = degeneracy(g);
        benchmark::DoNotOptimize(res.degeneracy);
    }
}
BENCHMARK(BM_Degeneracy)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_SolveExactBacktracking(benchmark::State& state) {
    auto doc = genPlantedBrambleInstance(3, 3, 40, 5);
    Bramble bags(*doc.bramble);
    auto red = buildReducedInstance(doc.digraph, bags, doc.terminals->sources,
                                    doc.terminals->sinks);
    DdpInstance inst;
    inst.d = red.dPrime;
    inst.sources = red.sourcesPrime;
    inst.sinks = red.sinksPrime;
    inst.budget = 2;
    for (auto _ : state) {
        auto res = solveExact(inst, 50'000'000);
        benchmark::DoNotOptimize(res.status);
    }
}
BENCHMARK(BM_SolveExactBacktracking)->Unit(benchmark::kMillisecond);

static void BM_RainbowResample(benchmark::State& state) {
    int r = 4, t = 200;
    std::mt19937_64 rng(7);
    PartitionedConflictGraph p;
    Ugraph g(r * t);
    p.parts.resize(r);
    for (int part = 0; part < r; ++part)
        for (int i = 0; i < t; ++i) p.parts[part].push_back(part * t + i);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int i = 0; i < t; ++i)
                if (rng() % 2 == 0) g.addEdge(a * t + i, b * t + i);
    p.graph = std::move(g);
    p.degeneracyBound = 1.0;
    RisOptions opts;
    opts.eps = 0.2;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto res = rainbowIndependentSet(p, seed++, 100LL * r * t, opts);
        benchmark::DoNotOptimize(res.selection);
    }
}
BENCHMARK(BM_RainbowResample);

BENCHMARK_MAIN();
