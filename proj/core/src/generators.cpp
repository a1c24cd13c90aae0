#include "bramble/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "bramble/errors.hpp"
#include "bramble/menger.hpp"
#include "bramble/reduction.hpp"

namespace bramble {

namespace {

// uniform double in [0, 1) from the top 53 bits, identical on every platform
double unitDraw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int drawBelow(std::mt19937_64& rng, int m) {
    auto limit = std::mt19937_64::max() - std::mt19937_64::max() % static_cast<std::uint64_t>(m);
    std::uint64_t raw;
    do {
        raw = rng();
    } while (raw >= limit);
    return static_cast<int>(raw % static_cast<std::uint64_t>(m));
}

std::vector<int> drawDistinct(std::mt19937_64& rng, int count, int universe) {
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < count) picked.insert(drawBelow(rng, universe));
    return {picked.begin(), picked.end()};
}

}  // namespace

Digraph genComplete(int n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) d.addEdge(u, v);
    return d;
}

Digraph genRandomDigraph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (unitDraw(rng) < p) d.addEdge(u, v);
        }
    return d;
}

InstanceDocument genPlantedBrambleInstance(int k, int c, int bagCount, std::uint64_t seed) {
    if (k < 1) throw InputError("k must be >= 1");
    if (c < 1) throw InputError("congestion c must be >= 1");
    if (static_cast<long long>(bagCount) < routeSizeThreshold(k))
        throw InputError("bagCount " + std::to_string(bagCount) + " is below the routing size " +
                         std::to_string(routeSizeThreshold(k)) + " for k = " + std::to_string(k));
    if (bagCount < c)
        throw InputError("bagCount must be at least c so the hub can sit in c distinct bags");

    std::mt19937_64 rng(seed);
    const bool hasHub = c >= 2;
    const int hub = bagCount;
    const int terminalBase = bagCount + (hasHub ? 1 : 0);
    const int n = terminalBase + 2 * k;

    Digraph d(n);
    // bag i owns the private vertex i; a shared hub raises congestion to c
    std::vector<std::vector<int>> bags(bagCount);
    for (int i = 0; i < bagCount; ++i) bags[i] = {i};
    if (hasHub) {
        for (int i : drawDistinct(rng, c, bagCount)) {
            bags[i].push_back(hub);
            d.addEdge(i, hub);
            d.addEdge(hub, i);
        }
    }
    for (int i = 0; i < bagCount; ++i)
        for (int j = 0; j < bagCount; ++j)
            if (i != j) d.addEdge(i, j);

    // terminals live outside every bag, wired to a few random privates
    std::vector<int> sources, sinks;
    const int fanout = std::min(bagCount, std::max(2 * k, 2));
    for (int i = 0; i < 2 * k; ++i) {
        int t = terminalBase + i;
        for (int g : drawDistinct(rng, fanout, bagCount)) {
            d.addEdge(t, g);
            d.addEdge(g, t);
        }
        (i % 2 == 0 ? sources : sinks).push_back(t);
    }

    int rounds = 0;
    while (!isKStrong(d, k)) {
        if (++rounds > 200)
            throw GuardError("could not make the planted host " + std::to_string(k) +
                             "-strong within 200 rounds");
        for (int e = 0; e < n; ++e) {
            int u = drawBelow(rng, n);
            int v = drawBelow(rng, n);
            if (u != v) d.addEdge(u, v);
        }
    }

    InstanceDocument doc;
    doc.digraph = std::move(d);
    doc.bramble = std::move(bags);
    TerminalsBlock tb;
    tb.sources = std::move(sources);
    tb.sinks = std::move(sinks);
    tb.budget = c;
    doc.terminals = std::move(tb);
    std::vector<std::string> names;
    for (int i = 0; i < bagCount; ++i) names.push_back("g" + std::to_string(i));
    if (hasHub) names.push_back("hub");
    for (int i = 0; i < k; ++i) {
        names.push_back("s" + std::to_string(i + 1));
        names.push_back("t" + std::to_string(i + 1));
    }
    doc.vertexNames = std::move(names);
    return doc;
}

}  // namespace bramble
