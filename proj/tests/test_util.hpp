#pragma once

// Shared helpers for the unit tests: deterministic random graph streams built
// on mt19937_64 with rejection sampling (the distribution classes of the
// standard library are implementation-defined and would break cross-platform
// reproducibility of the frozen corpora).

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "bramble/digraph.hpp"
#include "bramble/ugraph.hpp"

namespace testutil {

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t m) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t bound = max - (max % m);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= bound);
    return x % m;
}

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bramble::Digraph randomDigraph(std::mt19937_64& rng, int n, double p) {
    bramble::Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && unit(rng) < p) d.addEdge(u, v);
    return d;
}

inline bramble::Ugraph randomUgraph(std::mt19937_64& rng, int n, double p) {
    bramble::Ugraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.addEdge(u, v);
    return g;
}

/// Random strong digraph: a directed Hamilton cycle plus random extra arcs.
inline bramble::Digraph randomStrongDigraph(std::mt19937_64& rng, int n, double p) {
    bramble::Digraph d(n);
    for (int v = 0; v < n; ++v) d.addEdge(v, (v + 1) % n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && unit(rng) < p) d.addEdge(u, v);
    return d;
}

/// k distinct values in [0, n).
inline std::vector<int> distinctVertices(std::mt19937_64& rng, int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(below(rng, n - i));
        std::swap(all[i], all[j]);
    }
    return std::vector<int>(all.begin(), all.begin() + k);
}

}  // namespace testutil
