#pragma once

#include <cstdint>

#include "bramble/digraph.hpp"
#include "bramble/documents.hpp"

namespace bramble {

/// Complete digraph on n vertices: all ordered pairs, the canonical
/// (n-1)-strong input.
Digraph genComplete(int n);

/// Directed Erdos-Renyi graph: every ordered pair (u,v), u != v, appears
/// independently with probability p. Deterministic per seed across platforms.
Digraph genRandomDigraph(int n, double p, std::uint64_t seed);

/// Planted routing instance: bagCount bags of congestion exactly c forming a
/// bramble (shared-hub construction), k fresh terminal pairs outside all
/// bags, and random arcs overlaid until the host is k-strong. Requires
/// bagCount >= 4k^2 + 2(k-1) and bagCount >= c. Deterministic per seed;
/// throws GuardError if the strengthening loop exceeds its retry cap.
InstanceDocument genPlantedBrambleInstance(int k, int c, int bagCount, std::uint64_t seed);

}  // namespace bramble
