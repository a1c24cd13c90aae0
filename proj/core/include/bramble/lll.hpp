#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bramble/digraph.hpp"
#include "bramble/ugraph.hpp"

namespace bramble {

/// Intersection graph of indexed members of one or more path families:
/// vertex = (family, member), adjacency iff the underlying vertex sets share
/// a host vertex.
struct IntersectionGraph {
    Ugraph graph;
    std::vector<std::pair<int, int>> members;        // graph vertex -> (family, member)
    std::vector<std::vector<int>> memberVertices;    // sorted host-vertex sets
};

IntersectionGraph buildIntersectionGraph(const std::vector<std::vector<VertexPath>>& families);

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<int> order;  // elimination order, minimum degree first
};

/// Degeneracy via iterated minimum-degree removal (smallest index breaks
/// ties); the returned order replays the elimination for downstream greedy
/// use.
DegeneracyResult degeneracy(const Ugraph& g);

struct LllCheckResult {
    bool pass = false;
    double slack = 0.0;        // t^(1-eps) / (e*4b(r-1))^(1+eps); inf when rhs == 0
    std::string slackDecimal;  // same value, extended precision
};

/// Evaluates t^(1-eps) >= (e*4b(r-1))^(1+eps) in extended precision.
/// Domain: t >= 1, b >= 0 real, r >= 2, 0 < eps < 1 (InputError otherwise).
LllCheckResult checkPolyLllCondition(long long t, double b, int r, double eps);

/// Threshold e*2b(r-1) of the classical symmetric local-lemma route; whenever
/// the condition above passes, t is at least this (strictly weaker bound).
double classicalLllThreshold(double b, int r);

/// Graph with r parts of size t each; every two-part induced subgraph is
/// promised b-degenerate. Cross-part edges are the conflict events the
/// resampler watches.
struct PartitionedConflictGraph {
    Ugraph graph;
    std::vector<std::vector<int>> parts;  // r parts, each of size t
    double degeneracyBound = 0.0;         // b, real-valued

    int r() const { return static_cast<int>(parts.size()); }
    int t() const { return parts.empty() ? 0 : static_cast<int>(parts.front().size()); }
};

struct PcgReport {
    bool ok = false;
    std::string message;
};

/// Checks the partition (sizes equal, disjoint, covering) and that every
/// V_i ∪ V_j induces a subgraph of degeneracy <= floor(b).
PcgReport validatePartitionedConflictGraph(const PartitionedConflictGraph& p);

/// Cross-part edges F. For every valid instance |F| <= 2*r^2*b*t.
std::vector<std::pair<int, int>> crossEdges(const PartitionedConflictGraph& p);

/// Per-event dependency bound of the resampling model: 4b(r-1).
double dependencyBound(const PartitionedConflictGraph& p);

enum class RisStatus { Found, CapExceeded };

struct RisResult {
    RisStatus status = RisStatus::CapExceeded;
    std::vector<int> selection;  // one vertex per part when Found
    long long resamples = 0;
};

struct RisOptions {
    bool checkCondition = true;  // verify the poly-LLL condition before running
    double eps = 0.0;            // epsilon used for that check
};

/// Moser-Tardos-style seeded resampler: draw one uniform vertex per part;
/// while some cross edge has both endpoints selected, redraw the two parts
/// incident to the lowest-indexed violated edge. Deterministic per seed.
/// Returns a verified independent transversal, or CapExceeded after
/// resampleCap redraws.
RisResult rainbowIndependentSet(const PartitionedConflictGraph& p, std::uint64_t seed,
                                long long resampleCap, const RisOptions& opts = {});

/// Keeps in each part the ceil(t/2) vertices of smallest cross-part degree
/// (ties by index); every kept vertex has cross degree <= 4t(r-1)b. Parts are
/// re-truncated to equal size, the graph re-indexed accordingly.
PartitionedConflictGraph degreePrune(const PartitionedConflictGraph& p);

}  // namespace bramble
