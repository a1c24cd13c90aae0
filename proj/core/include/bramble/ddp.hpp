#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bramble/certificates.hpp"
#include "bramble/digraph.hpp"
#include "bramble/menger.hpp"

namespace bramble {

/// Routing instance: connect sources[i] to sinks[i] for every i with paths
/// such that no vertex lies on more than `budget` of them.
struct DdpInstance {
    Digraph d;
    std::vector<int> sources;  // ordered; repeats are allowed
    std::vector<int> sinks;    // same length as sources
    int budget = 1;
};

/// Throws InputError when the instance violates its invariants
/// (equal-size non-empty terminal lists, budget >= 1, terminals in range).
/// Repeated terminals are legal: identical pairs may share a walk as long as
/// the load budget absorbs it.
void validateDdpInstance(const DdpInstance& inst);

struct DdpSolution {
    std::vector<VertexPath> paths;  // paths[i] runs sources[i] -> sinks[i]
};

struct SolutionReport {
    bool ok = false;
    std::string message;
};

/// Checks endpoints, path validity, and per-vertex load <= budget.
SolutionReport verifySolution(const DdpInstance& inst, const DdpSolution& sol);

/// Per-vertex number of solution paths containing each vertex.
std::vector<int> loadMap(const Digraph& d, const DdpSolution& sol);

enum class SolveStatus { Solved, Infeasible, CapExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    DdpSolution solution;       // populated when Solved
    long long nodesExpanded = 0;
};

/// Complete backtracking solver. Routes pairs in the given order, extending
/// one path at a time to ascending-index out-neighbours, pruning on the load
/// budget and on residual reachability of the current sink. With
/// budget >= k the instance degenerates to per-pair reachability and is
/// solved directly. `nodeCap` bounds explored search nodes; exhaustion is
/// reported as CapExceeded, never as Infeasible. Intended scale: n <= ~60,
/// k <= 4.
SolveResult solveExact(const DdpInstance& inst, long long nodeCap);

enum class DichotomySide { SourceSide, SinkSide };

struct DichotomyResult {
    bool linked = false;  // true: >= k disjoint paths on both sides
    std::optional<DichotomySide> side;          // blocked side when !linked
    std::optional<SeparatorCertificate> evidence;  // separator of size < k
    std::vector<int> bagUnion;                  // ascending
};

/// Menger dichotomy between the terminals and a bramble: checks for k
/// disjoint paths from S to the union of all bags and from that union to T.
/// When one side has fewer than k, returns the small separator as evidence;
/// otherwise certifies both sides are linked.
DichotomyResult dichotomyCheck(const Digraph& d, const Bramble& bags, const std::vector<int>& S,
                               const std::vector<int>& T, int k);

}  // namespace bramble
