#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bramble/certificates.hpp"
#include "bramble/ddp.hpp"
#include "bramble/digraph.hpp"

namespace bramble {

/// Result of the congestion-reduction transform: a host digraph extended with
/// vertex copies and terminal gadgets, plus a same-size bag family of
/// congestion <= 2.
///
/// Vertices 0..n-1 of dPrime are the original vertices; copies and gadget
/// terminals follow. sigma[i] is the index in bagsPrime of the image of
/// original bag i (the construction keeps bag order, so sigma is the
/// identity; it is stored explicitly because consumers key on it).
struct ReducedInstance {
    Digraph dPrime;
    Bramble bagsPrime;
    std::vector<std::size_t> sigma;
    std::vector<int> sourcesPrime;  // s'_i: fresh gadget vertex when s_i was copied, else s_i
    std::vector<int> sinksPrime;    // t'_i, mirrored
    std::vector<int> backMap;       // dPrime vertex -> original vertex
    /// v -> X_v = {v, v^2, .., v^l} ascending, for every v with oc(v) >= 3.
    std::map<int, std::vector<int>> copyClasses;
};

/// Transforms (D, bags, S, T) into a reduced instance whose bag family has
/// congestion <= 2:
///  - every vertex v in >= 3 bags gains ceil(oc(v)/2) - 1 copies, each with
///    v's in/out-neighbourhood at the moment of processing (ascending vertex
///    order, snapshot semantics);
///  - v's bags are reassigned so each member of X_v = {v} ∪ copies lies in at
///    most 2 of them, the last member in 1 when oc(v) is odd;
///  - each X_v becomes a bidirectional clique;
///  - fresh terminals s'_i / t'_i attach to all of X_{s_i} / X_{t_i} when the
///    terminal was copied, else to the terminal itself.
/// All ReducedInstance invariants are re-checked before returning.
ReducedInstance buildReducedInstance(const Digraph& d, const Bramble& bags,
                                     const std::vector<int>& S, const std::vector<int>& T);

struct ReductionReport {
    bool ok = false;
    std::string message;
};

/// Re-checks every invariant of a reduced instance against its origin:
/// congestion <= 2, |bagsPrime| == |bags|, |X_v| == ceil(oc(v)/2),
/// bidirectional cliques, bag/terminal disjointness, gadget arc directions,
/// and, when (d, bags) verifies as a bramble, that (dPrime, bagsPrime) still
/// does.
ReductionReport validateReducedInstance(const Digraph& d, const Bramble& bags,
                                        const std::vector<int>& S, const std::vector<int>& T,
                                        const ReducedInstance& r);

/// Translates a verified congestion-2 solution of the reduced instance back
/// to the original digraph: normalizes each path to visit at most one vertex
/// per copy class (keeping the first occurrence and shortcutting past the
/// last, which the class clique makes possible), strips the gadget endpoints,
/// and maps the rest through backMap. Output path i runs sources[i] ->
/// sinks[i] in the original digraph; per-vertex load is bounded by twice the
/// largest copy-class size. Throws InputError when pathsPrime is not a valid
/// congestion-2 solution of the reduced instance.
DdpSolution translateSolution(const ReducedInstance& r, const DdpSolution& pathsPrime);

struct RouteOptions {
    long long nodeCap = 50'000'000;
    bool skipKStrongCheck = false;
    bool skipBrambleCheck = false;
    bool skipSizeCheck = false;
};

enum class RouteStatus { Routed, Infeasible, CapExceeded };

struct RouteResult {
    RouteStatus status = RouteStatus::Infeasible;
    DdpSolution solution;          // in the original digraph, when Routed
    int loadBound = 0;             // 2 * ceil(c/2)
    std::optional<DichotomyResult> evidence;  // when Infeasible
    ReducedInstance reduced;
    long long nodesExpanded = 0;
};

/// End-to-end congestion-bounded routing through a bramble: requires
/// |bags| >= 4k^2 + 2(k-1), a k-strong host, and bramble congestion <= c
/// (each check individually skippable); reduces to a congestion-2 instance,
/// solves it exactly, and translates the solution back. The returned paths
/// put at most 2*ceil(c/2) of them through any vertex. Infeasibility of the
/// reduced instance is surfaced together with Menger dichotomy evidence.
RouteResult routeViaBramble(const Digraph& d, const Bramble& bags, const std::vector<int>& S,
                            const std::vector<int>& T, int c, const RouteOptions& opts = {});

/// Bag size threshold 4k^2 + 2(k-1) required by routeViaBramble.
long long routeSizeThreshold(int k);

}  // namespace bramble
