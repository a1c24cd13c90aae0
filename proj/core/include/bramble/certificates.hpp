#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bramble/digraph.hpp"
#include "bramble/menger.hpp"

namespace bramble {

/// A family of vertex bags over a host digraph. Bags are stored sorted
/// ascending and deduplicated as sets on construction (first occurrence kept,
/// order otherwise preserved). Whether the family is an actual bramble of the
/// host is decided by verifyBramble, not by this container.
class Bramble {
public:
    Bramble() = default;
    /// Throws InputError on empty bags or negative vertex indices.
    Bramble(const std::vector<std::vector<int>>& bags);

    const std::vector<std::vector<int>>& bags() const { return bags_; }
    std::size_t size() const { return bags_.size(); }
    bool empty() const { return bags_.empty(); }

    bool operator==(const Bramble& other) const { return bags_ == other.bags_; }

private:
    std::vector<std::vector<int>> bags_;
};

struct BrambleReport {
    bool ok = false;
    std::string message;
    int bagA = -1;  // first violating bag, or pair (bagA,bagB)
    int bagB = -1;
};

/// True iff every bag induces a strong subgraph and every pair of bags either
/// intersects or has arcs in both directions between them. The report names
/// the first violating bag or pair. Throws InputError for out-of-range
/// vertices or an empty family.
BrambleReport verifyBramble(const Digraph& d, const Bramble& bags);

/// Occurrence count oc(v) for every vertex appearing in at least one bag.
std::map<int, int> occurrenceCounts(const Bramble& bags);

/// Maximum occurrence count over vertices; 0 for an empty family.
int congestion(const Bramble& bags);

struct OrderResult {
    bool capExceeded = false;
    int order = -1;                // minimum hitting-set size when !capExceeded
    std::vector<int> hittingSet;   // one witness of that size
};

/// Minimum hitting-set size by exhaustive search up to sizeCap, with a
/// branch-and-bound over the bags. Guarded to |bags| <= 20 (GuardError).
/// Cap exhaustion is reported in-band, distinct from input errors.
OrderResult brambleOrderExact(const Digraph& d, const Bramble& bags, int sizeCap);

struct WellLinkedReport {
    bool ok = false;
    // on failure: the witnessing pair and how many disjoint paths exist
    std::vector<int> x, y;
    int linkageSize = -1;
};

/// Decides well-linkedness of A: every ordered pair (X,Y) of disjoint equal
/// size subsets of A must admit |X| vertex-disjoint X->Y paths. Enumeration is
/// 3^|A|-ish, guarded to |A| <= 8 (GuardError).
WellLinkedReport isWellLinkedReport(const Digraph& d, const std::vector<int>& a);
bool isWellLinked(const Digraph& d, const std::vector<int>& a);

/// Pairwise vertex-disjoint paths from sourceSet to sinkSet.
struct Linkage {
    std::vector<int> sourceSet, sinkSet;
    std::vector<VertexPath> paths;
};

/// An (a,b)-path system: a pairwise disjoint spine paths; per spine path an
/// in-set and an out-set of b vertices, the in-set lying entirely before the
/// out-set along the path; and for every ordered pair i != j a linkage of b
/// disjoint paths from outSets[i] to inSets[j].
struct PathSystem {
    int a = 0;
    int b = 0;
    std::vector<VertexPath> spinePaths;
    std::vector<std::vector<int>> inSets;
    std::vector<std::vector<int>> outSets;
    std::map<std::pair<int, int>, Linkage> linkages;  // keyed (i,j), i != j
};

struct PathSystemReport {
    bool ok = false;
    std::string message;
    std::vector<std::string> warnings;  // e.g. skipped well-linkedness checks
};

/// Checks every PathSystem invariant. Well-linkedness of each in/out set is
/// verified only up to the |A| <= 8 guard; larger sets are skipped with a
/// warning instead of failing.
PathSystemReport verifyPathSystem(const Digraph& d, const PathSystem& ps);

struct BuildPathSystemOptions {
    bool skipPreconditionChecks = false;  // waive the 2k^2-strongness check
};

/// Builds a (k,k)-path system in a 2k^2-strong digraph: grows a maximal path
/// greedily (smallest-index tie-break), truncates to its first 2k^2 vertices,
/// splits it into k blocks of 2k, takes the first/last k of each block as
/// in/out sets, and extracts all k^2-k linkages by max flow. The result is
/// re-verified before being returned.
PathSystem buildPathSystem(const Digraph& d, int k, const BuildPathSystemOptions& opts = {});

}  // namespace bramble
