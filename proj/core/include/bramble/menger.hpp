#pragma once

#include <string>
#include <vector>

#include "bramble/digraph.hpp"

namespace bramble {

/// Constructive Menger certificate for an ordered set pair (A,B): a maximum
/// family of pairwise vertex-disjoint A->B paths together with an (A,B)
/// separator of the same size. Disjointness includes endpoints. When
/// v in A ∩ B the zero-length path [v] counts, and every separator must
/// contain v.
struct SeparatorCertificate {
    std::vector<VertexPath> paths;
    std::vector<int> separator;  // ascending
};

/// Computes max disjoint A->B paths plus a matching minimum separator via a
/// unit-capacity vertex-split max flow. A and B must be non-empty, in range,
/// duplicate-free, and distinct as sets.
SeparatorCertificate mengerPathsAndSeparator(const Digraph& d, const std::vector<int>& a,
                                             const std::vector<int>& b);

/// Re-checks a certificate from scratch: path validity/disjointness/endpoints,
/// |paths| == |separator|, and that deleting the separator leaves no A->B
/// path (including zero-length ones).
bool verifySeparatorCertificate(const Digraph& d, const std::vector<int>& a,
                                const std::vector<int>& b, const SeparatorCertificate& cert,
                                std::string* why = nullptr);

/// Largest k such that d is k-strong: min(n-1, smallest local vertex cut over
/// non-adjacent ordered pairs). Returns 0 when d is not strong. Requires
/// n >= 2.
int strongConnectivity(const Digraph& d);

/// True iff |V| >= k+1 and no separator of size < k exists. k >= 0. Cheaper
/// than strongConnectivity for a fixed k: each local flow stops after k
/// augmenting paths.
bool isKStrong(const Digraph& d, int k);

}  // namespace bramble
