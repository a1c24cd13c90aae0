#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bramble/digraph.hpp"
#include "bramble/ugraph.hpp"

namespace bramble {

/// Derived parameter chain of the routing pipeline, evaluated in extended
/// precision. The integer-valued parameters a, d3, d2, d1, b are exact
/// decimal strings (they overflow machine words past small k); x and d are
/// decimal reals. cA/cT are configurable stand-ins for constants the source
/// lemmas never state; logBase 0 selects the natural logarithm.
struct PipelineParameters {
    int k = 0;
    double alpha = 0.0;
    double eps = 0.0;
    double cA = 1.0;
    double cT = 1.0;
    double logBase = 0.0;
    unsigned precisionDigits = 0;

    std::string a;    // ceil(cA * k^2 * sqrt(1 + log k))
    std::string d3;   // ceil(cT * k * sqrt(log k))
    std::string d2;   // ceil(2^9*5 * (e*4a^2*d3)^alpha)
    std::string d1;   // ceil(2^9*5 * (e*4a^2*d2)^alpha)
    std::string b;    // ceil((e*4a^2*d1^2)^alpha)
    std::string x;    // (e*4a^2*d1)^alpha + 1
    std::string d;    // d1^alpha / (2^9*5)

    std::string chainSlack;  // b - (x*d + (d-1)), nonnegative
    bool chainOk = false;    // d1 > d2 > d3 and x*d + (d-1) <= b
};

/// Epsilon on the boundary of alpha(1-eps) >= 1+eps, i.e. (alpha-1)/(alpha+1).
double boundaryEps(double alpha);

/// Evaluates the parameter chain. Requires k >= 2, alpha > 1, 0 < eps < 1 and
/// alpha(1-eps) >= 1+eps (InputError otherwise). Working precision starts at
/// the BRAMBLE_PRECISION env default and is raised automatically from a
/// magnitude estimate; exceeding the hard ceiling reports precision overflow
/// (GuardError). Chain violations are InternalError: given valid inputs the
/// chain is a theorem.
PipelineParameters computeParameters(int k, double alpha, double eps, double cA = 1.0,
                                     double cT = 1.0, double logBase = 0.0);

/// Conflict graphs over a family collection: vertices index the collection;
/// pair {p,q} becomes an edge of H_i iff the intersection graph of
/// families[p] ∪ families[q] is NOT d_i-degenerate. Requires d1 >= d2, which
/// makes E(H1) ⊆ E(H2).
std::pair<Ugraph, Ugraph> buildConflictGraphs(
    const std::vector<std::vector<VertexPath>>& families, long long d1, long long d2);

/// Outcome of the three-case classification over pair indices V:
///   case 1: V \ (V(M1) ∪ Z) covers >= 0.6|V|
///   case 2: V(M1) ∪ V(M2) ∪ Z covers >= 0.6|V|
///   case 3: V \ V(M2) covers >= 0.6|V|
/// where M1 is a maximum matching of H1 - Z and M2 a maximum matching of H2
/// minus Z-internal edges and V(M1). At least one case always holds.
struct CaseReport {
    std::vector<std::pair<int, int>> pairLabels;  // labels of V's elements
    std::vector<int> z;
    std::vector<std::pair<int, int>> m1, m2;
    int verdict = 0;            // 1, 2 or 3 (first satisfied in that order)
    std::vector<int> witness;   // members of the verdict set, ascending
};

/// Runs the classifier. pairLabels fixes |V|; z holds indices into it; h1/h2
/// are graphs on |V| vertices. Throws InputError on inconsistent sizes.
CaseReport classifyCase(const std::vector<std::pair<int, int>>& pairLabels,
                        const std::vector<int>& z, const Ugraph& h1, const Ugraph& h2);

}  // namespace bramble
