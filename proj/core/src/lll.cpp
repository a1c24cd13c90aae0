#include "bramble/lll.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "bigfloat.hpp"
#include "bramble/errors.hpp"

namespace bramble {

IntersectionGraph buildIntersectionGraph(const std::vector<std::vector<VertexPath>>& families) {
    IntersectionGraph ig;
    for (std::size_t f = 0; f < families.size(); ++f)
        for (std::size_t m = 0; m < families[f].size(); ++m) {
            const auto& vs = families[f][m].vertices;
            if (vs.empty()) throw InputError("empty path in family " + std::to_string(f));
            for (int v : vs)
                if (v < 0) throw InputError("negative vertex in family " + std::to_string(f));
            std::vector<int> sorted(vs);
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            ig.members.push_back({static_cast<int>(f), static_cast<int>(m)});
            ig.memberVertices.push_back(std::move(sorted));
        }
    int n = static_cast<int>(ig.members.size());
    ig.graph = Ugraph(n);
    std::map<int, std::vector<int>> hosts;  // host vertex -> members containing it
    for (int i = 0; i < n; ++i)
        for (int v : ig.memberVertices[i]) hosts[v].push_back(i);
    for (const auto& [v, ms] : hosts)
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i + 1; j < ms.size(); ++j) ig.graph.addEdge(ms[i], ms[j]);
    return ig;
}

DegeneracyResult degeneracy(const Ugraph& g) {
    int n = g.vertexCount();
    DegeneracyResult res;
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    std::vector<std::set<int>> buckets(n == 0 ? 1 : n);
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(g.neighbors(v).size());
        buckets[deg[v]].insert(v);
    }
    int lowest = 0;
    for (int round = 0; round < n; ++round) {
        while (buckets[lowest].empty()) ++lowest;
        int v = *buckets[lowest].begin();
        buckets[lowest].erase(buckets[lowest].begin());
        gone[v] = true;
        res.degeneracy = std::max(res.degeneracy, deg[v]);
        res.order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (gone[w]) continue;
            buckets[deg[w]].erase(w);
            deg[w] -= 1;
            buckets[deg[w]].insert(w);
            if (deg[w] < lowest) lowest = deg[w];
        }
    }
    return res;
}

LllCheckResult checkPolyLllCondition(long long t, double b, int r, double eps) {
    if (t < 1) throw InputError("t must be >= 1");
    if (!(b >= 0.0)) throw InputError("degeneracy bound b must be >= 0");
    if (r < 2) throw InputError("r must be >= 2");
    if (!(eps > 0.0) || !(eps < 1.0)) throw InputError("eps must lie strictly in (0,1)");

    LllCheckResult res;
    if (b == 0.0) {
        // rhs collapses to 0: no dependencies, the condition is free
        res.pass = true;
        res.slack = std::numeric_limits<double>::infinity();
        res.slackDecimal = "inf";
        return res;
    }
    detail::PrecisionGuard guard(detail::envPrecisionDigits());
    using detail::Big;
    Big e = exp(Big(1));
    Big lhs = pow(Big(t), 1 - Big(eps));
    Big rhs = pow(e * 4 * Big(b) * (r - 1), 1 + Big(eps));
    Big slack = lhs / rhs;
    res.pass = lhs >= rhs;
    res.slack = slack.convert_to<double>();
    res.slackDecimal = slack.str();
    return res;
}

double classicalLllThreshold(double b, int r) {
    if (!(b >= 0.0)) throw InputError("degeneracy bound b must be >= 0");
    if (r < 2) throw InputError("r must be >= 2");
    return std::exp(1.0) * 2.0 * b * (r - 1);
}

namespace {

// part index per graph vertex, or -1 when uncovered
std::vector<int> partOf(const PartitionedConflictGraph& p) {
    std::vector<int> owner(p.graph.vertexCount(), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int v : p.parts[i]) {
            if (v >= 0 && v < p.graph.vertexCount()) owner[v] = static_cast<int>(i);
        }
    return owner;
}

Ugraph inducedPairUnion(const PartitionedConflictGraph& p, int i, int j) {
    std::vector<int> both = p.parts[i];
    both.insert(both.end(), p.parts[j].begin(), p.parts[j].end());
    std::map<int, int> id;
    for (std::size_t x = 0; x < both.size(); ++x) id[both[x]] = static_cast<int>(x);
    Ugraph sub(static_cast<int>(both.size()));
    for (auto [u, v] : p.graph.edges()) {
        auto iu = id.find(u), iv = id.find(v);
        if (iu != id.end() && iv != id.end()) sub.addEdge(iu->second, iv->second);
    }
    return sub;
}

// unbiased uniform draw from [0, m)
std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t m) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % m;
    while (true) {
        std::uint64_t raw = rng();
        if (raw < limit) return raw % m;
    }
}

}  // namespace

PcgReport validatePartitionedConflictGraph(const PartitionedConflictGraph& p) {
    PcgReport rep;
    if (p.parts.empty()) {
        rep.message = "no parts";
        return rep;
    }
    if (!(p.degeneracyBound >= 0.0)) {
        rep.message = "degeneracy bound must be >= 0";
        return rep;
    }
    std::size_t t = p.parts.front().size();
    if (t == 0) {
        rep.message = "part 0 is empty";
        return rep;
    }
    std::vector<bool> covered(p.graph.vertexCount(), false);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].size() != t) {
            rep.message = "part " + std::to_string(i) + " has size " +
                          std::to_string(p.parts[i].size()) + ", expected " + std::to_string(t);
            return rep;
        }
        for (int v : p.parts[i]) {
            if (v < 0 || v >= p.graph.vertexCount()) {
                rep.message = "part " + std::to_string(i) + " lists out-of-range vertex " +
                              std::to_string(v);
                return rep;
            }
            if (covered[v]) {
                rep.message = "vertex " + std::to_string(v) + " appears in two parts";
                return rep;
            }
            covered[v] = true;
        }
    }
    for (int v = 0; v < p.graph.vertexCount(); ++v)
        if (!covered[v]) {
            rep.message = "vertex " + std::to_string(v) + " belongs to no part";
            return rep;
        }
    long long cap = static_cast<long long>(std::floor(p.degeneracyBound));
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
            int deg = degeneracy(inducedPairUnion(p, static_cast<int>(i), static_cast<int>(j)))
                          .degeneracy;
            if (deg > cap) {
                rep.message = "parts " + std::to_string(i) + "," + std::to_string(j) +
                              " induce degeneracy " + std::to_string(deg) + " > floor(b) = " +
                              std::to_string(cap);
                return rep;
            }
        }
    rep.ok = true;
    rep.message = "partitioned conflict graph verifies";
    return rep;
}

std::vector<std::pair<int, int>> crossEdges(const PartitionedConflictGraph& p) {
    auto owner = partOf(p);
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : p.graph.edges())
        if (owner[u] != -1 && owner[v] != -1 && owner[u] != owner[v]) out.push_back({u, v});
    return out;
}

double dependencyBound(const PartitionedConflictGraph& p) {
    return 4.0 * p.degeneracyBound * (p.r() - 1);
}

RisResult rainbowIndependentSet(const PartitionedConflictGraph& p, std::uint64_t seed,
                                long long resampleCap, const RisOptions& opts) {
    auto rep = validatePartitionedConflictGraph(p);
    if (!rep.ok) throw InputError("invalid conflict graph: " + rep.message);
    if (resampleCap < 0) throw InputError("resampleCap must be >= 0");
    if (opts.checkCondition && p.degeneracyBound > 0.0) {
        auto check = checkPolyLllCondition(p.t(), p.degeneracyBound, p.r(), opts.eps);
        if (!check.pass)
            throw InputError("poly condition fails at t=" + std::to_string(p.t()) +
                             ", b=" + std::to_string(p.degeneracyBound) +
                             ", r=" + std::to_string(p.r()) + ", eps=" + std::to_string(opts.eps));
    }

    int r = p.r(), t = p.t();
    auto owner = partOf(p);
    std::mt19937_64 rng(seed);
    std::vector<int> pick(r);  // index into each part
    for (int i = 0; i < r; ++i) pick[i] = static_cast<int>(drawBelow(rng, t));

    RisResult res;
    while (true) {
        // lowest (min,max) violated selected pair; r^2 adjacency probes beat
        // scanning the edge list since selections change two parts at a time
        int bu = -1, bv = -1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                int u = p.parts[i][pick[i]], v = p.parts[j][pick[j]];
                if (!p.graph.hasEdge(u, v)) continue;
                int lo = std::min(u, v), hi = std::max(u, v);
                if (bu == -1 || lo < bu || (lo == bu && hi < bv)) {
                    bu = lo;
                    bv = hi;
                }
            }
        if (bu == -1) {
            res.status = RisStatus::Found;
            for (int i = 0; i < r; ++i) res.selection.push_back(p.parts[i][pick[i]]);
            return res;
        }
        if (res.resamples >= resampleCap) {
            res.status = RisStatus::CapExceeded;
            res.selection.clear();
            return res;
        }
        pick[owner[bu]] = static_cast<int>(drawBelow(rng, t));
        pick[owner[bv]] = static_cast<int>(drawBelow(rng, t));
        res.resamples += 1;
    }
}

PartitionedConflictGraph degreePrune(const PartitionedConflictGraph& p) {
    auto rep = validatePartitionedConflictGraph(p);
    if (!rep.ok) throw InputError("invalid conflict graph: " + rep.message);
    int r = p.r(), t = p.t();
    auto owner = partOf(p);
    std::vector<int> cross(p.graph.vertexCount(), 0);
    for (auto [u, v] : p.graph.edges())
        if (owner[u] != owner[v]) {
            cross[u] += 1;
            cross[v] += 1;
        }
    int keep = (t + 1) / 2;
    double bound = 4.0 * t * (r - 1) * p.degeneracyBound;
    std::vector<int> survivors;
    std::vector<std::vector<int>> newParts(r);
    for (int i = 0; i < r; ++i) {
        std::vector<int> order = p.parts[i];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cross[a] != cross[b] ? cross[a] < cross[b] : a < b;
        });
        order.resize(keep);
        std::sort(order.begin(), order.end());
        for (int v : order) {
            if (static_cast<double>(cross[v]) > bound)
                throw InternalError("kept vertex " + std::to_string(v) + " has cross degree " +
                                    std::to_string(cross[v]) + " above 4t(r-1)b");
            newParts[i].push_back(static_cast<int>(survivors.size()));
            survivors.push_back(v);
        }
    }
    std::map<int, int> newId;
    for (std::size_t i = 0; i < survivors.size(); ++i) newId[survivors[i]] = static_cast<int>(i);
    PartitionedConflictGraph out;
    out.graph = Ugraph(static_cast<int>(survivors.size()));
    for (auto [u, v] : p.graph.edges()) {
        auto iu = newId.find(u), iv = newId.find(v);
        if (iu != newId.end() && iv != newId.end()) out.graph.addEdge(iu->second, iv->second);
    }
    out.parts = std::move(newParts);
    out.degeneracyBound = p.degeneracyBound;
    return out;
}

}  // namespace bramble
