#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace oracle {

using bramble::DdpInstance;
using bramble::DdpSolution;
using bramble::Digraph;
using bramble::PartitionedConflictGraph;
using bramble::Ugraph;
using bramble::VertexPath;

std::vector<std::vector<bool>> reachMatrix(const Digraph& d) {
    int n = d.vertexCount();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) {
        r[v][v] = true;
        for (int w : d.outNeighbors(v)) r[v][w] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (r[i][k])
                for (int j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

bool isStrongOracle(const Digraph& d) {
    int n = d.vertexCount();
    if (n == 0) return false;
    auto r = reachMatrix(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!r[i][j]) return false;
    return true;
}

std::vector<std::vector<int>> sccOracle(const Digraph& d) {
    int n = d.vertexCount();
    auto r = reachMatrix(d);
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        out.emplace_back();
        for (int w = v; w < n; ++w)
            if (comp[w] == -1 && r[v][w] && r[w][v]) {
                comp[w] = static_cast<int>(out.size()) - 1;
                out.back().push_back(w);
            }
    }
    return out;
}

namespace {

Digraph deleteVertices(const Digraph& d, const std::vector<int>& del) {
    std::vector<bool> gone(d.vertexCount(), false);
    for (int v : del) gone[v] = true;
    Digraph h(d.vertexCount());
    for (auto [u, v] : d.edges())
        if (!gone[u] && !gone[v]) h.addEdge(u, v);
    return h;
}

}  // namespace

bool separates(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b,
               const std::vector<int>& sep) {
    std::vector<bool> gone(d.vertexCount(), false);
    for (int v : sep) gone[v] = true;
    Digraph h = deleteVertices(d, sep);
    auto r = reachMatrix(h);
    for (int u : a) {
        if (gone[u]) continue;
        for (int v : b)
            if (!gone[v] && r[u][v]) return false;
    }
    return true;
}

int bruteMinSeparatorSize(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b,
                          int maxSize) {
    int n = d.vertexCount();
    for (int s = 0; s <= maxSize; ++s) {
        std::vector<int> pick(s);
        std::function<bool(int, int)> go = [&](int idx, int from) -> bool {
            if (idx == s) return separates(d, a, b, pick);
            for (int v = from; v < n; ++v) {
                pick[idx] = v;
                if (go(idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (go(0, 0)) return s;
    }
    return maxSize + 1;
}

int pathPackingOracle(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b) {
    int n = d.vertexCount();
    std::vector<bool> inA(n, false), inB(n, false);
    for (int v : a) inA[v] = true;
    for (int v : b) inB[v] = true;
    std::unordered_map<std::uint64_t, int> memo;

    std::function<int(std::uint64_t)> best = [&](std::uint64_t used) -> int {
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        int result = 0;
        // enumerate every simple A->B path avoiding `used`, take the best
        std::vector<int> cur;
        std::function<void(int, std::uint64_t)> walk = [&](int v, std::uint64_t mask) {
            cur.push_back(v);
            mask |= 1ull << v;
            if (inB[v]) result = std::max(result, 1 + best(used | mask));
            for (int w : d.outNeighbors(v))
                if (!((used | mask) >> w & 1)) walk(w, mask);
            cur.pop_back();
        };
        for (int s = 0; s < n; ++s)
            if (inA[s] && !(used >> s & 1)) walk(s, 0);
        memo[used] = result;
        return result;
    };
    return best(0);
}

int strongConnectivityBrute(const Digraph& d) {
    int n = d.vertexCount();
    // strongness restricted to the survivors; deleteVertices keeps vertex ids
    // stable, so deleted vertices linger as isolated nodes we must ignore
    auto strongAmongSurvivors = [&](const std::vector<int>& del) {
        std::vector<bool> gone(n, false);
        for (int v : del) gone[v] = true;
        auto r = reachMatrix(deleteVertices(d, del));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!gone[i] && !gone[j] && !r[i][j]) return false;
        return true;
    };
    for (int s = 0; s <= n - 2; ++s) {
        std::vector<int> pick(s);
        std::function<bool(int, int)> go = [&](int idx, int from) -> bool {
            if (idx == s) return !strongAmongSurvivors(pick);
            for (int v = from; v < n; ++v) {
                pick[idx] = v;
                if (go(idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (go(0, 0)) return s;
    }
    return n - 1;
}

bool naiveBrambleCheck(const Digraph& d, const std::vector<std::vector<int>>& rawBags) {
    // dedupe as sets first, mirroring the definition's "no two copies"
    std::set<std::set<int>> seen;
    std::vector<std::set<int>> bags;
    for (const auto& b : rawBags) {
        std::set<int> s(b.begin(), b.end());
        if (s.empty()) return false;
        if (seen.insert(s).second) bags.push_back(std::move(s));
    }
    if (bags.empty()) return false;
    for (const auto& bag : bags) {
        // strongness of the induced subgraph, from scratch
        std::vector<int> keep(bag.begin(), bag.end());
        int m = static_cast<int>(keep.size());
        std::map<int, int> id;
        for (int i = 0; i < m; ++i) id[keep[i]] = i;
        std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i) {
            r[i][i] = true;
            for (int w : d.outNeighbors(keep[i]))
                if (id.count(w)) r[i][id[w]] = true;
        }
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i)
                if (r[i][k])
                    for (int j = 0; j < m; ++j)
                        if (r[k][j]) r[i][j] = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!r[i][j]) return false;
    }
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (std::size_t j = i + 1; j < bags.size(); ++j) {
            bool meet = false;
            for (int v : bags[i])
                if (bags[j].count(v)) { meet = true; break; }
            if (meet) continue;
            bool ij = false, ji = false;
            for (int u : bags[i])
                for (int v : bags[j]) {
                    if (d.hasEdge(u, v)) ij = true;
                    if (d.hasEdge(v, u)) ji = true;
                }
            if (!(ij && ji)) return false;
        }
    return true;
}

int hittingSetEnumOracle(const std::vector<std::vector<int>>& rawBags, int cap) {
    std::set<std::set<int>> dedup;
    for (const auto& b : rawBags) dedup.insert(std::set<int>(b.begin(), b.end()));
    std::vector<std::set<int>> bags(dedup.begin(), dedup.end());
    std::set<int> uniSet;
    for (const auto& b : bags) uniSet.insert(b.begin(), b.end());
    std::vector<int> uni(uniSet.begin(), uniSet.end());
    int u = static_cast<int>(uni.size());
    for (int s = 0; s <= cap; ++s) {
        std::vector<int> pick(s);
        std::function<bool(int, int)> go = [&](int idx, int from) -> bool {
            if (idx == s) {
                for (const auto& bag : bags) {
                    bool hit = false;
                    for (int i = 0; i < s; ++i)
                        if (bag.count(pick[i])) { hit = true; break; }
                    if (!hit) return false;
                }
                return true;
            }
            for (int i = from; i < u; ++i) {
                pick[idx] = uni[i];
                if (go(idx + 1, i + 1)) return true;
            }
            return false;
        };
        if (go(0, 0)) return s;
    }
    return cap + 1;
}

bool wellLinkedOracle(const Digraph& d, const std::vector<int>& a) {
    int m = static_cast<int>(a.size());
    std::vector<int> label(m, 0);  // 0 = out, 1 = X, 2 = Y
    while (true) {
        std::vector<int> x, y;
        for (int i = 0; i < m; ++i) {
            if (label[i] == 1) x.push_back(a[i]);
            if (label[i] == 2) y.push_back(a[i]);
        }
        if (!x.empty() && x.size() == y.size())
            if (pathPackingOracle(d, x, y) < static_cast<int>(x.size())) return false;
        int i = 0;
        while (i < m && label[i] == 2) label[i++] = 0;
        if (i == m) break;
        ++label[i];
    }
    return true;
}

bool ddpBruteForceFeasible(const DdpInstance& inst) {
    int k = static_cast<int>(inst.sources.size());
    int n = inst.d.vertexCount();
    // all simple paths per pair
    std::vector<std::vector<std::vector<int>>> pathsPerPair(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> cur;
        std::vector<bool> on(n, false);
        std::function<void(int)> dfs = [&](int v) {
            cur.push_back(v);
            on[v] = true;
            if (v == inst.sinks[i]) {
                pathsPerPair[i].push_back(cur);
            } else {
                for (int w : inst.d.outNeighbors(v))
                    if (!on[w]) dfs(w);
            }
            on[v] = false;
            cur.pop_back();
        };
        dfs(inst.sources[i]);
        if (pathsPerPair[i].empty()) return false;
    }
    std::vector<int> load(n, 0);
    std::function<bool(int)> pickPath = [&](int i) -> bool {
        if (i == k) return true;
        for (const auto& p : pathsPerPair[i]) {
            bool fits = true;
            for (int v : p)
                if (load[v] + 1 > inst.budget) { fits = false; break; }
            if (!fits) continue;
            for (int v : p) ++load[v];
            if (pickPath(i + 1)) return true;
            for (int v : p) --load[v];
        }
        return false;
    };
    return pickPath(0);
}

std::map<int, int> loadRecount(const DdpSolution& sol) {
    std::map<int, int> load;
    for (const auto& p : sol.paths)
        for (int v : p.vertices) ++load[v];
    return load;
}

int degeneracyBrute(const Ugraph& g) {
    int n = g.vertexCount();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int minDeg = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int deg = 0;
            for (int w : g.neighbors(v))
                if (mask >> w & 1) ++deg;
            minDeg = std::min(minDeg, deg);
        }
        best = std::max(best, minDeg);
    }
    return best;
}

int matchingBrute(const Ugraph& g) {
    int n = g.vertexCount();
    std::function<int(int, std::uint64_t)> go = [&](int v, std::uint64_t used) -> int {
        if (v == n) return 0;
        if (used >> v & 1) return go(v + 1, used);
        int best = go(v + 1, used);  // leave v unmatched
        for (int w : g.neighbors(v))
            if (w > v && !(used >> w & 1))
                best = std::max(best, 1 + go(v + 1, used | (1ull << v) | (1ull << w)));
        return best;
    };
    return go(0, 0);
}

bool transversalBruteFeasible(const PartitionedConflictGraph& p) {
    int r = p.r(), t = p.t();
    std::vector<int> pick(r, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int j = i + 1; j < r && ok; ++j)
                if (p.graph.hasEdge(p.parts[i][pick[i]], p.parts[j][pick[j]])) ok = false;
        if (ok) return true;
        int i = 0;
        while (i < r && pick[i] == t - 1) pick[i++] = 0;
        if (i == r) return false;
        ++pick[i];
    }
}

bool lllConditionDirect(long long t, double b, int r, double eps) {
    long double lhs = std::pow(static_cast<long double>(t), static_cast<long double>(1.0 - eps));
    long double base = std::exp(1.0L) * 4.0L * static_cast<long double>(b) * (r - 1);
    long double rhs = std::pow(base, static_cast<long double>(1.0 + eps));
    return lhs >= rhs;
}

std::vector<std::pair<int, int>> intersectionEdgesOracle(
    const std::vector<std::vector<VertexPath>>& families) {
    std::vector<std::set<int>> sets;
    for (const auto& fam : families)
        for (const auto& p : fam) sets.emplace_back(p.vertices.begin(), p.vertices.end());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            bool meet = false;
            for (int v : sets[i])
                if (sets[j].count(v)) { meet = true; break; }
            if (meet) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return edges;
}

std::uint64_t uniformBelow(std::uint64_t raw, std::uint64_t m, bool& accepted) {
    std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % m);
    accepted = raw < bound;
    return raw % m;
}

}  // namespace oracle
