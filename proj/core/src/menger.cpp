#include "bramble/menger.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "bramble/errors.hpp"

namespace bramble {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// minimal arc-list max-flow network with BFS (shortest augmenting path)
// augmentation; paired forward/backward arcs at indices 2i, 2i+1
struct FlowNet {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> head;

    explicit FlowNet(int nodes) : head(nodes) {}

    int addArc(int from, int to, int cap) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({to, cap});
        arcs.push_back({from, 0});
        head[from].push_back(id);
        head[to].push_back(id + 1);
        return id;
    }

    // one augmentation of value min(bottleneck, not exceeding unit split arcs
    // in practice); returns the pushed amount, 0 when the sink is unreachable
    int augment(int s, int t) {
        std::vector<int> via(head.size(), -1);
        std::vector<int> seen(head.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int id : head[v]) {
                int w = arcs[id].to;
                if (!seen[w] && arcs[id].cap > 0) {
                    seen[w] = 1;
                    via[w] = id;
                    q.push(w);
                }
            }
        }
        if (!seen[t]) return 0;
        int push = kInf;
        for (int v = t; v != s; v = arcs[via[v] ^ 1].to) push = std::min(push, arcs[via[v]].cap);
        for (int v = t; v != s; v = arcs[via[v] ^ 1].to) {
            arcs[via[v]].cap -= push;
            arcs[via[v] ^ 1].cap += push;
        }
        return push;
    }

    int maxFlow(int s, int t, int limit = kInf) {
        int total = 0;
        while (total < limit) {
            int got = augment(s, t);
            if (got == 0) break;
            total += got;
        }
        return total;
    }

    std::vector<bool> residualReach(int s) const {
        std::vector<bool> seen(head.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : head[v]) {
                int w = arcs[id].to;
                if (!seen[w] && arcs[id].cap > 0) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        return seen;
    }
};

void checkTerminalSet(const Digraph& d, const std::vector<int>& s, const char* name) {
    if (s.empty()) throw InputError(std::string("menger: ") + name + " must be non-empty");
    std::set<int> seen;
    for (int v : s) {
        if (v < 0 || v >= d.vertexCount())
            throw InputError(std::string("menger: ") + name + " vertex " + std::to_string(v) +
                             " out of range");
        if (!seen.insert(v).second)
            throw InputError(std::string("menger: ") + name + " repeats vertex " +
                             std::to_string(v));
    }
}

// local connectivity u -> v for a non-adjacent pair: max internally disjoint
// paths, computed on the vertex-split network with no split arcs at u, v
int localCut(const Digraph& d, int u, int v, int limit) {
    int n = d.vertexCount();
    FlowNet net(2 * n);
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) net.addArc(2 * w, 2 * w + 1, 1);
    for (auto [x, y] : d.edges()) net.addArc(2 * x + 1, 2 * y, kInf);
    return net.maxFlow(2 * u + 1, 2 * v, limit);
}

}  // namespace

SeparatorCertificate mengerPathsAndSeparator(const Digraph& d, const std::vector<int>& a,
                                             const std::vector<int>& b) {
    checkTerminalSet(d, a, "A");
    checkTerminalSet(d, b, "B");
    std::set<int> as(a.begin(), a.end()), bs(b.begin(), b.end());
    if (as == bs) throw InputError("menger: A and B must differ as sets");

    int n = d.vertexCount();
    int src = 2 * n, snk = 2 * n + 1;
    FlowNet net(2 * n + 2);
    // remember arc ids to read flow back out (flow on 2i == cap on 2i+1)
    std::vector<int> splitArc(n), srcArc(n, -1), snkArc(n, -1);
    for (int v = 0; v < n; ++v) splitArc[v] = net.addArc(2 * v, 2 * v + 1, 1);
    std::vector<std::vector<std::pair<int, int>>> edgeArc(n);  // u -> (v, arc id)
    for (auto [u, v] : d.edges()) edgeArc[u].push_back({v, net.addArc(2 * u + 1, 2 * v, kInf)});
    for (int v : a) srcArc[v] = net.addArc(src, 2 * v, kInf);
    for (int v : b) snkArc[v] = net.addArc(2 * v + 1, snk, kInf);

    int value = net.maxFlow(src, snk);
    // snapshot the cut side now: the decomposition walk below cancels flow
    auto reach = net.residualReach(src);

    auto flowOn = [&](int id) { return net.arcs[id ^ 1].cap; };
    auto consume = [&](int id) {
        net.arcs[id].cap += 1;
        net.arcs[id ^ 1].cap -= 1;
    };

    SeparatorCertificate cert;
    // walk the flow decomposition from each source vertex, ascending
    std::vector<int> aSorted(as.begin(), as.end());
    for (int s : aSorted) {
        while (srcArc[s] != -1 && flowOn(srcArc[s]) > 0) {
            consume(srcArc[s]);
            std::vector<int> path;
            int cur = s;
            while (true) {
                if (flowOn(splitArc[cur]) <= 0)
                    throw InternalError("menger: flow walk lost conservation");
                consume(splitArc[cur]);
                path.push_back(cur);
                if (snkArc[cur] != -1 && flowOn(snkArc[cur]) > 0) {
                    consume(snkArc[cur]);
                    break;
                }
                int nxt = -1;
                for (auto [w, id] : edgeArc[cur])
                    if (flowOn(id) > 0) {
                        consume(id);
                        nxt = w;
                        break;
                    }
                if (nxt == -1) throw InternalError("menger: flow walk reached a dead end");
                cur = nxt;
            }
            cert.paths.push_back(VertexPath(std::move(path)));
        }
    }
    if (static_cast<int>(cert.paths.size()) != value)
        throw InternalError("menger: path decomposition does not match the flow value");

    // min cut touches split arcs only (all other arcs are effectively infinite)
    for (int v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) cert.separator.push_back(v);
    if (cert.separator.size() != cert.paths.size())
        throw InternalError("menger: separator size does not match the path count");
    return cert;
}

bool verifySeparatorCertificate(const Digraph& d, const std::vector<int>& a,
                                const std::vector<int>& b, const SeparatorCertificate& cert,
                                std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    checkTerminalSet(d, a, "A");
    checkTerminalSet(d, b, "B");
    std::set<int> as(a.begin(), a.end()), bs(b.begin(), b.end());

    std::set<int> used;
    for (const auto& p : cert.paths) {
        std::string sub;
        if (!p.validIn(d, &sub)) return fail("invalid path: " + sub);
        if (!as.count(p.first())) return fail("path does not start in A");
        if (!bs.count(p.last())) return fail("path does not end in B");
        for (int v : p.vertices)
            if (!used.insert(v).second)
                return fail("paths share vertex " + std::to_string(v));
    }

    if (!std::is_sorted(cert.separator.begin(), cert.separator.end()) ||
        std::adjacent_find(cert.separator.begin(), cert.separator.end()) !=
            cert.separator.end())
        return fail("separator is not sorted ascending without repeats");
    for (int v : cert.separator)
        if (v < 0 || v >= d.vertexCount()) return fail("separator vertex out of range");
    if (cert.separator.size() != cert.paths.size())
        return fail("separator and path family sizes differ");

    // deletion really separates: no surviving A vertex reaches a surviving B
    // vertex (a surviving vertex of A ∩ B counts as a zero-length path)
    std::set<int> sep(cert.separator.begin(), cert.separator.end());
    std::vector<int> survivors;
    for (int v : a)
        if (!sep.count(v)) survivors.push_back(v);
    if (survivors.empty()) return true;
    Digraph cut(d.vertexCount());
    for (auto [u, v] : d.edges())
        if (!sep.count(u) && !sep.count(v)) cut.addEdge(u, v);
    auto reach = reachableFrom(cut, survivors);
    for (int v : b)
        if (!sep.count(v) && reach[v])
            return fail("separator misses a path to " + std::to_string(v));
    return true;
}

int strongConnectivity(const Digraph& d) {
    int n = d.vertexCount();
    if (n < 2) throw InputError("strongConnectivity: need at least two vertices");
    if (!isStronglyConnected(d)) return 0;
    int best = n - 1;
    for (int u = 0; u < n && best > 0; ++u)
        for (int v = 0; v < n && best > 0; ++v)
            if (u != v && !d.hasEdge(u, v)) best = std::min(best, localCut(d, u, v, best + 1));
    return best;
}

bool isKStrong(const Digraph& d, int k) {
    if (k < 0) throw InputError("isKStrong: k must be nonnegative");
    int n = d.vertexCount();
    if (k == 0) return n >= 1;
    if (n < k + 1) return false;
    // cheap necessary condition before any flow runs
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(d.outNeighbors(v).size()) < k ||
            static_cast<int>(d.inNeighbors(v).size()) < k)
            return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !d.hasEdge(u, v) && localCut(d, u, v, k) < k) return false;
    return true;
}

}  // namespace bramble
