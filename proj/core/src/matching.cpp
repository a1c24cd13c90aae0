#include "bramble/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace bramble {

namespace {

// classic O(V^3) blossom search: BFS an alternating tree from each free
// vertex, contracting odd cycles via the base[] indirection
struct BlossomSearch {
    const Ugraph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<bool> used, inBlossom;

    explicit BlossomSearch(const Ugraph& graph)
        : g(graph), n(graph.vertexCount()), match(n, -1), parent(n, -1), base(n),
          used(n, false), inBlossom(n, false) {}

    int lowestCommonBase(int a, int b) {
        std::vector<bool> onPath(n, false);
        while (true) {
            a = base[a];
            onPath[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (onPath[b]) return b;
            b = parent[match[b]];
        }
    }

    void markPath(int v, int b, int child) {
        while (base[v] != b) {
            inBlossom[base[v]] = true;
            inBlossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool growFrom(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        std::queue<int> q;
        q.push(root);
        used[root] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom around the common base
                    int b = lowestCommonBase(v, to);
                    std::fill(inBlossom.begin(), inBlossom.end(), false);
                    markPath(v, b, to);
                    markPath(to, b, v);
                    for (int i = 0; i < n; ++i)
                        if (inBlossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        // augment along the tree path
                        int u = to;
                        while (u != -1) {
                            int pv = parent[u], next = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = next;
                        }
                        return true;
                    }
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }
};

}  // namespace

std::vector<std::pair<int, int>> maximumMatching(const Ugraph& g) {
    BlossomSearch s(g);
    for (int v = 0; v < s.n; ++v)
        if (s.match[v] == -1) s.growFrom(v);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < s.n; ++v)
        if (s.match[v] > v) out.push_back({v, s.match[v]});
    return out;
}

}  // namespace bramble
