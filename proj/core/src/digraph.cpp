#include "bramble/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "bramble/errors.hpp"

namespace bramble {

Digraph::Digraph(int n) {
    if (n < 0) throw InputError("digraph: vertex count must be nonnegative");
    out_.resize(n);
    in_.resize(n);
}

Digraph Digraph::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
    Digraph d(n);
    for (auto [u, v] : edges) d.addEdge(u, v);
    return d;
}

void Digraph::checkVertex(int v) const {
    if (v < 0 || v >= vertexCount())
        throw InputError("digraph: vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertexCount()) + ")");
}

void Digraph::addEdge(int u, int v) {
    checkVertex(u);
    checkVertex(v);
    if (u == v) return;
    auto& ou = out_[u];
    auto it = std::lower_bound(ou.begin(), ou.end(), v);
    if (it != ou.end() && *it == v) return;
    ou.insert(it, v);
    auto& iv = in_[v];
    iv.insert(std::lower_bound(iv.begin(), iv.end(), u), u);
    ++edgeCount_;
}

bool Digraph::hasEdge(int u, int v) const {
    checkVertex(u);
    checkVertex(v);
    const auto& ou = out_[u];
    return std::binary_search(ou.begin(), ou.end(), v);
}

const std::vector<int>& Digraph::outNeighbors(int v) const {
    checkVertex(v);
    return out_[v];
}

const std::vector<int>& Digraph::inNeighbors(int v) const {
    checkVertex(v);
    return in_[v];
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(edgeCount_);
    for (int u = 0; u < vertexCount(); ++u)
        for (int v : out_[u]) e.push_back({u, v});
    return e;  // outer loop ascending, lists sorted: lexicographic already
}

bool Digraph::operator==(const Digraph& other) const { return out_ == other.out_; }

bool VertexPath::validIn(const Digraph& d, std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (vertices.empty()) return fail("path is empty");
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= d.vertexCount())
            return fail("path vertex " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            return fail("path repeats vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!d.hasEdge(vertices[i], vertices[i + 1]))
            return fail("missing edge " + std::to_string(vertices[i]) + "->" +
                        std::to_string(vertices[i + 1]));
    return true;
}

std::vector<bool> reachableFrom(const Digraph& d, const std::vector<int>& sources) {
    std::vector<bool> seen(d.vertexCount(), false);
    std::queue<int> q;
    for (int s : sources) {
        if (s < 0 || s >= d.vertexCount())
            throw InputError("reachableFrom: source out of range");
        if (!seen[s]) {
            seen[s] = true;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : d.outNeighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
    }
    return seen;
}

namespace {

// iterative Tarjan; the recursion depth of the textbook version overflows on
// long paths
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, low, comp;
    std::vector<bool> onStack;
    std::vector<int> stack;
    int next = 0, comps = 0;

    explicit TarjanState(const Digraph& g)
        : d(g),
          index(g.vertexCount(), -1),
          low(g.vertexCount(), 0),
          comp(g.vertexCount(), -1),
          onStack(g.vertexCount(), false) {}

    void run(int root) {
        // frame: (vertex, next out-neighbour offset)
        std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        onStack[root] = true;
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            const auto& out = d.outNeighbors(v);
            if (i < out.size()) {
                int w = out[i++];
                if (index[w] == -1) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    onStack[w] = true;
                    frames.push_back({w, 0});
                } else if (onStack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        onStack[w] = false;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strongComponents(const Digraph& d) {
    int n = d.vertexCount();
    TarjanState t(d);
    for (int v = 0; v < n; ++v)
        if (t.index[v] == -1) t.run(v);
    std::vector<std::vector<int>> byComp(t.comps);
    for (int v = 0; v < n; ++v) byComp[t.comp[v]].push_back(v);  // ascending per comp
    std::sort(byComp.begin(), byComp.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return byComp;
}

bool isStronglyConnected(const Digraph& d) {
    if (d.vertexCount() == 0) return false;
    return strongComponents(d).size() == 1;
}

bool isStronglyConnectedSubset(const Digraph& d, const std::vector<int>& vertices) {
    if (vertices.empty()) return false;
    std::set<int> distinct;
    for (int v : vertices) {
        if (v < 0 || v >= d.vertexCount())
            throw InputError("induced subgraph: vertex out of range");
        if (!distinct.insert(v).second)
            throw InputError("induced subgraph: repeated vertex " + std::to_string(v));
    }
    // map into a compact digraph and reuse the SCC machinery
    std::vector<int> keep(distinct.begin(), distinct.end());
    std::vector<int> id(d.vertexCount(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<int>(i);
    Digraph sub(static_cast<int>(keep.size()));
    for (int v : keep)
        for (int w : d.outNeighbors(v))
            if (id[w] != -1) sub.addEdge(id[v], id[w]);
    return isStronglyConnected(sub);
}

}  // namespace bramble
