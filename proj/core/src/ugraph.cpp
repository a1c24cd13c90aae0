#include "bramble/ugraph.hpp"

#include <algorithm>

#include "bramble/errors.hpp"

namespace bramble {

Ugraph::Ugraph(int n) {
    if (n < 0) throw InputError("ugraph: vertex count must be nonnegative");
    adj_.resize(n);
}

Ugraph Ugraph::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
    Ugraph g(n);
    for (auto [u, v] : edges) g.addEdge(u, v);
    return g;
}

void Ugraph::checkVertex(int v) const {
    if (v < 0 || v >= vertexCount())
        throw InputError("ugraph: vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertexCount()) + ")");
}

void Ugraph::addEdge(int u, int v) {
    checkVertex(u);
    checkVertex(v);
    if (u == v) return;
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Ugraph::hasEdge(int u, int v) const {
    checkVertex(u);
    checkVertex(v);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair<int, int>{u, v});
}

const std::vector<int>& Ugraph::neighbors(int v) const {
    checkVertex(v);
    return adj_[v];
}

bool Ugraph::operator==(const Ugraph& other) const {
    return vertexCount() == other.vertexCount() && edges_ == other.edges_;
}

}  // namespace bramble
