#pragma once

#include <utility>
#include <vector>

namespace bramble {

/// Simple undirected graph on vertices 0..n-1. Loops dropped, parallel edges
/// deduplicated; neighbour lists sorted ascending, edge list sorted
/// lexicographically with u < v.
class Ugraph {
public:
    Ugraph() = default;
    explicit Ugraph(int n);
    static Ugraph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertexCount() const { return static_cast<int>(adj_.size()); }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    void addEdge(int u, int v);
    bool hasEdge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Ugraph& other) const;

private:
    void checkVertex(int v) const;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;  // kept sorted, u < v
};

}  // namespace bramble
