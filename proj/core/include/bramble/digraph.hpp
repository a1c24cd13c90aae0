#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bramble {

/// Simple directed graph on vertices 0..n-1. Loops are dropped and parallel
/// edges deduplicated on insertion; neighbour lists are kept sorted ascending
/// so every traversal in the library is deterministic.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    static Digraph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertexCount() const { return static_cast<int>(out_.size()); }
    int edgeCount() const { return edgeCount_; }

    /// Inserts (u,v) unless it is a loop or already present. Throws InputError
    /// on out-of-range endpoints.
    void addEdge(int u, int v);
    bool hasEdge(int u, int v) const;

    const std::vector<int>& outNeighbors(int v) const;
    const std::vector<int>& inNeighbors(int v) const;

    /// All edges in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Digraph& other) const;

private:
    void checkVertex(int v) const;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    int edgeCount_ = 0;
};

/// A directed path given as its vertex sequence: non-empty, all vertices
/// distinct, consecutive vertices joined by edges of the host digraph.
/// A single vertex is a valid (zero-length) path.
struct VertexPath {
    std::vector<int> vertices;

    VertexPath() = default;
    explicit VertexPath(std::vector<int> vs) : vertices(std::move(vs)) {}

    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }

    /// True iff this is a genuine path of d; on failure, *why names the first
    /// violated requirement.
    bool validIn(const Digraph& d, std::string* why = nullptr) const;

    bool operator==(const VertexPath& other) const { return vertices == other.vertices; }
};

/// Vertices reachable from any of the given sources (sources themselves count
/// as reached). Out-of-range sources throw InputError.
std::vector<bool> reachableFrom(const Digraph& d, const std::vector<int>& sources);

/// Strongly connected components as a partition of 0..n-1. Each component is
/// sorted ascending; components are ordered by their smallest vertex.
std::vector<std::vector<int>> strongComponents(const Digraph& d);

/// True iff d has exactly one strongly connected component. The empty digraph
/// is not strong; a single vertex is.
bool isStronglyConnected(const Digraph& d);

/// True iff the subgraph induced by `vertices` (distinct, in range) is
/// strongly connected.
bool isStronglyConnectedSubset(const Digraph& d, const std::vector<int>& vertices);

}  // namespace bramble
