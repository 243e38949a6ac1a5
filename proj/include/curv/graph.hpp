#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace curv {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph. Vertices are dense 0-based indices and the
/// adjacency of each vertex is a sorted list of distinct neighbors, which makes
/// neighborhood intersection (the clique-enumeration workhorse) a linear merge.
/// Instances are immutable after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? n : 0) {}

    // Deduplicates symmetric pairs. Throws Error(index_out_of_range) for an
    // endpoint >= n and Error(self_loop) for (u, u).
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const;
    int degree(int p) const;
    std::span<const int> neighbors(int p) const;
    bool has_edge(int u, int v) const;  // binary search, no bounds check on content
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    std::vector<Edge> edges() const;  // u < v, lexicographic

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    void check_vertex(int p) const;
    friend Graph induced_on_sorted(const Graph& g, std::span<const int> verts);
};

/// Strictly increasing vertex indices of some parent graph; the carrier for
/// induced subgraphs and sphere membership.
struct VertexSubset {
    std::vector<int> vertices;

    // Validates strict ascending order; throws Error(invalid_subset).
    static VertexSubset of_sorted(std::vector<int> vertices);
    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const VertexSubset&) const = default;
};

/// unit_sphere result: the induced graph plus the map from its indices back to
/// parent vertices (sphere vertex i is parent vertex subset.vertices[i]).
struct Sphere {
    Graph graph;
    VertexSubset subset;
};

// Subgraph induced on s, reindexed 0..|s|-1 in ascending parent order.
// Throws Error(invalid_subset) if s is not valid for g.
Graph induced_subgraph(const Graph& g, const VertexSubset& s);

// Fast path used by the inner loops: verts must be sorted, distinct, in range.
Graph induced_on_sorted(const Graph& g, std::span<const int> verts);

// S_1(p): subgraph induced on the neighbors of p.
Sphere unit_sphere(const Graph& g, int p);

// True iff g has exactly one connected component. The empty graph counts as
// connected by convention (validators require nonempty spheres separately).
bool is_connected(const Graph& g);

// Max shortest-path length over all vertex pairs; nullopt when disconnected.
// The empty and one-vertex graphs have diameter 0.
std::optional<int> bfs_diameter(const Graph& g);

// Sorted intersection of a sorted span with a sorted vector.
std::vector<int> intersect_sorted(std::span<const int> a, std::span<const int> b);

}  // namespace curv
