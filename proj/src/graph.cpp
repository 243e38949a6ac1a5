#include "curv/graph.hpp"

#include <algorithm>
#include <string>

#include "curv/error.hpp"

namespace curv {

void Graph::check_vertex(int p) const {
    if (p < 0 || p >= vertex_count())
        throw Error(ErrorCode::index_out_of_range,
                    "vertex " + std::to_string(p) + " out of range [0, " +
                        std::to_string(vertex_count()) + ")");
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error(ErrorCode::param_out_of_range, "negative vertex count");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::index_out_of_range,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") exceeds vertex count " + std::to_string(n));
        if (u == v)
            throw Error(ErrorCode::self_loop, "self loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (const auto& nbrs : adj_) twice += static_cast<std::int64_t>(nbrs.size());
    return twice / 2;
}

int Graph::degree(int p) const {
    check_vertex(p);
    return static_cast<int>(adj_[p].size());
}

std::span<const int> Graph::neighbors(int p) const {
    check_vertex(p);
    return adj_[p];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSubset VertexSubset::of_sorted(std::vector<int> vertices) {
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i - 1] >= vertices[i])
            throw Error(ErrorCode::invalid_subset, "subset indices must be strictly increasing");
    if (!vertices.empty() && vertices.front() < 0)
        throw Error(ErrorCode::invalid_subset, "negative vertex index in subset");
    return VertexSubset{std::move(vertices)};
}

Graph induced_on_sorted(const Graph& g, std::span<const int> verts) {
    Graph out(static_cast<int>(verts.size()));
    auto& adj = out.adj_;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto nbrs = g.neighbors(verts[i]);
        // merge walk: collect positions j with verts[j] adjacent to verts[i]
        std::size_t a = 0, b = 0;
        while (a < nbrs.size() && b < verts.size()) {
            if (nbrs[a] < verts[b]) {
                ++a;
            } else if (verts[b] < nbrs[a]) {
                ++b;
            } else {
                adj[i].push_back(static_cast<int>(b));
                ++a;
                ++b;
            }
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSubset& s) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i > 0 && s.vertices[i - 1] >= s.vertices[i])
            throw Error(ErrorCode::invalid_subset, "subset indices must be strictly increasing");
        if (s.vertices[i] < 0 || s.vertices[i] >= g.vertex_count())
            throw Error(ErrorCode::invalid_subset,
                        "subset vertex " + std::to_string(s.vertices[i]) + " not in parent graph");
    }
    return induced_on_sorted(g, s.vertices);
}

Sphere unit_sphere(const Graph& g, int p) {
    auto nbrs = g.neighbors(p);
    std::vector<int> verts(nbrs.begin(), nbrs.end());
    Graph sphere = induced_on_sorted(g, verts);
    return Sphere{std::move(sphere), VertexSubset{std::move(verts)}};
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::optional<int> bfs_diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    int diameter = 0;
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = src;
        dist[src] = 0;
        while (head < tail) {
            int v = queue[head++];
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (tail < n) return std::nullopt;
        diameter = std::max(diameter, dist[queue[tail - 1]]);
    }
    return diameter;
}

std::vector<int> intersect_sorted(std::span<const int> a, std::span<const int> b) {
    std::vector<int> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace curv
