#include "curv/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "curv/error.hpp"

namespace curv {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw Error(ErrorCode::param_out_of_range, msg);
}

// ---------------------------------------------------------------------------
// Exact arithmetic in Z[sqrt 5], enough to pin polytope adjacency without any
// floating-point threshold.
// ---------------------------------------------------------------------------

struct QuadInt {
    long long a = 0;  // value = a + b*sqrt(5)
    long long b = 0;

    friend QuadInt operator+(QuadInt x, QuadInt y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadInt operator-(QuadInt x, QuadInt y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadInt operator*(QuadInt x, QuadInt y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    bool operator==(const QuadInt&) const = default;

    // sign of a + b*sqrt(5); exact because sqrt(5) is irrational
    int sign() const {
        if (a == 0 && b == 0) return 0;
        if (a >= 0 && b >= 0) return 1;
        if (a <= 0 && b <= 0) return -1;
        long long lhs = a * a, rhs = 5 * b * b;  // compare |a| vs |b|sqrt5
        if (a > 0) return lhs > rhs ? 1 : -1;
        return lhs > rhs ? -1 : 1;
    }
    friend bool operator<(QuadInt x, QuadInt y) { return (x - y).sign() < 0; }
};

using QuadPoint = std::vector<QuadInt>;

QuadInt squared_distance(const QuadPoint& x, const QuadPoint& y) {
    QuadInt sum;
    for (std::size_t i = 0; i < x.size(); ++i) {
        QuadInt d = x[i] - y[i];
        sum = sum + d * d;
    }
    return sum;
}

// Connects every pair at the minimal nonzero squared distance.
Graph graph_from_min_distance(const std::vector<QuadPoint>& points) {
    int n = static_cast<int>(points.size());
    std::optional<QuadInt> min_sq;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            QuadInt d = squared_distance(points[i], points[j]);
            if (d.sign() == 0) continue;
            if (!min_sq || d < *min_sq) min_sq = d;
        }
    }
    std::vector<Edge> edges;
    if (min_sq) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (squared_distance(points[i], points[j]) == *min_sq) edges.emplace_back(i, j);
    }
    return Graph::from_edge_list(n, edges);
}

Graph cube_graph() {
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int bit = 0; bit < 3; ++bit)
            if (!(u & (1 << bit))) edges.emplace_back(u, u | (1 << bit));
    return Graph::from_edge_list(8, edges);
}

Graph icosahedron_graph() {
    // cyclic permutations of (0, +/-2, +/-(1+sqrt5)); edge length^2 = 16
    std::vector<QuadPoint> points;
    for (int axis = 0; axis < 3; ++axis) {
        for (int s1 : {-1, 1}) {
            for (int s2 : {-1, 1}) {
                QuadPoint p(3);
                p[static_cast<std::size_t>(axis)] = QuadInt{0, 0};
                p[static_cast<std::size_t>((axis + 1) % 3)] = QuadInt{2 * s1, 0};
                p[static_cast<std::size_t>((axis + 2) % 3)] = QuadInt{s2, s2};
                points.push_back(std::move(p));
            }
        }
    }
    return graph_from_min_distance(points);
}

Graph dodecahedron_graph() {
    // (+/-2, +/-2, +/-2) and cyclic permutations of (0, +/-(sqrt5-1), +/-(1+sqrt5))
    std::vector<QuadPoint> points;
    for (int mask = 0; mask < 8; ++mask) {
        QuadPoint p(3);
        for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = {(mask & (1 << i)) ? 2 : -2, 0};
        points.push_back(std::move(p));
    }
    for (int axis = 0; axis < 3; ++axis) {
        for (int s1 : {-1, 1}) {
            for (int s2 : {-1, 1}) {
                QuadPoint p(3);
                p[static_cast<std::size_t>(axis)] = QuadInt{0, 0};
                p[static_cast<std::size_t>((axis + 1) % 3)] = QuadInt{-s1, s1};
                p[static_cast<std::size_t>((axis + 2) % 3)] = QuadInt{s2, s2};
                points.push_back(std::move(p));
            }
        }
    }
    return graph_from_min_distance(points);
}

}  // namespace

Graph complete(int n) {
    require(n >= 0, "complete(n) needs n >= 0");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph cyclic(int n) {
    require(n >= 3, "cyclic(n) needs n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph discrete(int n) {
    require(n >= 0, "discrete(n) needs n >= 0");
    return Graph(n);
}

Graph wheel(int n) {
    require(n >= 3, "wheel(n) needs n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        edges.emplace_back(u, (u + 1) % n);
        edges.emplace_back(u, n);
    }
    return Graph::from_edge_list(n + 1, edges);
}

Graph tree_random(int n, std::uint64_t seed) {
    require(n >= 1, "tree_random(n) needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        edges.emplace_back(parent, v);
    }
    return Graph::from_edge_list(n, edges);
}

Graph platonic(std::string_view name) {
    if (name == "tetrahedron") return complete(4);
    if (name == "cube") return cube_graph();
    if (name == "octahedron") return cross_polytope(3);
    if (name == "icosahedron") return icosahedron_graph();
    if (name == "dodecahedron") return dodecahedron_graph();
    throw Error(ErrorCode::unknown_name, "unknown platonic solid '" + std::string(name) + "'");
}

Graph cross_polytope(int n) {
    require(n >= 1, "cross_polytope(n) needs n >= 1");
    // vertices 2i and 2i+1 are +/-e_{i+1}; everything except antipodes adjacent
    std::vector<Edge> edges;
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (v != (u ^ 1)) edges.emplace_back(u, v);
    return Graph::from_edge_list(2 * n, edges);
}

Graph pyramid(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
    return Graph::from_edge_list(n + 1, edges);
}

Graph bipyramid(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, n);
        edges.emplace_back(v, n + 1);
    }
    return Graph::from_edge_list(n + 2, edges);
}

namespace {

// Faces of the n-cube as {-1, 0, +1} vectors; zeros mark free coordinates.
// Face a lies strictly inside face b iff b has more zeros and they agree on
// every coordinate fixed by b.
struct FaceTable {
    int n;
    std::vector<std::vector<int>> faces;  // descriptor per graph vertex
    std::vector<int> zeros;               // cached zero counts

    bool contains(int outer, int inner) const {
        if (zeros[outer] <= zeros[inner]) return false;
        for (int i = 0; i < n; ++i)
            if (faces[outer][i] != 0 && faces[outer][i] != faces[inner][i]) return false;
        return true;
    }
};

}  // namespace

Graph stellated_cube_boundary(int n, const std::vector<int>& stellate_dims) {
    require(n >= 3, "stellated_cube_boundary(n) needs n >= 3");
    for (int k : stellate_dims)
        require(k >= 1 && k <= n - 1, "stellated face dimension must lie in [1, n-1]");

    FaceTable table;
    table.n = n;
    // cube vertices in binary order
    for (int code = 0; code < (1 << n); ++code) {
        std::vector<int> face(n);
        for (int i = 0; i < n; ++i) face[i] = (code & (1 << i)) ? 1 : -1;
        table.faces.push_back(std::move(face));
    }
    // face centers by ascending dimension, lexicographic descriptors within
    std::vector<int> dims = stellate_dims;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (int k : dims) {
        // choose k free coordinates, then sign the rest
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        std::vector<std::vector<int>> level;
        for (;;) {
            int fixed = n - k;
            for (int code = 0; code < (1 << fixed); ++code) {
                std::vector<int> face(n, 0);
                int bit = 0;
                for (int i = 0; i < n; ++i) {
                    if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
                    face[i] = (code & (1 << bit)) ? 1 : -1;
                    ++bit;
                }
                level.push_back(std::move(face));
            }
            // next k-combination of {0..n-1}
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        std::sort(level.begin(), level.end());
        for (auto& face : level) table.faces.push_back(std::move(face));
    }

    int total = static_cast<int>(table.faces.size());
    table.zeros.resize(total);
    for (int v = 0; v < total; ++v)
        table.zeros[v] = static_cast<int>(
            std::count(table.faces[v].begin(), table.faces[v].end(), 0));

    std::vector<Edge> edges;
    for (int u = 0; u < total; ++u) {
        for (int v = u + 1; v < total; ++v) {
            bool adjacent;
            if (table.zeros[u] == 0 && table.zeros[v] == 0) {
                int diff = 0;
                for (int i = 0; i < n; ++i) diff += table.faces[u][i] != table.faces[v][i];
                adjacent = diff == 1;
            } else {
                adjacent = table.contains(u, v) || table.contains(v, u);
            }
            if (adjacent) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(total, edges);
}

Graph stellated_cube_boundary(int n) {
    require(n >= 3, "stellated_cube_boundary(n) needs n >= 3");
    std::vector<int> dims;
    for (int k = 2; k <= n - 1; ++k) dims.push_back(k);
    return stellated_cube_boundary(n, dims);
}

Graph rectified_hexeract() {
    // one zero coordinate, +/-1 elsewhere; adjacency at squared distance 2
    std::vector<std::array<int, 6>> points;
    for (int zero = 0; zero < 6; ++zero) {
        for (int code = 0; code < 32; ++code) {
            std::array<int, 6> p{};
            int bit = 0;
            for (int i = 0; i < 6; ++i) {
                if (i == zero) continue;
                p[static_cast<std::size_t>(i)] = (code & (1 << bit)) ? 1 : -1;
                ++bit;
            }
            points.push_back(p);
        }
    }
    int n = static_cast<int>(points.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int sq = 0;
            for (int c = 0; c < 6; ++c) {
                int d = points[i][static_cast<std::size_t>(c)] -
                        points[j][static_cast<std::size_t>(c)];
                sq += d * d;
            }
            if (sq == 2) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph cell_600() {
    // Unit icosians scaled by 4: 8 permutations of (+/-4, 0, 0, 0), the 16
    // points (+/-2, +/-2, +/-2, +/-2), and 96 even permutations of
    // (+/-(1+sqrt5), +/-2, +/-(sqrt5-1), 0).
    std::vector<QuadPoint> points;
    for (int axis = 0; axis < 4; ++axis) {
        for (int s : {-1, 1}) {
            QuadPoint p(4);
            p[static_cast<std::size_t>(axis)] = QuadInt{4 * s, 0};
            points.push_back(std::move(p));
        }
    }
    for (int mask = 0; mask < 16; ++mask) {
        QuadPoint p(4);
        for (int i = 0; i < 4; ++i)
            p[static_cast<std::size_t>(i)] = QuadInt{(mask & (1 << i)) ? 2 : -2, 0};
        points.push_back(std::move(p));
    }
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        // parity of perm
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        if (inversions % 2 != 0) continue;
        for (int s1 : {-1, 1}) {
            for (int s2 : {-1, 1}) {
                for (int s3 : {-1, 1}) {
                    std::array<QuadInt, 4> base{QuadInt{s1, s1}, QuadInt{2 * s2, 0},
                                                QuadInt{-s3, s3}, QuadInt{0, 0}};
                    QuadPoint p(4);
                    for (int i = 0; i < 4; ++i)
                        p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                            base[static_cast<std::size_t>(i)];
                    points.push_back(std::move(p));
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return graph_from_min_distance(points);
}

Graph glue(const Graph& g, const Graph& h, const std::vector<Edge>& correspondence) {
    std::vector<char> left_used(g.vertex_count(), 0), right_used(h.vertex_count(), 0);
    std::vector<int> right_to_left(h.vertex_count(), -1);
    for (const auto& [u, v] : correspondence) {
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count())
            throw Error(ErrorCode::index_out_of_range, "correspondence vertex out of range");
        if (left_used[u] || right_used[v])
            throw Error(ErrorCode::overlapping_correspondence,
                        "correspondence must be injective on both sides");
        left_used[u] = right_used[v] = 1;
        right_to_left[v] = u;
    }
    // g keeps its indices; unidentified h vertices follow in ascending order
    int next = g.vertex_count();
    std::vector<int> right_map(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
        right_map[v] = right_to_left[v] >= 0 ? right_to_left[v] : next++;
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(right_map[u], right_map[v]);
    return Graph::from_edge_list(next, edges);
}

Graph self_glue(const Graph& g, const std::vector<Edge>& correspondence) {
    int n = g.vertex_count();
    std::vector<char> keep_side(n, 0), drop_side(n, 0);
    std::vector<int> target(n, -1);
    for (const auto& [keep, drop] : correspondence) {
        if (keep < 0 || keep >= n || drop < 0 || drop >= n)
            throw Error(ErrorCode::index_out_of_range, "correspondence vertex out of range");
        if (keep_side[keep] || drop_side[drop] || keep_side[drop] || drop_side[keep])
            throw Error(ErrorCode::overlapping_correspondence,
                        "correspondence sides must be disjoint and injective");
        keep_side[keep] = 1;
        drop_side[drop] = 1;
        target[drop] = keep;
    }
    // compact the surviving vertices, ascending
    std::vector<int> new_index(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!drop_side[v]) new_index[v] = next++;
    auto resolve = [&](int v) { return new_index[drop_side[v] ? target[v] : v]; };
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int a = resolve(u), b = resolve(v);
        if (a != b) edges.emplace_back(a, b);  // identification may collapse an edge
    }
    return Graph::from_edge_list(next, edges);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    require(n >= 0, "erdos_renyi(n) needs n >= 0");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges())
        edges.emplace_back(u + g.vertex_count(), v + g.vertex_count());
    return Graph::from_edge_list(g.vertex_count() + h.vertex_count(), edges);
}

Graph triangulated_torus(int rows, int cols) {
    require(rows >= 4 && cols >= 4, "triangulated_torus needs rows, cols >= 4");
    auto id = [&](int i, int j) {
        return ((i % rows + rows) % rows) * cols + ((j % cols + cols) % cols);
    };
    std::vector<Edge> edges;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            edges.emplace_back(id(i, j), id(i + 1, j));
            edges.emplace_back(id(i, j), id(i, j + 1));
            edges.emplace_back(id(i, j), id(i + 1, j + 1));
        }
    }
    return Graph::from_edge_list(rows * cols, edges);
}

}  // namespace curv
