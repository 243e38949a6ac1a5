// Independent oracles used by the tests: deliberately naive implementations
// that share no code with the library paths they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "curv/clique.hpp"
#include "curv/constructions.hpp"
#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace oracles {

// Exhaustive subset testing: counts[k] by checking all C(n, k+1) vertex
// subsets for completeness. Only sane for n <= ~20.
inline curv::FVector brute_force_f_vector(const curv::Graph& g) {
    int n = g.vertex_count();
    curv::FVector f;
    for (int size = 1; size <= n; ++size) {
        std::uint64_t found = 0;
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            bool clique = true;
            for (int i = 0; i < size && clique; ++i)
                for (int j = i + 1; j < size && clique; ++j)
                    if (!g.has_edge(pick[static_cast<std::size_t>(i)],
                                    pick[static_cast<std::size_t>(j)]))
                        clique = false;
            if (clique) ++found;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (found == 0) break;  // cliques are hereditary
        f.counts.push_back(found);
    }
    return f;
}

// Non-memoized inductive dimension working on materialized subgraphs.
inline curv::Rational brute_dimension(const curv::Graph& g) {
    if (g.vertex_count() == 0) return curv::Rational(-1);
    curv::Rational sum(0);
    for (int p = 0; p < g.vertex_count(); ++p)
        sum += curv::Rational(1) + brute_dimension(curv::unit_sphere(g, p).graph);
    return sum / g.vertex_count();
}

// All-pairs shortest paths by Floyd-Warshall; -1 encodes infinity.
inline std::optional<int> brute_diameter(const curv::Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    const int inf = 1 << 28;
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) {
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
        for (int w : g.neighbors(v)) dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                 dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (d >= inf) return std::nullopt;
            best = std::max(best, d);
        }
    return best;
}

// Seeded vertex relabeling (a graph isomorphic to g by construction).
inline curv::Graph shuffled_copy(const curv::Graph& g, std::uint64_t seed) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    std::vector<curv::Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return curv::Graph::from_edge_list(n, edges);
}

struct NamedGraph {
    std::string name;
    curv::Graph graph;
};

// The deterministic fixtures every suite runs over (big generators excluded;
// the acceptance run adds those).
inline std::vector<NamedGraph> small_corpus() {
    using namespace curv;
    std::vector<NamedGraph> out;
    for (int n = 1; n <= 6; ++n) out.push_back({"complete:" + std::to_string(n), complete(n)});
    for (int n : {3, 5, 7}) out.push_back({"cyclic:" + std::to_string(n), cyclic(n)});
    out.push_back({"discrete:4", discrete(4)});
    out.push_back({"discrete:1", discrete(1)});
    for (int n : {4, 6}) out.push_back({"wheel:" + std::to_string(n), wheel(n)});
    out.push_back({"tree:7:1", tree_random(7, 1)});
    out.push_back({"octahedron", platonic("octahedron")});
    out.push_back({"cube", platonic("cube")});
    for (int n : {2, 3, 4}) out.push_back({"cross:" + std::to_string(n), cross_polytope(n)});
    return out;
}

// The Erdos-Renyi schedule shared by the property suites: n cycles 4..12 and
// p cycles {0.2, 0.5, 0.8} as the seed runs over 1..count.
inline std::vector<NamedGraph> er_corpus(int count) {
    std::vector<NamedGraph> out;
    const double probs[] = {0.2, 0.5, 0.8};
    for (int i = 0; i < count; ++i) {
        int n = 4 + i % 9;
        double p = probs[i % 3];
        auto seed = static_cast<std::uint64_t>(i + 1);
        out.push_back({"er:" + std::to_string(n) + ":" + std::to_string(p) + ":" +
                           std::to_string(seed),
                       curv::erdos_renyi(n, p, seed)});
    }
    return out;
}

}  // namespace oracles
