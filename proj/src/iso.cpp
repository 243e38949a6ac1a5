#include "curv/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace curv {

namespace {

// Iterated neighbor-color refinement (1-WL). Colors are small dense ints kept
// comparable across the two graphs by refining them jointly.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<int> ca(na, 0), cb(nb, 0);
    int colors = 1;
    for (int round = 0; round < na + 1; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> relabel;
        auto signature = [&](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> sig;
            sig.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) sig.push_back(c[w]);
            std::sort(sig.begin(), sig.end());
            return std::make_pair(c[v], std::move(sig));
        };
        std::vector<int> next_a(na), next_b(nb);
        for (int v = 0; v < na; ++v) {
            auto sig = signature(a, ca, v);
            next_a[v] = relabel.emplace(std::move(sig), static_cast<int>(relabel.size()))
                            .first->second;
        }
        for (int v = 0; v < nb; ++v) {
            auto sig = signature(b, cb, v);
            next_b[v] = relabel.emplace(std::move(sig), static_cast<int>(relabel.size()))
                            .first->second;
        }
        int next_colors = static_cast<int>(relabel.size());
        ca.swap(next_a);
        cb.swap(next_b);
        if (next_colors == colors) break;
        colors = next_colors;
    }
    return {ca, cb};
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> order;    // a's vertices, most constrained first
    std::vector<int> mapping;  // a -> b, -1 unassigned
    std::vector<char> used;    // b side

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 0; w < b.vertex_count(); ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool consistent = true;
            for (int u : a.neighbors(v)) {
                int mu = mapping[u];
                if (mu >= 0 && !b.has_edge(w, mu)) {
                    consistent = false;
                    break;
                }
            }
            // degree equality via colors; still need non-edges preserved
            if (consistent) {
                for (std::size_t j = 0; j < idx && consistent; ++j) {
                    int u = order[j];
                    if (!a.has_edge(v, u) && b.has_edge(w, mapping[u])) consistent = false;
                }
            }
            if (!consistent) continue;
            mapping[v] = w;
            used[w] = 1;
            if (extend(idx + 1)) return true;
            mapping[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto [ca, cb] = joint_refinement(a, b);
    std::vector<std::int64_t> hist_a, hist_b;
    for (int c : ca) {
        if (c >= static_cast<int>(hist_a.size())) hist_a.resize(c + 1, 0);
        ++hist_a[c];
    }
    for (int c : cb) {
        if (c >= static_cast<int>(hist_b.size())) hist_b.resize(c + 1, 0);
        ++hist_b[c];
    }
    if (hist_a != hist_b) return std::nullopt;

    Matcher matcher{a, b, ca, cb, {}, std::vector<int>(n, -1), std::vector<char>(n, 0)};
    matcher.order.resize(n);
    std::iota(matcher.order.begin(), matcher.order.end(), 0);
    // rare colors first, ties by higher degree
    std::sort(matcher.order.begin(), matcher.order.end(), [&](int x, int y) {
        auto kx = std::make_tuple(hist_a[ca[x]], -a.degree(x), x);
        auto ky = std::make_tuple(hist_a[ca[y]], -a.degree(y), y);
        return kx < ky;
    });
    if (!matcher.extend(0)) return std::nullopt;
    return matcher.mapping;
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace curv
