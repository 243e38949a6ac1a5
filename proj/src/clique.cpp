#include "curv/clique.hpp"

#include <algorithm>
#include <limits>

#include "curv/error.hpp"
#include "curv/parallel.hpp"

namespace curv {

namespace {

// Degeneracy order by repeated minimum-degree removal (bucket queue).
// Buckets hold stale entries; an entry is live iff the vertex is unremoved,
// in which case its lowest entry sits at its current degree. The cursor never
// passes a non-empty lower bucket because pushes pull it back down.
std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    order.reserve(n);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<int>> buckets(max_deg + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    int cursor = 0;
    while (static_cast<int>(order.size()) < n) {
        while (cursor <= max_deg && buckets[cursor].empty()) ++cursor;
        int v = buckets[cursor].back();
        buckets[cursor].pop_back();
        if (removed[v] || deg[v] != cursor) continue;  // stale
        removed[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (!removed[w]) {
                --deg[w];
                buckets[deg[w]].push_back(w);
                if (deg[w] < cursor) cursor = deg[w];
            }
        }
    }
    return order;
}

struct CliqueCounter {
    std::vector<std::uint64_t> counts;
    int cap;  // max simplex dimension to record, -1 = unbounded
    std::vector<std::vector<int>> scratch;

    void bump(int dim) {
        if (dim >= static_cast<int>(counts.size())) counts.resize(dim + 1, 0);
        if (counts[dim] == std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorCode::count_overflow, "simplex count exceeds 64 bits");
        ++counts[dim];
    }

    // cand: forward-neighbor candidates (sorted positions); depth = size of the
    // clique built so far. Every clique is visited exactly once because
    // extensions only run forward in the degeneracy order. cand aliases
    // scratch[depth - 1], so scratch is pre-sized and never reallocates.
    void extend(const std::vector<std::vector<int>>& fwd, const std::vector<int>& cand,
                int depth) {
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int u = cand[i];
            bump(depth);
            if (cap >= 0 && depth >= cap) continue;
            auto& next = scratch[static_cast<std::size_t>(depth)];
            next.clear();
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(),
                                  fwd[u].begin(), fwd[u].end(), std::back_inserter(next));
            if (!next.empty()) extend(fwd, next, depth + 1);
        }
    }
};

}  // namespace

FVector f_vector(const Graph& g, std::optional<int> cap) {
    int cap_dim = -1;  // -1 = unbounded
    if (cap.has_value()) {
        cap_dim = *cap;
        if (cap_dim < 0) throw Error(ErrorCode::param_out_of_range, "negative dimension cap");
    }
    int n = g.vertex_count();
    FVector f;
    if (n == 0) return f;
    f.counts.assign(1, static_cast<std::uint64_t>(n));
    if (cap_dim == 0) return f;

    auto order = degeneracy_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // forward adjacency in position space, sorted
    std::vector<std::vector<int>> fwd(n);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v]) fwd[pos[v]].push_back(pos[w]);
        std::sort(fwd[pos[v]].begin(), fwd[pos[v]].end());
    }

    CliqueCounter counter;
    counter.cap = cap_dim;
    counter.counts = std::move(f.counts);
    counter.scratch.resize(static_cast<std::size_t>(n) + 1);  // max clique size is n
    for (int i = 0; i < n; ++i)
        if (!fwd[i].empty()) counter.extend(fwd, fwd[i], 1);
    f.counts = std::move(counter.counts);
    while (!f.counts.empty() && f.counts.back() == 0) f.counts.pop_back();
    return f;
}

long long euler_characteristic(const FVector& f) {
    Integer chi = 0;
    for (int k = 0; k <= f.max_dim(); ++k) {
        Integer term(f.counts[static_cast<std::size_t>(k)]);
        chi += (k % 2 == 0) ? term : -term;
    }
    if (chi < std::numeric_limits<long long>::min() || chi > std::numeric_limits<long long>::max())
        throw Error(ErrorCode::count_overflow, "Euler characteristic exceeds 64 bits");
    return static_cast<long long>(chi);
}

long long euler_characteristic(const Graph& g) { return euler_characteristic(f_vector(g)); }

std::vector<FVector> sphere_profiles(const Graph& g) {
    std::vector<FVector> profiles(g.vertex_count());
    parallel_for(g.vertex_count(), [&](int p) {
        profiles[p] = f_vector(unit_sphere(g, p).graph);
    });
    return profiles;
}

TransferReport verify_transfer(const FVector& f, const std::vector<FVector>& profiles) {
    TransferReport report;
    for (int k = 1; k <= f.max_dim(); ++k) {
        TransferRow row;
        row.k = k;
        for (const auto& sphere : profiles) row.sphere_sum += Integer(sphere.count(k - 1));
        row.weighted_count = Integer(k + 1) * Integer(f.count(k));
        row.ok = row.sphere_sum == row.weighted_count;
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

TransferReport verify_transfer(const Graph& g) {
    return verify_transfer(f_vector(g), sphere_profiles(g));
}

HyperReport verify_hyper(const Graph& g, int d) {
    if (d < 1) throw Error(ErrorCode::param_out_of_range, "hyper relations need d >= 1");
    HyperReport report;
    report.d = d;
    FVector f = f_vector(g);
    report.graph_lhs = Integer(d + 1) * Integer(f.count(d));
    report.graph_rhs = Integer(2) * Integer(f.count(d - 1));
    report.graph_ok = report.graph_lhs == report.graph_rhs;
    report.spheres_ok = true;
    auto profiles = sphere_profiles(g);
    for (int p = 0; p < g.vertex_count(); ++p) {
        Integer lhs = Integer(d) * Integer(profiles[p].count(d - 1));
        Integer rhs = Integer(2) * Integer(profiles[p].count(d - 2));
        if (lhs != rhs) {
            report.spheres_ok = false;
            report.first_sphere_failure = p;
            report.sphere_lhs = lhs;
            report.sphere_rhs = rhs;
            break;
        }
    }
    return report;
}

}  // namespace curv
