#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

/// Simplex counts of the clique complex: counts[k] is the number of complete
/// subgraphs K_{k+1} ("k-simplices"). counts[0] is the vertex count, counts[1]
/// the edge count. No trailing zeros are stored, so max_dim() is the dimension
/// of the largest simplex (-1 for the empty graph).
struct FVector {
    std::vector<std::uint64_t> counts;

    int max_dim() const { return static_cast<int>(counts.size()) - 1; }

    // count(-1) == 1 (the empty simplex); count(k) == 0 beyond max_dim.
    std::uint64_t count(int k) const {
        if (k == -1) return 1;
        if (k < 0 || k > max_dim()) return 0;
        return counts[static_cast<std::size_t>(k)];
    }

    bool operator==(const FVector&) const = default;
};

// Exact simplex counts of g. With cap set, counts are computed only for
// dimensions <= cap. Counting never materializes cliques; counts that would
// wrap 64 bits raise Error(count_overflow) instead of wrapping silently.
FVector f_vector(const Graph& g, std::optional<int> cap = std::nullopt);

// Alternating sum of the f-vector; 0 for the empty graph.
long long euler_characteristic(const FVector& f);
long long euler_characteristic(const Graph& g);

// f-vector of the unit sphere S_1(p) for every vertex p, each computed
// independently (parallel over vertices, merged in vertex order).
std::vector<FVector> sphere_profiles(const Graph& g);

// One row per simplex dimension k: the sphere-count sum against the weighted
// global count. Both sides agree on every finite simple graph; a mismatch
// indicates an implementation bug, reported rather than thrown.
struct TransferRow {
    int k = 0;
    Integer sphere_sum;     // sum over p of V_{k-1}(p)
    Integer weighted_count; // (k+1) * v_k
    bool ok = false;
};

struct TransferReport {
    std::vector<TransferRow> rows;
    bool all_ok = true;
};

TransferReport verify_transfer(const Graph& g);
TransferReport verify_transfer(const FVector& f, const std::vector<FVector>& profiles);

// Boundary-less conditions for dimension d: (d+1) v_d == 2 v_{d-1} on the
// graph and d V_{d-1}(p) == 2 V_{d-2}(p) on every unit sphere (V_{-1} = 1).
struct HyperReport {
    int d = 0;
    bool graph_ok = false;
    Integer graph_lhs, graph_rhs;
    bool spheres_ok = false;
    int first_sphere_failure = -1;  // vertex index, -1 when spheres_ok
    Integer sphere_lhs, sphere_rhs;
    bool ok() const { return graph_ok && spheres_ok; }
};

HyperReport verify_hyper(const Graph& g, int d);

}  // namespace curv
