#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// Inductive dimension: dim(empty) = -1, dim of a vertex = 1 + dim of its unit
// sphere, dim of a graph = average over its vertices. Exact rational.
//
// Nested spheres of a graph are induced subgraphs of the original vertex set,
// so the memo is keyed by the sorted parent-vertex subset. The table is
// grow-only and idempotent: recomputing a subset always lands the same value.
class DimensionMemo {
public:
    struct SubsetHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept {
            std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
            for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ULL;
            return h;
        }
    };
    std::unordered_map<std::vector<int>, Rational, SubsetHash> cache;
};

Rational vertex_dimension(const Graph& g, int p);
Rational vertex_dimension(const Graph& g, int p, DimensionMemo& memo);
Rational graph_dimension(const Graph& g);
Rational graph_dimension(const Graph& g, DimensionMemo& memo);

enum class ValidationRule {
    sphere_connected,
    sphere_dimension,
    sphere_euler_char,
    hyper_relation,
    base_case,
};

std::string_view rule_name(ValidationRule rule);
std::optional<ValidationRule> rule_from_name(std::string_view name);

struct Violation {
    std::vector<int> path;  // vertices of the original graph, outermost first
    ValidationRule rule = ValidationRule::base_case;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct ValidationCertificate {
    int claimed_d = 0;
    bool valid = false;
    std::vector<Violation> violations;

    bool operator==(const ValidationCertificate&) const = default;
};

// Checks the d-dimensional-graph-without-boundary axioms:
//   d = 0: nonempty and edgeless.
//   d = 1: every unit sphere is exactly two isolated vertices.
//   d >= 2: every unit sphere is nonempty, connected, recursively valid as a
//           (d-1)-graph, and has Euler characteristic 1 + (-1)^{d-1}; the
//           hyper relation (d+1) v_d == 2 v_{d-1} holds on the graph.
// Sphere connectivity is only demanded for d >= 2 (1-graph spheres are two
// isolated vertices and never connected). All top-level violations are
// collected; nested failures carry the path to a representative root cause.
ValidationCertificate validate_d_graph(const Graph& g, int d);

// Smallest d <= d_max with a valid certificate; nullopt if none. Throws
// Error(ambiguous_dimension) if two distinct d validate.
std::optional<int> detect_dimension(const Graph& g, int d_max = 10);

}  // namespace curv
