#include "curv/dimension.hpp"

#include <algorithm>
#include <utility>

#include "curv/clique.hpp"
#include "curv/error.hpp"

namespace curv {

namespace {

Rational subset_dimension(const Graph& g, const std::vector<int>& verts, DimensionMemo& memo) {
    if (verts.empty()) return Rational(-1);
    if (auto it = memo.cache.find(verts); it != memo.cache.end()) return it->second;
    Rational sum(0);
    for (int v : verts) {
        auto sphere = intersect_sorted(g.neighbors(v), verts);
        sum += Rational(1) + subset_dimension(g, sphere, memo);
    }
    Rational value = sum / static_cast<int>(verts.size());
    memo.cache.emplace(verts, value);
    return value;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> verts(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) verts[static_cast<std::size_t>(v)] = v;
    return verts;
}

}  // namespace

Rational vertex_dimension(const Graph& g, int p, DimensionMemo& memo) {
    auto nbrs = g.neighbors(p);
    return Rational(1) + subset_dimension(g, std::vector<int>(nbrs.begin(), nbrs.end()), memo);
}

Rational vertex_dimension(const Graph& g, int p) {
    DimensionMemo memo;
    return vertex_dimension(g, p, memo);
}

Rational graph_dimension(const Graph& g, DimensionMemo& memo) {
    return subset_dimension(g, all_vertices(g), memo);
}

Rational graph_dimension(const Graph& g) {
    DimensionMemo memo;
    return graph_dimension(g, memo);
}

std::string_view rule_name(ValidationRule rule) {
    switch (rule) {
        case ValidationRule::sphere_connected: return "sphere-connected";
        case ValidationRule::sphere_dimension: return "sphere-dimension";
        case ValidationRule::sphere_euler_char: return "sphere-euler-char";
        case ValidationRule::hyper_relation: return "hyper-relation";
        case ValidationRule::base_case: return "base-case";
    }
    return "base-case";
}

std::optional<ValidationRule> rule_from_name(std::string_view name) {
    for (auto rule : {ValidationRule::sphere_connected, ValidationRule::sphere_dimension,
                      ValidationRule::sphere_euler_char, ValidationRule::hyper_relation,
                      ValidationRule::base_case})
        if (rule_name(rule) == name) return rule;
    return std::nullopt;
}

namespace {

// Everything a parent level needs to know about a subset checked at depth d.
struct SubsetVerdict {
    bool valid = false;
    bool connected = false;
    long long chi = 0;
    std::optional<Violation> why;  // representative root cause
};

struct Validator {
    const Graph& g;

    struct KeyHash {
        std::size_t operator()(const std::pair<std::vector<int>, int>& key) const noexcept {
            return DimensionMemo::SubsetHash{}(key.first) * 31 +
                   static_cast<std::size_t>(key.second);
        }
    };
    std::unordered_map<std::pair<std::vector<int>, int>, SubsetVerdict, KeyHash> memo;

    static Violation nested(int vertex, int d, const Violation& inner) {
        Violation v;
        v.path.reserve(inner.path.size() + 1);
        v.path.push_back(vertex);
        v.path.insert(v.path.end(), inner.path.begin(), inner.path.end());
        v.rule = ValidationRule::sphere_dimension;
        v.detail = "S(p) is not a " + std::to_string(d - 1) + "-graph: " +
                   std::string(rule_name(inner.rule)) + ": " + inner.detail;
        return v;
    }

    // Checks the d-graph axioms on the subgraph induced on verts. With a sink,
    // every violation of the level is reported; without one, the first failure
    // short-circuits (nested spheres only need a representative cause).
    SubsetVerdict check(const std::vector<int>& verts, int d, std::vector<Violation>* sink) {
        SubsetVerdict out;
        Graph sub = induced_on_sorted(g, verts);
        FVector f = f_vector(sub);
        out.connected = !verts.empty() && is_connected(sub);
        out.chi = euler_characteristic(f);

        auto report = [&](Violation v) {
            if (!out.why) out.why = v;
            if (sink) sink->push_back(std::move(v));
        };

        if (d < 0) {
            report(Violation{{}, ValidationRule::base_case, "claimed dimension is negative"});
        } else if (verts.empty()) {
            report(Violation{{}, ValidationRule::base_case, "empty graph"});
        } else if (d == 0) {
            if (f.max_dim() > 0)
                report(Violation{{}, ValidationRule::base_case,
                                 "0-graph must be edgeless, found " + std::to_string(f.count(1)) +
                                     " edge(s)"});
        } else {
            long long want_chi = 1 + ((d - 1) % 2 == 0 ? 1 : -1);
            for (int v : verts) {
                if (out.why && !sink) break;
                auto sphere = intersect_sorted(g.neighbors(v), verts);
                const SubsetVerdict& sv = evaluate(sphere, d - 1);
                if (d >= 2 && !sv.connected)
                    report(Violation{{v}, ValidationRule::sphere_connected,
                                     "S(p) is not connected"});
                if (!sv.valid) report(nested(v, d, *sv.why));
                if (sv.chi != want_chi)
                    report(Violation{{v}, ValidationRule::sphere_euler_char,
                                     "chi(S(p))=" + std::to_string(sv.chi) + ", expected " +
                                         std::to_string(want_chi)});
            }
            if (!out.why || sink) {
                Integer lhs = Integer(d + 1) * Integer(f.count(d));
                Integer rhs = Integer(2) * Integer(f.count(d - 1));
                if (lhs != rhs)
                    report(Violation{{}, ValidationRule::hyper_relation,
                                     "(d+1) v_d = " + lhs.str() + " but 2 v_{d-1} = " +
                                         rhs.str()});
            }
        }
        out.valid = !out.why.has_value();
        return out;
    }

    const SubsetVerdict& evaluate(const std::vector<int>& verts, int d) {
        auto key = std::make_pair(verts, d);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        SubsetVerdict out = check(verts, d, nullptr);
        return memo.emplace(std::move(key), std::move(out)).first->second;
    }
};

}  // namespace

ValidationCertificate validate_d_graph(const Graph& g, int d) {
    ValidationCertificate cert;
    cert.claimed_d = d;
    Validator validator{g, {}};
    validator.check(all_vertices(g), d, &cert.violations);
    cert.valid = cert.violations.empty();
    return cert;
}

std::optional<int> detect_dimension(const Graph& g, int d_max) {
    if (d_max < 0) throw Error(ErrorCode::param_out_of_range, "d_max must be >= 0");
    std::optional<int> found;
    for (int d = 0; d <= d_max; ++d) {
        if (validate_d_graph(g, d).valid) {
            if (found)
                throw Error(ErrorCode::ambiguous_dimension,
                            "both d=" + std::to_string(*found) + " and d=" + std::to_string(d) +
                                " validate");
            found = d;
        }
    }
    return found;
}

}  // namespace curv
