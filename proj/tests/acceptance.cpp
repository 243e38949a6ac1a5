// Acceptance suite: end-to-end checks of the toolkit's headline guarantees,
// one pass/fail line per criterion. Every assertion is exact (rational or
// integer); the only tolerances are the wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "curv/clique.hpp"
#include "curv/constructions.hpp"
#include "curv/curvature.hpp"
#include "curv/dimension.hpp"
#include "curv/graph.hpp"
#include "curv/iso.hpp"
#include "curv/rational.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

struct Checker {
    int failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

Rational frac(long long n, long long d) { return make_rational(n, d); }

// the full generator fixture list (big examples included)
std::vector<oracles::NamedGraph> generator_fixtures() {
    std::vector<oracles::NamedGraph> out;
    for (int n = 1; n <= 8; ++n) out.push_back({"complete:" + std::to_string(n), complete(n)});
    for (int n : {3, 4, 5, 7, 9}) out.push_back({"cyclic:" + std::to_string(n), cyclic(n)});
    for (int n : {1, 4}) out.push_back({"discrete:" + std::to_string(n), discrete(n)});
    for (int n : {4, 5, 6, 8}) out.push_back({"wheel:" + std::to_string(n), wheel(n)});
    out.push_back({"tree:10:1", tree_random(10, 1)});
    out.push_back({"tree:30:7", tree_random(30, 7)});
    for (const char* name :
         {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"})
        out.push_back({std::string("platonic:") + name, platonic(name)});
    for (int n = 1; n <= 8; ++n)
        out.push_back({"cross:" + std::to_string(n), cross_polytope(n)});
    for (int n = 3; n <= 6; ++n)
        out.push_back({"stellated-cube:" + std::to_string(n), stellated_cube_boundary(n)});
    out.push_back({"rect-hexeract", rectified_hexeract()});
    out.push_back({"600-cell", cell_600()});
    out.push_back({"bipyramid:wheel:5", bipyramid(wheel(5))});
    out.push_back({"pyramid:cross:3", pyramid(cross_polytope(3))});
    out.push_back({"torus:4:4", triangulated_torus(4, 4)});
    out.push_back({"torus:5:6", triangulated_torus(5, 6)});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. For 200 seeded random graphs and every generator fixture, the total
//    general curvature equals the Euler characteristic exactly.
bool criterion_gauss_bonnet(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (const auto& [name, g] : oracles::er_corpus(200)) {
        auto [ok, report] = check_gauss_bonnet(g);
        c.expect(ok, name);
        c.expect(report.total == report.euler_characteristic, name + " total!=chi");
    }
    for (const auto& [name, g] : generator_fixtures()) {
        auto [ok, report] = check_gauss_bonnet(g);
        c.expect(ok, name);
    }
    double elapsed = seconds_since(start);
    c.expect(elapsed < 10.0, "runtime budget 10s exceeded");
    note = "200 random + fixtures, " + std::to_string(elapsed).substr(0, 5) + "s";
    if (c.failures) note = c.first_failure;
    return c.failures == 0;
}

// 2. Transfer equations on the same corpus.
bool criterion_transfer(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (const auto& [name, g] : oracles::er_corpus(200)) c.expect(verify_transfer(g).all_ok, name);
    for (const auto& [name, g] : generator_fixtures()) c.expect(verify_transfer(g).all_ok, name);
    double elapsed = seconds_since(start);
    c.expect(elapsed < 10.0, "runtime budget 10s exceeded");
    note = "all rows balanced, " + std::to_string(elapsed).substr(0, 5) + "s";
    if (c.failures) note = c.first_failure;
    return c.failures == 0;
}

// 3. Stellated 4-cube boundary: 162 vertices, dimension-4 form classes
//    {2/15:80, -1/15:40, 0:32, -3/5:10}, total 2 == chi.
bool criterion_stellated_penteract(std::string& note) {
    Checker c;
    Graph g = stellated_cube_boundary(5);
    c.expect(g.vertex_count() == 162, "vertex count");
    CurvatureReport r = curvature_report(g, CurvatureMethod::euler_form, 4);
    std::map<Rational, std::int64_t> want{
        {frac(2, 15), 80}, {frac(-1, 15), 40}, {Rational(0), 32}, {frac(-3, 5), 10}};
    c.expect(r.class_multiplicities == want, "curvature classes");
    c.expect(r.total == 2, "total");
    c.expect(r.euler_characteristic == 2, "chi");
    c.expect(r.gbc_holds, "total == chi");
    note = c.failures ? c.first_failure : "classes {2/15:80, -1/15:40, 0:32, -3/5:10}";
    return c.failures == 0;
}

// 4. Stellated 5-cube boundary: 536 vertices / 8216 edges, the five sphere
//    profiles with multiplicities (64,240,160,60,12), dimension-5 form zero
//    everywhere, chi == 0.
bool criterion_stellated_hexeract(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    Graph g = stellated_cube_boundary(6);
    c.expect(g.vertex_count() == 536, "vertex count");
    c.expect(g.edge_count() == 8216, "edge count");
    auto profiles = sphere_profiles(g);
    std::map<std::vector<std::uint64_t>, int> rows;
    for (const auto& f : profiles) {
        std::vector<std::uint64_t> row;
        for (int k = 0; k <= 4; ++k) row.push_back(f.count(k));
        ++rows[row];
    }
    std::map<std::vector<std::uint64_t>, int> want{
        {{62, 540, 1560, 1800, 720}, 64},
        {{18, 96, 224, 240, 96}, 240},
        {{20, 126, 324, 360, 144}, 160},
        {{50, 336, 864, 960, 384}, 60},
        {{162, 1440, 4160, 4800, 1920}, 12},
    };
    c.expect(rows == want, "sphere profile table");
    CurvatureReport r = curvature_report(g, profiles, CurvatureMethod::euler_form, 5);
    for (const auto& k : r.per_vertex) c.expect(k == 0, "nonzero dimension-5 form");
    c.expect(r.euler_characteristic == 0, "chi");
    c.expect(r.total == 0, "total");
    double elapsed = seconds_since(start);
    c.expect(elapsed < 30.0, "runtime budget 30s exceeded");
    note = c.failures ? c.first_failure
                      : "536/8216, 5 profile rows, K==0, " +
                            std::to_string(elapsed).substr(0, 5) + "s";
    return c.failures == 0;
}

// 5. Cross-polytope series n=3..8: closed-form f-vector, validator accepts
//    d = n-1, and the curvature forms take the pinned constant values.
bool criterion_cross_series(std::string& note) {
    Checker c;
    for (int n = 3; n <= 8; ++n) {
        Graph g = cross_polytope(n);
        FVector f = f_vector(g);
        for (int k = 0; k < n; ++k) {
            std::uint64_t binom = 1;
            for (int i = 0; i < k + 1; ++i)
                binom = binom * static_cast<std::uint64_t>(n - i) / (i + 1);
            c.expect(f.count(k) == (std::uint64_t{1} << (k + 1)) * binom,
                     "f-vector closed form n=" + std::to_string(n));
        }
        c.expect(validate_d_graph(g, n - 1).valid, "validator n=" + std::to_string(n));
        int d = n - 1;
        CurvatureReport r = curvature_report(g, CurvatureMethod::euler_form, d);
        long long chi = euler_characteristic(f);
        switch (d) {
            case 2:
                c.expect(r.total == 2 && chi == 2, "d=2 total");
                break;
            case 3:
            case 5:
            case 7:
                for (const auto& k : r.per_vertex)
                    c.expect(k == 0, "odd-d form nonzero, d=" + std::to_string(d));
                c.expect(chi == 0 && r.total == 0, "odd-d chi, d=" + std::to_string(d));
                break;
            case 4:
                for (const auto& k : r.per_vertex) c.expect(k == frac(1, 5), "d=4 value");
                c.expect(r.total == 2 && chi == 2, "d=4 total");
                break;
            case 6:
                for (const auto& k : r.per_vertex) c.expect(k == frac(1, 7), "d=6 value");
                c.expect(r.total == 2 && chi == 2, "d=6 total");
                break;
        }
    }
    note = c.failures ? c.first_failure : "n=3..8 validated, forms pinned";
    return c.failures == 0;
}

// 6. Three-dimensional corollary: the dimension-3 form vanishes at every
//    vertex of the valid 3-graphs and their Euler characteristic is 0.
bool criterion_three_dimensional(std::string& note) {
    Checker c;
    std::vector<oracles::NamedGraph> fixtures{
        {"cross:4", cross_polytope(4)},
        {"600-cell", cell_600()},
        {"stellated-cube:4", stellated_cube_boundary(4)},
    };
    for (const auto& [name, g] : fixtures) {
        c.expect(validate_d_graph(g, 3).valid, name + " validator");
        for (int p = 0; p < g.vertex_count(); ++p)
            c.expect(euler_form(g, p, 3) == 0, name + " form");
        c.expect(euler_characteristic(g) == 0, name + " chi");
    }
    note = c.failures ? c.first_failure : "16-cell, 600-cell, stellated tesseract";
    return c.failures == 0;
}

// 7. Coefficient table and the proof identity for 3 <= d <= 64.
bool criterion_coefficients(std::string& note) {
    Checker c;
    const Rational table[] = {frac(-1, 6), frac(1, 4),  frac(-3, 10), frac(1, 3),
                              frac(-5, 14), frac(3, 8), frac(-7, 18)};
    for (int n = 1; n <= 7; ++n) c.expect(coefficient_a(n) == table[n - 1], "a_n table");
    for (int d = 3; d <= 64; ++d) {
        Rational lhs = coefficient_a(d - 2) + Rational(2) * coefficient_a(d - 1) / d;
        Rational rhs = frac(2, d) - frac(2, static_cast<long long>(d) * (d + 1)) - frac(1, 2);
        if (d % 2 == 0) rhs = -rhs;
        c.expect(lhs == rhs, "identity d=" + std::to_string(d));
    }
    note = c.failures ? c.first_failure : "a_1..a_7 and identity to d=64";
    return c.failures == 0;
}

// 8. Dimension fixtures, plus memoized == naive recursion on every corpus
//    graph with at most 10 vertices.
bool criterion_dimension(std::string& note) {
    Checker c;
    for (int n = 1; n <= 8; ++n)
        c.expect(graph_dimension(complete(n)) == n - 1, "K_n dimension");
    c.expect(graph_dimension(platonic("cube")) == 1, "cube");
    c.expect(graph_dimension(platonic("tetrahedron")) == 3, "tetrahedron");
    c.expect(graph_dimension(platonic("octahedron")) == 2, "octahedron");
    c.expect(graph_dimension(platonic("icosahedron")) == 2, "icosahedron");
    c.expect(graph_dimension(platonic("dodecahedron")) == 1, "dodecahedron");
    int compared = 0;
    auto corpus = generator_fixtures();
    for (const auto& [name, g] : oracles::er_corpus(40)) corpus.push_back({name, g});
    for (const auto& [name, g] : corpus) {
        if (g.vertex_count() > 10) continue;
        ++compared;
        c.expect(graph_dimension(g) == oracles::brute_dimension(g), name + " memo != brute");
    }
    c.expect(compared >= 30, "not enough small corpus graphs");
    note = c.failures ? c.first_failure
                      : "fixtures + " + std::to_string(compared) + " memo/brute comparisons";
    return c.failures == 0;
}

// 9. Validator rejections with the right violation codes.
bool criterion_rejections(std::string& note) {
    Checker c;
    auto has_rule = [](const ValidationCertificate& cert, ValidationRule rule) {
        for (const auto& v : cert.violations)
            if (v.rule == rule) return true;
        return false;
    };
    ValidationCertificate k4 = validate_d_graph(complete(4), 3);
    c.expect(!k4.valid && has_rule(k4, ValidationRule::sphere_euler_char), "K_4 at d=3");
    ValidationCertificate rh = validate_d_graph(rectified_hexeract(), 5);
    c.expect(!rh.valid && has_rule(rh, ValidationRule::sphere_connected),
             "rectified hexeract at d=5");
    ValidationCertificate cube = validate_d_graph(platonic("cube"), 2);
    c.expect(!cube.valid && has_rule(cube, ValidationRule::sphere_dimension), "cube at d=2");
    note = c.failures ? c.first_failure
                      : "sphere-euler-char / sphere-connected / sphere-dimension";
    return c.failures == 0;
}

// 10. Construction propositions: the bipyramid chi relation on 100 random
//     graphs, bipyramid(cross_n) isomorphic to cross_{n+1}, and the two glue
//     fixtures with chi 2 and -2.
bool criterion_constructions(std::string& note) {
    Checker c;
    for (const auto& [name, g] : oracles::er_corpus(100))
        c.expect(euler_characteristic(bipyramid(g)) == 2 - euler_characteristic(g),
                 name + " bipyramid chi");
    for (int n = 1; n <= 5; ++n)
        c.expect(is_isomorphic(bipyramid(cross_polytope(n)), cross_polytope(n + 1)),
                 "bipyramid cross " + std::to_string(n));

    Graph octa = cross_polytope(3);
    Graph punctured_octa = induced_subgraph(octa, VertexSubset{{1, 2, 3, 4, 5}});
    Graph sphere_join =
        glue(punctured_octa, punctured_octa, {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    c.expect(euler_characteristic(sphere_join) == 2, "sphere join chi");

    Graph torus = triangulated_torus(4, 4);
    std::vector<int> keep;
    for (int v = 1; v < 16; ++v) keep.push_back(v);
    Graph punctured_torus = induced_subgraph(torus, VertexSubset{keep});
    Graph torus_join = glue(punctured_torus, punctured_torus,
                            {{0, 0}, {2, 2}, {3, 3}, {4, 4}, {11, 11}, {14, 14}});
    c.expect(euler_characteristic(torus_join) == -2, "torus join chi");
    note = c.failures ? c.first_failure : "bipyramid + joins";
    return c.failures == 0;
}

// 11. Counting agrees with exhaustive subset testing on every corpus graph
//     with at most 7 vertices.
bool criterion_brute_force(std::string& note) {
    Checker c;
    int compared = 0;
    auto corpus = generator_fixtures();
    for (const auto& [name, g] : oracles::er_corpus(60)) corpus.push_back({name, g});
    for (const auto& [name, g] : corpus) {
        if (g.vertex_count() > 7) continue;
        ++compared;
        c.expect(f_vector(g) == oracles::brute_force_f_vector(g), name);
    }
    c.expect(compared >= 25, "not enough small corpus graphs");
    note = c.failures ? c.first_failure : std::to_string(compared) + " graphs cross-checked";
    return c.failures == 0;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const Criterion criteria[] = {
        {"gauss-bonnet totals", criterion_gauss_bonnet},
        {"transfer equations", criterion_transfer},
        {"stellated 4-cube boundary classes", criterion_stellated_penteract},
        {"stellated 5-cube boundary profiles", criterion_stellated_hexeract},
        {"cross-polytope series", criterion_cross_series},
        {"three-dimensional corollary", criterion_three_dimensional},
        {"coefficient identities", criterion_coefficients},
        {"dimension fixtures", criterion_dimension},
        {"validator rejections", criterion_rejections},
        {"construction propositions", criterion_constructions},
        {"brute-force clique counts", criterion_brute_force},
    };

    int failed = 0, index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        std::string note;
        bool ok = false;
        try {
            ok = criterion.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failed;
        std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", index, criterion.name,
                    note.empty() ? "" : " — ", note.c_str());
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
