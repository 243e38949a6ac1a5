#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curv/clique.hpp"
#include "curv/constructions.hpp"
#include "curv/error.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("f-vector fixtures") {
    CHECK(f_vector(platonic("octahedron")).counts == std::vector<std::uint64_t>{6, 12, 8});
    CHECK(f_vector(platonic("cube")).counts == std::vector<std::uint64_t>{8, 12});
    CHECK(f_vector(cross_polytope(4)).counts == std::vector<std::uint64_t>{8, 24, 32, 16});
    CHECK(f_vector(complete(5)).counts == std::vector<std::uint64_t>{5, 10, 10, 5, 1});
    CHECK(f_vector(Graph(0)).counts.empty());
    CHECK(f_vector(Graph(0)).max_dim() == -1);
    CHECK(f_vector(Graph(1)).counts == std::vector<std::uint64_t>{1});
}

TEST_CASE("f-vector dimension cap") {
    FVector capped = f_vector(complete(5), 2);
    CHECK(capped.counts == std::vector<std::uint64_t>{5, 10, 10});
    CHECK(f_vector(complete(5), 0).counts == std::vector<std::uint64_t>{5});
}

TEST_CASE("complete graphs have binomial f-vectors") {
    for (int n = 1; n <= 8; ++n) {
        FVector f = f_vector(complete(n));
        REQUIRE(f.max_dim() == n - 1);
        for (int k = 0; k < n; ++k) CHECK(f.count(k) == binomial(n, k + 1));
    }
}

TEST_CASE("cross-polytopes count 2^{k+1} C(n,k+1) simplices") {
    for (int n = 1; n <= 8; ++n) {
        FVector f = f_vector(cross_polytope(n));
        REQUIRE(f.max_dim() == n - 1);
        for (int k = 0; k < n; ++k)
            CHECK(f.count(k) == (std::uint64_t{1} << (k + 1)) * binomial(n, k + 1));
    }
}

TEST_CASE("Euler characteristic fixtures") {
    CHECK(euler_characteristic(platonic("octahedron")) == 2);
    CHECK(euler_characteristic(platonic("cube")) == -4);
    FVector cross6 = f_vector(cross_polytope(6));
    CHECK(cross6.counts == std::vector<std::uint64_t>{12, 60, 160, 240, 192, 64});
    CHECK(euler_characteristic(cross6) == 0);
    CHECK(euler_characteristic(Graph(0)) == 0);
    CHECK(euler_characteristic(Graph(1)) == 1);
}

TEST_CASE("counting matches exhaustive subset testing") {
    for (const auto& [name, g] : oracles::small_corpus()) {
        if (g.vertex_count() > 7) continue;
        INFO(name);
        CHECK(f_vector(g) == oracles::brute_force_f_vector(g));
    }
    for (const auto& [name, g] : oracles::er_corpus(21)) {
        if (g.vertex_count() > 7) continue;
        INFO(name);
        CHECK(f_vector(g) == oracles::brute_force_f_vector(g));
    }
}

TEST_CASE("sphere profiles") {
    Graph cell16 = cross_polytope(4);
    auto profiles = sphere_profiles(cell16);
    for (const auto& f : profiles) CHECK(f.counts == std::vector<std::uint64_t>{6, 12, 8});

    Graph cross7 = cross_polytope(7);
    for (const auto& f : sphere_profiles(cross7)) {
        CHECK(f.count(0) == 12);
        CHECK(f.count(1) == 60);
        CHECK(f.count(2) == 160);
        CHECK(f.count(3) == 240);
        CHECK(f.count(4) == 192);
    }

    Graph w6 = wheel(6);
    auto wheel_profiles = sphere_profiles(w6);
    // hub is the last vertex; its sphere is the 6-cycle rim
    CHECK(wheel_profiles[6].counts == std::vector<std::uint64_t>{6, 6});

    // profiles are per-vertex sphere f-vectors, degree first
    for (int p = 0; p < w6.vertex_count(); ++p)
        CHECK(wheel_profiles[static_cast<std::size_t>(p)].count(0) ==
              static_cast<std::uint64_t>(w6.degree(p)));
}

TEST_CASE("transfer equations hold on every graph") {
    Graph octa = platonic("octahedron");
    TransferReport r = verify_transfer(octa);
    REQUIRE(r.rows.size() == 2);  // k runs 1..max_dim
    CHECK(r.all_ok);
    CHECK(r.rows[1].k == 2);
    CHECK(r.rows[1].sphere_sum == 24);
    CHECK(r.rows[1].weighted_count == 24);

    // degree sum = twice the edge count is the k=1 row
    CHECK(r.rows[0].sphere_sum == 2 * octa.edge_count());

    CHECK(verify_transfer(discrete(5)).rows.empty());

    for (const auto& [name, g] : oracles::er_corpus(60)) {
        INFO(name);
        CHECK(verify_transfer(g).all_ok);
    }
}

TEST_CASE("hyper relations") {
    HyperReport octa = verify_hyper(platonic("octahedron"), 2);
    CHECK(octa.ok());
    CHECK(octa.graph_lhs == 24);
    CHECK(octa.graph_rhs == 24);

    HyperReport k4 = verify_hyper(complete(4), 3);
    CHECK_FALSE(k4.ok());
    CHECK_FALSE(k4.spheres_ok);  // spheres are triangles with boundary
    CHECK(k4.first_sphere_failure == 0);
    CHECK(k4.sphere_lhs == 3);
    CHECK(k4.sphere_rhs == 6);

    HyperReport cell16 = verify_hyper(cross_polytope(4), 3);
    CHECK(cell16.ok());
    CHECK(cell16.graph_lhs == 64);
    CHECK(cell16.graph_rhs == 64);

    HyperReport cube = verify_hyper(platonic("cube"), 2);
    CHECK_FALSE(cube.graph_ok);  // no triangles at all
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(f_vector(complete(3), -1), Error);
    CHECK_THROWS_AS(verify_hyper(complete(3), 0), Error);
}
