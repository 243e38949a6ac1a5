#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curv/clique.hpp"
#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

// a_n = (1/2 - 1/(n+2)) (-1)^n, n >= 1:  -1/6, 1/4, -3/10, 1/3, -5/14, ...
Rational coefficient_a(int n);

// e_d = (1 + (-1)^d)/2: 1 for even d, 0 for odd d.
Rational coefficient_e(int d);

// K(p) = 1 + sum_{k>=1} (-1)^k V_{k-1}(p)/(k+1), truncated at the sphere's
// actual top dimension (all later V_k vanish, so truncation is exact).
// Summed over all vertices this gives chi(G) for every finite simple graph.
Rational general_curvature(const Graph& g, int p);
Rational general_curvature_from_profile(const FVector& sphere);

// Coefficients (c_0, c_1, ..., c_{d-2}) of the dimension-d curvature form
// K(p) = c_0 + c_1 V_1(p) + ... + c_{d-2} V_{d-2}(p):
//   c_0 = e_d, c_k = a_k for k <= d-3, c_{d-2} = a_{d-2} + 2 a_{d-1}/d,
// and (e_2, a_1) for d = 2. For d = 3 the single sphere coefficient
// a_1 + 2 a_2 / 3 collapses to 0, so the form vanishes identically.
// Throws Error(dimension_too_small) for d < 2.
std::vector<Rational> euler_form_coefficients(int d);

// Dot product of the coefficients with (1, V_1(p), ..., V_{d-2}(p)); sphere
// counts past the sphere's top dimension read as 0.
Rational euler_form(const Graph& g, int p, int d);
Rational euler_form_from_profile(const FVector& sphere, int d);

enum class CurvatureMethod { general, euler_form };

struct CurvatureReport {
    CurvatureMethod method = CurvatureMethod::general;
    std::optional<int> dimension_used;
    std::vector<Rational> per_vertex;
    std::map<Rational, std::int64_t> class_multiplicities;  // value -> count, exact keys
    Rational total;
    long long euler_characteristic = 0;
    bool gbc_holds = false;  // total == euler_characteristic

    bool operator==(const CurvatureReport&) const = default;
};

// Per-vertex curvature, multiplicity classes, exact total and the chi
// comparison. method == euler_form requires d >= 2. With method == general
// the verdict is true for every input graph (a false verdict means a bug;
// verify_transfer pinpoints the failing dimension).
CurvatureReport curvature_report(const Graph& g, CurvatureMethod method,
                                 std::optional<int> d = std::nullopt);
CurvatureReport curvature_report(const Graph& g, const std::vector<FVector>& profiles,
                                 CurvatureMethod method, std::optional<int> d = std::nullopt);

std::pair<bool, CurvatureReport> check_gauss_bonnet(const Graph& g);

// Search harness for the open odd-dimensional question: first vertex whose
// dimension-d form is nonzero, or nullopt if the form vanishes pointwise.
std::optional<int> find_nonzero_euler_form_vertex(const Graph& g, int d);

}  // namespace curv
