#include "curv/curvature.hpp"

#include "curv/error.hpp"
#include "curv/parallel.hpp"

namespace curv {

Rational coefficient_a(int n) {
    if (n < 1) throw Error(ErrorCode::param_out_of_range, "coefficient a_n needs n >= 1");
    // (1/2 - 1/(n+2)) (-1)^n == n / (2(n+2)) * (-1)^n
    Rational magnitude = make_rational(n, 2LL * (n + 2));
    return (n % 2 == 0) ? magnitude : -magnitude;
}

Rational coefficient_e(int d) { return d % 2 == 0 ? Rational(1) : Rational(0); }

Rational general_curvature_from_profile(const FVector& sphere) {
    Rational k(1);
    for (int j = 0; j <= sphere.max_dim(); ++j) {
        // term for simplex dimension j of the sphere: (-1)^{j+1} V_j / (j+2)
        Rational term = make_rational(Integer(sphere.count(j)), Integer(j + 2));
        k += (j % 2 == 0) ? -term : term;
    }
    return k;
}

Rational general_curvature(const Graph& g, int p) {
    return general_curvature_from_profile(f_vector(unit_sphere(g, p).graph));
}

std::vector<Rational> euler_form_coefficients(int d) {
    if (d < 2) throw Error(ErrorCode::dimension_too_small, "Euler form needs d >= 2");
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(d - 1));
    c.push_back(coefficient_e(d));
    if (d == 2) {
        c.push_back(coefficient_a(1));
        return c;
    }
    for (int k = 1; k <= d - 3; ++k) c.push_back(coefficient_a(k));
    c.push_back(coefficient_a(d - 2) + Rational(2) * coefficient_a(d - 1) / d);
    return c;
}

Rational euler_form_from_profile(const FVector& sphere, int d) {
    auto coeffs = euler_form_coefficients(d);
    Rational k = coeffs[0];
    for (int j = 1; j < static_cast<int>(coeffs.size()); ++j)
        k += coeffs[static_cast<std::size_t>(j)] * Rational(Integer(sphere.count(j)));
    return k;
}

Rational euler_form(const Graph& g, int p, int d) {
    return euler_form_from_profile(f_vector(unit_sphere(g, p).graph), d);
}

CurvatureReport curvature_report(const Graph& g, const std::vector<FVector>& profiles,
                                 CurvatureMethod method, std::optional<int> d) {
    if (method == CurvatureMethod::euler_form && !d)
        throw Error(ErrorCode::dimension_too_small, "euler-form curvature needs a dimension");
    CurvatureReport report;
    report.method = method;
    if (method == CurvatureMethod::euler_form) {
        if (*d < 2) throw Error(ErrorCode::dimension_too_small, "Euler form needs d >= 2");
        report.dimension_used = *d;
    }
    int n = g.vertex_count();
    report.per_vertex.resize(n);
    parallel_for(n, [&](int p) {
        report.per_vertex[p] = method == CurvatureMethod::general
                                   ? general_curvature_from_profile(profiles[p])
                                   : euler_form_from_profile(profiles[p], *d);
    });
    for (const auto& k : report.per_vertex) {
        report.total += k;
        ++report.class_multiplicities[k];
    }
    report.euler_characteristic = euler_characteristic(f_vector(g));
    report.gbc_holds = report.total == Rational(report.euler_characteristic);
    return report;
}

CurvatureReport curvature_report(const Graph& g, CurvatureMethod method, std::optional<int> d) {
    return curvature_report(g, sphere_profiles(g), method, d);
}

std::pair<bool, CurvatureReport> check_gauss_bonnet(const Graph& g) {
    CurvatureReport report = curvature_report(g, CurvatureMethod::general);
    return {report.gbc_holds, std::move(report)};
}

std::optional<int> find_nonzero_euler_form_vertex(const Graph& g, int d) {
    auto profiles = sphere_profiles(g);
    for (int p = 0; p < g.vertex_count(); ++p)
        if (euler_form_from_profile(profiles[p], d) != 0) return p;
    return std::nullopt;
}

}  // namespace curv
