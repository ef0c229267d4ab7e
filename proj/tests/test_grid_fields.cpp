#include <doctest.h>

#include <cmath>

#include "axisym/errors.hpp"
#include "axisym/fields.hpp"
#include "axisym/grid.hpp"

using namespace axisym;

namespace {

double max_err(const ScalarField& f, const std::function<double(double, double)>& exact, int i_lo, int i_hi) {
    const Grid& g = f.grid();
    double e = 0.0;
    for (int i = i_lo; i <= i_hi; ++i)
        for (int j = 0; j < g.Nz; ++j) e = std::max(e, std::abs(f(i, j) - exact(g.r(i), g.z(j))));
    return e;
}

}  // namespace

TEST_CASE("grid rejects bad shapes") {
    CHECK_THROWS_AS(build_grid(1.0, 1.0, 1.0, 16, 16), ConfigError);
    CHECK_THROWS_AS(build_grid(0.1, 1.0, 1.0, 16, 15), ConfigError);
    CHECK_THROWS_AS(build_grid(0.1, 1.0, 1.0, 4, 16), ConfigError);
    CHECK_THROWS_AS(build_grid(0.1, 1.0, 0.0, 16, 16), ConfigError);
    CHECK_THROWS_WITH_AS(build_grid(2.0, 1.0, 1.0, 16, 16), doctest::Contains("degenerate annulus"), ConfigError);
}

TEST_CASE("grid nodes") {
    GridPtr g = build_grid(0.1, 1.0, 0.5, 9, 8);
    CHECK(g->nr() == 10);
    CHECK(g->r(0) == doctest::Approx(0.1));
    CHECK(g->r(9) == doctest::Approx(1.0));
    CHECK(g->z(0) == doctest::Approx(-0.5));
    CHECK(g->dz == doctest::Approx(0.125));
}

TEST_CASE("integrate constants and r") {
    GridPtr g1 = build_grid(0.0, 1.0, 1.0, 32, 16);
    CHECK(integrate(ScalarField(g1, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    GridPtr g2 = build_grid(0.5, 1.0, 0.5, 32, 16);
    CHECK(integrate(ScalarField(g2, 1.0)) == doctest::Approx(0.375).epsilon(1e-14));
    GridPtr g3 = build_grid(0.0, 1.0, 0.5, 128, 16);
    double v = integrate(ScalarField::sample(g3, [](double r, double) { return r; }));
    CHECK(std::abs(v - 1.0 / 3.0) < 1e-4);
}

TEST_CASE("integrate rejects mismatched grids") {
    GridPtr a = build_grid(0.0, 1.0, 1.0, 16, 16), b = build_grid(0.0, 1.0, 1.0, 16, 32);
    CHECK_THROWS_AS(ScalarField(a) + ScalarField(b), DomainError);
    // separately built grids of the same shape are interchangeable
    GridPtr c = build_grid(0.0, 1.0, 1.0, 16, 16);
    CHECK_NOTHROW(ScalarField(a) + ScalarField(c));
}

TEST_CASE("ddr exact on quadratics, ddz of constants") {
    GridPtr g = build_grid(0.2, 1.0, 1.0, 16, 16);
    ScalarField f = ScalarField::sample(g, [](double r, double) { return r * r; });
    ScalarField d = ddr(f);
    CHECK(max_err(d, [](double r, double) { return 2.0 * r; }, 0, g->Nr) < 1e-12);
    CHECK(ddz(ScalarField(g, 3.0)).max_abs() == 0.0);
    CHECK(d2dz2(ScalarField(g, 3.0)).max_abs() == 0.0);
}

TEST_CASE("ddz and d2dz2 of sin converge at second order") {
    double errs[2], errs2[2];
    int k = 0;
    for (int N : {32, 64}) {
        GridPtr g = build_grid(0.1, 1.0, 0.7, 8, N);
        const double kap = M_PI / 0.7;
        ScalarField f = ScalarField::sample(g, [&](double, double z) { return std::sin(kap * z); });
        errs[k] = max_err(ddz(f), [&](double, double z) { return kap * std::cos(kap * z); }, 0, g->Nr);
        errs2[k] = max_err(d2dz2(f), [&](double, double z) { return -kap * kap * std::sin(kap * z); }, 0, g->Nr);
        ++k;
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
    CHECK(std::log2(errs2[0] / errs2[1]) >= 1.8);
}

TEST_CASE("laplacian in axis mode") {
    GridPtr g = build_grid(0.0, 1.0, 1.0, 32, 16);
    // Delta r^2 = 4 everywhere, including the axis row
    ScalarField f = ScalarField::sample(g, [](double r, double) { return r * r; });
    CHECK(max_err(laplacian_axisym(f), [](double, double) { return 4.0; }, 0, g->Nr - 1) < 1e-10);
    ScalarField odd = ScalarField::sample(g, [](double r, double) { return r; });
    CHECK_THROWS_AS(laplacian_axisym(odd), DomainError);
}

TEST_CASE("cutoff values") {
    double v[4];
    Cutoff::evaluate(0.2, 0.4, 0.1, v);
    CHECK(v[0] == 1.0);
    Cutoff::evaluate(0.2, 0.4, 0.2, v);
    CHECK(v[0] == 1.0);
    Cutoff::evaluate(0.2, 0.4, 0.5, v);
    CHECK(v[0] == 0.0);
    Cutoff::evaluate(0.2, 0.4, 0.3, v);
    CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-15));
    // C^3 joins: derivatives vanish at both ends
    for (double r : {0.2, 0.4}) {
        Cutoff::evaluate(0.2, 0.4, r, v);
        CHECK(std::abs(v[1]) < 1e-12);
        CHECK(std::abs(v[2]) < 1e-9);
        CHECK(std::abs(v[3]) < 1e-6);
    }
    // derivative against a difference quotient
    double lo[4], hi[4], h = 1e-6;
    Cutoff::evaluate(0.2, 0.4, 0.27 - h, lo);
    Cutoff::evaluate(0.2, 0.4, 0.27 + h, hi);
    Cutoff::evaluate(0.2, 0.4, 0.27, v);
    CHECK(v[1] == doctest::Approx((hi[0] - lo[0]) / (2 * h)).epsilon(1e-6));
    CHECK(v[2] == doctest::Approx((hi[1] - lo[1]) / (2 * h)).epsilon(1e-6));
    CHECK(v[3] == doctest::Approx((hi[2] - lo[2]) / (2 * h)).epsilon(1e-6));
    GridPtr g = build_grid(0.1, 1.0, 1.0, 16, 16);
    CHECK_THROWS_AS(build_cutoff(0.05, 0.4, g), ConfigError);
}

TEST_CASE("swirl_rhs vanishes for zero swirl and rigid rotation") {
    GridPtr g = build_grid(0.0, 1.0, 1.0, 32, 16);
    ScalarField vr = ScalarField::sample(g, [](double r, double z) { return r * std::sin(M_PI * z); });
    ScalarField vz(g, 0.3);
    CHECK(swirl_rhs(ScalarField(g), vr, vz, 1.0).max_abs() == 0.0);
    ScalarField u = ScalarField::sample(g, [](double r, double) { return 0.7 * r * r; });
    CHECK(swirl_rhs(u, ScalarField(g), ScalarField(g), 1.0).max_abs() < 1e-10);
}

TEST_CASE("chi_rhs source vanishes for z-independent swirl") {
    GridPtr g = build_grid(0.1, 1.0, 1.0, 32, 16);
    ScalarField u = ScalarField::sample(g, [](double r, double) { return r * r * (1.0 - r); });
    CHECK(chi_rhs(ScalarField(g), u, ScalarField(g), ScalarField(g), 1.0).max_abs() < 1e-12);
}

TEST_CASE("chi_rhs viscous bracket against a hand expansion") {
    // chi = r^2 (R - r) sin(kz), u = v = 0, R = 1:
    // chi/r = r(1-r) s, (chi/r)_r = (1-2r) s, r (chi/r)_r = (r - 2r^2) s, (r (chi/r)_r)_r = (1 - 4r) s
    // bracket = (1 - 4r) s - k^2 r^2 (1-r) s + 2 (1 - 2r) s
    const double nu = 0.8;
    double errs[2];
    int n = 0;
    for (int N : {32, 64}) {
        GridPtr g = build_grid(0.1, 1.0, 1.0, N, N);
        const double k = M_PI;
        ScalarField chi = ScalarField::sample(g, [&](double r, double z) { return r * r * (1 - r) * std::sin(k * z); });
        ScalarField rhs = chi_rhs(chi, ScalarField(g), ScalarField(g), ScalarField(g), nu);
        errs[n++] = max_err(rhs, [&](double r, double z) {
            double s = std::sin(k * z);
            return nu * ((1 - 4 * r) * s - k * k * r * r * (1 - r) * s + 2 * (1 - 2 * r) * s);
        }, 1, g->Nr - 1);
    }
    CHECK(errs[1] < 1e-2);
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
}
