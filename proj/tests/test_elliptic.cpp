#include <doctest.h>

#include <cmath>

#include "axisym/elliptic.hpp"
#include "axisym/errors.hpp"
#include "axisym/fields.hpp"
#include "axisym/grid.hpp"
#include "axisym/quadrature.hpp"

using namespace axisym;

namespace {

double max_diff(const ScalarField& a, const ScalarField& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("stream solve: uniform axial flow") {
    const double W = 0.6;
    for (double eps : {0.0, 0.2}) {
        GridPtr g = build_grid(eps, 1.0, 1.0, 32, 16);
        ScalarField psi = solve_stream(ScalarField(g), -W * eps * eps / 2, -W / 2);
        ScalarField exact = ScalarField::sample(g, [&](double r, double) { return -W * r * r / 2; });
        CHECK(max_diff(psi, exact) < 1e-12);
        auto [vr, vz] = recover_velocity(psi);
        CHECK(vr.max_abs() < 1e-12);
        CHECK(max_diff(vz, ScalarField(g, W)) < 1e-10);
    }
}

TEST_CASE("recover_velocity of a constant stream function") {
    GridPtr g = build_grid(0.1, 1.0, 1.0, 16, 16);
    auto [vr, vz] = recover_velocity(ScalarField(g, 2.5));
    CHECK(vr.max_abs() == 0.0);
    CHECK(vz.max_abs() < 1e-13);
}

TEST_CASE("stream solve round trip and second-order recovery") {
    double errs[2];
    int n = 0;
    for (int N : {32, 64}) {
        GridPtr g = build_grid(0.1, 1.0, 1.0, N, N);
        auto exact = [](double r, double z) {
            return std::pow((r - 0.1) * (1.0 - r), 2) * std::sin(M_PI * z);
        };
        ScalarField psi_star = ScalarField::sample(g, exact);
        // forward operator, then solve: exact inverse up to round-off
        ScalarField chi_disc = apply_stream_operator(psi_star);
        CHECK(max_diff(solve_stream(chi_disc), psi_star) < 1e-12);
        // analytic chi = psi_rr / r - psi_r / r^2 + psi_zz / r
        ScalarField chi = ScalarField::sample(g, [](double r, double z) {
            double p = std::pow((r - 0.1) * (1.0 - r), 2);
            double q = (r - 0.1) * (1.0 - r);
            double qr = 1.1 - 2 * r;
            double pr = 2 * q * qr;
            double prr = 2 * qr * qr - 4 * q;
            double s = std::sin(M_PI * z);
            return ((prr / r - pr / (r * r)) - M_PI * M_PI * p / r) * s;
        });
        for (int j = 0; j < g->Nz; ++j) chi(0, j) = chi(g->Nr, j) = 0.0;
        errs[n++] = max_diff(solve_stream(chi), psi_star);
    }
    CHECK(errs[1] < 1e-4);
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
}

TEST_CASE("eta solve: zero data and round trip") {
    GridPtr g = build_grid(0.0, 1.0, 1.0, 32, 32);
    CHECK(solve_eta(ScalarField(g), 0.5).max_abs() == 0.0);
    const double r_hi = 0.5;
    // eta* = (r_hi^2 - r^2)^2 cos(pi z / a) * ramp
    ScalarField eta = ScalarField::sample(g, [&](double r, double z) {
        return r < r_hi ? std::pow(r_hi * r_hi - r * r, 2) * std::cos(M_PI * z) : 0.0;
    });
    ScalarField theta = apply_eta_operator(eta, r_hi);
    CHECK(max_diff(solve_eta(theta, r_hi), eta) < 1e-12);
}

TEST_CASE("eta solve: second-order recovery against the analytic operator") {
    double errs[2];
    int n = 0;
    const double r_hi = 0.5;
    for (int N : {32, 64}) {
        GridPtr g = build_grid(0.0, 1.0, 1.0, N, N);
        auto F = [&](double r) { return std::pow(r_hi * r_hi - r * r, 2); };
        // F' = -4r (r_hi^2 - r^2), F'' = -4 r_hi^2 + 12 r^2; F'' + 3F'/r = -16 r_hi^2 + 24 r^2
        ScalarField theta = ScalarField::sample(g, [&](double r, double z) {
            if (r > r_hi) return 0.0;
            return (-16 * r_hi * r_hi + 24 * r * r - M_PI * M_PI * F(r)) * std::cos(M_PI * z);
        });
        ScalarField exact = ScalarField::sample(g, [&](double r, double z) {
            return r <= r_hi ? F(r) * std::cos(M_PI * z) : 0.0;
        });
        errs[n++] = max_diff(solve_eta(theta, r_hi), exact);
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
}

TEST_CASE("eta solve: z-independent data against a 1-D oracle") {
    // eta_rr + 3 eta_r / r = theta(r), eta_r(0) = 0, eta(r_hi) = 0 has
    // eta(r) = -int_r^{r_hi} s^-3 int_0^s t^3 theta(t) dt ds
    const double r_hi = 0.625;
    auto theta_f = [](double r) { return std::cos(2.0 * r) - 0.3; };
    auto inner = [&](double s) {
        return simpson([&](double t) { return t * t * t * theta_f(t); }, 0.0, s, 1e-12).value;
    };
    auto oracle = [&](double r) {
        return -simpson([&](double s) { return s == 0.0 ? 0.0 : inner(s) / (s * s * s); }, r, r_hi, 1e-10).value;
    };
    GridPtr g = build_grid(0.0, 1.0, 1.0, 128, 8);
    ScalarField theta = ScalarField::sample(g, [&](double r, double) { return r <= r_hi ? theta_f(r) : 0.0; });
    ScalarField eta = solve_eta(theta, r_hi);
    double err = 0.0;
    for (int i = 0; g->r(i) <= r_hi + 1e-12; i += 8) err = std::max(err, std::abs(eta(i, 3) - oracle(g->r(i))));
    CHECK(err < 1e-4);
}
