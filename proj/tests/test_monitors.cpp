#include <doctest.h>

#include <cmath>

#include "axisym/errors.hpp"
#include "axisym/evolve.hpp"
#include "axisym/fields.hpp"
#include "axisym/monitors.hpp"
#include "axisym/quadrature.hpp"

using namespace axisym;

namespace {

MonitorSeries static_snapshots(const ScalarField& f, int samples) {
    MonitorSeries s({"dummy"});
    for (int n = 0; n < samples; ++n) {
        s.add_sample(n, std::vector<double>{0.0});
        s.add_snapshot("f", f);
    }
    return s;
}

}  // namespace

TEST_CASE("series accumulates trapezoid integrals and suprema") {
    MonitorSeries s({"a", "b"});
    s.add_sample(0.0, std::vector<double>{1.0, 0.0});
    s.add_sample(1.0, std::vector<double>{3.0, 2.0});
    s.add_sample(3.0, std::vector<double>{1.0, 0.0});
    CHECK(s.integral("a") == doctest::Approx(2.0 + 4.0));
    CHECK(s.sup("b") == 2.0);
    CHECK_THROWS(s.add_sample(2.0, std::vector<double>{0.0, 0.0}));
    CHECK(s.to_csv().rfind("t,a,b\n", 0) == 0);
}

TEST_CASE("weighted_norm trivial cases") {
    GridPtr g = build_grid(0.2, 1.0, 1.0, 32, 16);
    const double V = g->volume();
    CHECK(weighted_norm(ScalarField(g, 1.0), 2.0, 0.0) == doctest::Approx(std::sqrt(V)).epsilon(1e-13));
    ScalarField r = ScalarField::sample(g, [](double rr, double) { return rr; });
    CHECK(weighted_norm(r, 2.0, -1.0) == doctest::Approx(std::sqrt(V)).epsilon(1e-13));
    GridPtr ga = build_grid(0.0, 1.0, 1.0, 32, 16);
    CHECK_THROWS_AS(weighted_norm(ScalarField(ga, 1.0), 2.0, -1.0), DomainError);
}

TEST_CASE("weighted_norm of a Gaussian against 1-D quadrature") {
    const double s2 = 2.0 * 0.08 * 0.08;
    GridPtr g = build_grid(0.1, 1.0, 1.0, 256, 128);
    ScalarField f = ScalarField::sample(g, [&](double r, double z) {
        return std::exp(-((r - 0.5) * (r - 0.5) + z * z) / s2);
    });
    // separable: int e^{-4(r-.5)^2/s2} r^{-4} r dr * int e^{-4 z^2/s2} dz
    double Ir = simpson([&](double r) { return std::exp(-4 * (r - 0.5) * (r - 0.5) / s2) / (r * r * r); }, 0.1, 1.0,
                        1e-13).value;
    double Iz = simpson([&](double z) { return std::exp(-4 * z * z / s2); }, -1.0, 1.0, 1e-13).value;
    double oracle = std::pow(Ir * Iz, 0.25);
    CHECK(weighted_norm(f, 4.0, -1.0) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("v2_norm") {
    MonitorSeries zero({"f_h0_sq", "f_grad_h0_sq"});
    zero.add_sample(0.0, std::vector<double>{0.0, 0.0});
    zero.add_sample(1.0, std::vector<double>{0.0, 0.0});
    CHECK(v2_norm(zero, "f", 0) == 0.0);
    CHECK_THROWS_AS(v2_norm(zero, "g", 0), DomainError);

    MonitorSeries once({"f_h0_sq", "f_grad_h0_sq"});
    once.add_sample(0.0, std::vector<double>{4.0, 9.0});
    CHECK(v2_norm(once, "f", 0) == doctest::Approx(2.0));

    // f = e^{-t} g: ||f||^2 = A e^{-2t}, ||grad f||^2 = B e^{-2t}
    const double A = 2.0, B = 5.0, nu = 0.7, T = 1.5;
    MonitorSeries decay({"f_h1_sq", "f_grad_h1_sq"});
    decay.nu = nu;
    const int n = 3000;
    for (int k = 0; k <= n; ++k) {
        double t = T * k / n;
        decay.add_sample(t, std::vector<double>{A * std::exp(-2 * t), B * std::exp(-2 * t)});
    }
    double integral = simpson([&](double t) { return B * std::exp(-2 * t); }, 0.0, T, 1e-12).value;
    CHECK(v2_norm(decay, "f", 1) == doctest::Approx(std::sqrt(A + nu * integral)).epsilon(1e-6));
}

TEST_CASE("holder seminorm") {
    GridPtr g = build_grid(0.1, 1.0, 1.0, 40, 8);
    CHECK(holder_seminorm(static_snapshots(ScalarField(g, 2.0), 3), "f", 0.5).seminorm == 0.0);
    ScalarField sq = ScalarField::sample(g, [](double r, double) { return std::sqrt(r - 0.1); });
    HolderResult h = holder_seminorm(static_snapshots(sq, 2), "f", 0.5);
    CHECK_FALSE(h.subsampled);
    CHECK(h.seminorm == doctest::Approx(1.0).epsilon(1e-12));
    ScalarField lin = ScalarField::sample(g, [](double r, double) { return r; });
    CHECK(holder_seminorm(static_snapshots(lin, 2), "f", 0.5).seminorm == doctest::Approx(std::sqrt(0.9)).epsilon(1e-12));
    // subsampled path is seeded and reproducible
    GridPtr big = build_grid(0.1, 1.0, 1.0, 64, 64);
    ScalarField wave = ScalarField::sample(big, [](double r, double z) { return std::sin(3 * r) * std::cos(M_PI * z); });
    auto s = static_snapshots(wave, 4);
    HolderResult a = holder_seminorm(s, "f", 0.5, 20000, 9), b = holder_seminorm(s, "f", 0.5, 20000, 9);
    CHECK(a.subsampled);
    CHECK(a.seminorm == b.seminorm);
    CHECK(a.pairs_examined == b.pairs_examined);
}

TEST_CASE("truncation functionals") {
    GridPtr g = build_grid(0.0, 1.0, 1.0, 128, 256);
    TruncationParams p;
    p.level = 0.5;
    p.rho = 0.4;
    p.tau = 2.0;
    auto below = static_snapshots(ScalarField(g, 0.3), 3);
    TruncationReport z = truncation_functionals(below, "f", p);
    CHECK(z.mu == 0.0);
    CHECK(z.max_l2sq_shrunk == 0.0);
    CHECK(z.spacetime_l2sq == 0.0);

    // constant above the level: w^(k) = c - k, mu = tau * meas(B), meas(B) = 2 rho^3 / 3 without the 2 pi
    auto above = static_snapshots(ScalarField(g, 0.8), 3);
    TruncationReport c = truncation_functionals(above, "f", p);
    const double ball = 2.0 * std::pow(p.rho, 3) / 3.0;
    CHECK(c.mu == doctest::Approx(p.tau * ball).epsilon(2e-2));
    CHECK(c.initial_l2sq == doctest::Approx(0.09 * ball).epsilon(2e-2));

    // Gaussian centred on the axis, level at half height: A_k is the ball of radius sigma sqrt(2 ln 2)
    const double sigma = 0.15;
    ScalarField gauss = ScalarField::sample(g, [&](double r, double zz) {
        return std::exp(-(r * r + zz * zz) / (2 * sigma * sigma));
    });
    const double s = sigma * std::sqrt(2 * std::log(2.0));
    TruncationReport gr = truncation_functionals(static_snapshots(gauss, 3), "f", p);
    CHECK(gr.mu == doctest::Approx(p.tau * 2.0 * s * s * s / 3.0).epsilon(3e-2));
    CHECK_THROWS_AS(truncation_functionals(above, "f", TruncationParams{}), DomainError);
}

TEST_CASE("functional_X") {
    GridPtr g = build_grid(0.0, 1.0, 1.0, 128, 32);
    Cutoff cut = build_cutoff(0.25, 0.5, g);
    FlowState zero = make_state(0.0, ScalarField(g), ScalarField(g));
    CHECK(functional_X(zero, cut, 1.0) == 0.0);

    ScalarField chi = ScalarField::sample(g, [](double r, double z) { return r * r * (1 - r) * std::sin(M_PI * z); });
    FlowState s1 = make_state(0.0, ScalarField(g), chi);
    FlowState s2 = make_state(0.0, ScalarField(g), 2.0 * chi);
    CHECK(functional_X(s2, cut, 1.0) == doctest::Approx(4.0 * functional_X(s1, cut, 1.0)).epsilon(1e-13));

    // u = r g(r) cos(pi z): X = (1/nu^2) int g^4 zeta^4 cos^4 / r dr dz, cos^4 averages to 3/8
    const double nu = 0.5;
    auto gfun = [](double r) { return r * r; };
    ScalarField u = ScalarField::sample(g, [&](double r, double z) { return r * gfun(r) * std::cos(M_PI * z); });
    FlowState su = make_state(0.0, u, ScalarField(g));
    double zeta[4];
    double Ir = simpson([&](double r) {
        Cutoff::evaluate(0.25, 0.5, r, zeta);
        return std::pow(gfun(r) * zeta[0], 4) / r;
    }, 1e-300, 0.5, 1e-12).value;
    double oracle = Ir * 2.0 * 3.0 / 8.0 / (nu * nu);
    CHECK(functional_X(su, cut, nu) == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("functional_L") {
    RunConfig c;
    c.Nr = c.Nz = 16;
    c.dt = 1e-3;
    c.T = 0.1;
    RunResult zero = run(c);
    Cutoff cut = build_cutoff(c.r0, 2 * c.r0, zero.final.grid);
    CHECK(functional_L(zero.series, cut) == 0.0);

    // static state sampled at t = 0 and t = 1
    GridPtr g = build_grid(0.1, 1.0, 1.0, 64, 32);
    ScalarField u = ScalarField::sample(g, [](double r, double z) {
        return 0.3 * r * r * std::pow(1 - r, 2) * (1 + 0.5 * std::cos(M_PI * z));
    });
    ScalarField chi = ScalarField::sample(g, [](double r, double z) { return (r - 0.1) * (1 - r) * std::sin(M_PI * z); });
    FlowState s = make_state(0.0, u, chi);
    Cutoff cz = build_cutoff(0.2, 0.4, g);
    MonitorSeries m;
    m.cutoff_lo = 0.2;
    m.cutoff_hi = 0.4;
    auto vals = sample_functionals(s, cz, 1.0);
    m.add_sample(0.0, vals);
    m.add_sample(1.0, vals);
    auto get = [&](const std::string& id) { return m.value(0, id); };
    double expect = get("vphi_tilde4_r4") + get("chi_tilde_r_h0_sq") + get("chi_tilde_r_grad_h0_sq") +
                    get("vr_tilde_r_r_grad_l2sq") + get("vr_tilde_r_r_over_r_l2sq");
    CHECK(functional_L(m, cz) == doctest::Approx(expect).epsilon(1e-13));
    // first term against 1-D quadrature: v_phi~^4 / r^4 = (u zeta / r^2)^4, z average of (1 + cos/2)^4
    double zeta[4];
    double Ir = simpson([&](double r) {
        Cutoff::evaluate(0.2, 0.4, r, zeta);
        return std::pow(0.3 * std::pow(1 - r, 2) * zeta[0], 4) * r;
    }, 0.1, 0.4, 1e-12).value;
    double Iz = simpson([](double z) { return std::pow(1 + 0.5 * std::cos(M_PI * z), 4); }, -1.0, 1.0, 1e-12).value;
    CHECK(get("vphi_tilde4_r4") == doctest::Approx(Ir * Iz).epsilon(2e-3));
    CHECK_THROWS_AS(functional_L(m, build_cutoff(0.25, 0.5, g)), DomainError);

    // the vanishing cut-off annihilates every term
    MonitorSeries mz;
    mz.cutoff_vanishing = true;
    Cutoff zc = zero_cutoff(g);
    auto zv = sample_functionals(s, zc, 1.0);
    mz.add_sample(0.0, zv);
    mz.add_sample(1.0, zv);
    CHECK(functional_L(mz, zc) == 0.0);
}

TEST_CASE("restrictions") {
    MonitorSeries z({"u_max_cutoff"});
    z.add_sample(0.0, std::vector<double>{0.0});
    z.add_sample(1.0, std::vector<double>{0.0});
    for (auto& r : check_restrictions(z, 1.0)) CHECK(r.satisfied);

    const double nu = 2.0;
    MonitorSeries m({"u_max_cutoff"});
    m.add_sample(0.0, std::vector<double>{nu});
    auto reps = check_restrictions(m, nu);
    CHECK(reps[0].id == "swirl_5_10");
    CHECK(reps[0].satisfied);
    CHECK(reps[0].threshold == doctest::Approx(1.0573712634405641 * nu));
    CHECK(reps[1].id == "swirl_6_9");
    CHECK_FALSE(reps[1].satisfied);

    // a ramp crossing the threshold between samples
    MonitorSeries ramp({"u_max_cutoff"});
    const double thr = swirl_threshold_weak(1.0);
    for (int k = 0; k <= 100; ++k) ramp.add_sample(0.01 * k, std::vector<double>{2.0 * thr * 0.01 * k});
    auto rr = check_restrictions(ramp, 1.0);
    REQUIRE(rr[0].first_violation_t.has_value());
    CHECK(*rr[0].first_violation_t > 0.5);
    CHECK(*rr[0].first_violation_t - 0.5 <= 0.01 + 1e-12);
}
