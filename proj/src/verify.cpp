#include "axisym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "axisym/elliptic.hpp"
#include "axisym/errors.hpp"
#include "axisym/evolve.hpp"
#include "axisym/fields.hpp"
#include "axisym/monitors.hpp"

namespace axisym {

namespace {

RadialProfile from_polynomial(const Polynomial& P, double r_min, double r_max, int order) {
    Polynomial dP = P.derivative();
    RadialProfile prof;
    prof.f = [P](double r) { return P(r); };
    prof.df = [dP](double r) { return dP(r); };
    prof.r_min = r_min;
    prof.r_max = r_max;
    prof.order_at_min = order;
    return prof;
}

// x^g - eps^g on [eps, L]: the family along which the one-dimensional constants are sharp.
RadialProfile power_profile(double g, double eps, double L) {
    RadialProfile prof;
    prof.f = [g, eps](double x) { return std::pow(x, g) - std::pow(eps, g); };
    prof.df = [g](double x) { return g * std::pow(x, g - 1.0); };
    prof.r_min = eps;
    prof.r_max = L;
    prof.order_at_min = 1;
    return prof;
}

}  // namespace

std::vector<HardyCase> hardy_corpus(HardyVariant v, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 7919 * static_cast<std::uint64_t>(v));
    auto U = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto I = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto positive_poly = [&]() { return Polynomial({1.0, U(0.0, 2.0), U(0.0, 1.0)}); };

    std::vector<HardyCase> out;
    for (int k = 0; k < n; ++k) {
        HardyCase c;
        c.variant = v;
        c.params.p = U(1.2, 4.0);
        const double p = c.params.p;
        const bool extremal = (k % 10) == 9;
        switch (v) {
            case HardyVariant::h2_11: {
                double L = U(0.5, 3.0);
                if (k % 2 == 0) {
                    c.params.weight = 2.0 / p - U(0.05, 1.5);
                    int nn = I(1, 3);
                    c.profile = from_polynomial(Polynomial::power_of_reflected(L, nn) * positive_poly(), 0.0, L, 0);
                } else {
                    int m = I(1, 3);
                    c.params.weight = 2.0 / p + U(0.05, std::min<double>(m, 1.5));
                    c.profile = from_polynomial(Polynomial::power_of_linear(0.0, m) * positive_poly(), 0.0, L, m);
                }
                break;
            }
            case HardyVariant::h2_12: {
                double L = U(0.5, 3.0);
                int m = I(1, 3);
                // keep clear of mu = m + 2/p, where f - f(0) loses the digits the quadrature needs
                c.params.weight = 2.0 / p + U(0.05, std::min<double>(m - 0.4, 1.5));
                Polynomial P = Polynomial::constant(U(0.5, 2.0)) + Polynomial::power_of_linear(0.0, m) * positive_poly();
                c.profile = from_polynomial(P, 0.0, L, m);
                break;
            }
            case HardyVariant::h2_16: {
                double eps = U(0.05, 0.5);
                c.params.weight = 1.0 / p + U(0.05, 2.0);
                if (extremal) {
                    double g = (c.params.weight - 1.0 / p) * (1.0 - 0.01);
                    c.profile = power_profile(g, eps, eps * 1e8);
                    c.near_extremal = true;
                } else {
                    double L = eps + U(0.5, 3.0);
                    c.profile = from_polynomial(Polynomial::power_of_linear(eps, I(1, 3)) * positive_poly(), eps, L, 1);
                }
                break;
            }
            case HardyVariant::h2_18: {
                double eps = U(0.05, 0.5);
                c.params.weight = 2.0 / p + U(0.05, 2.0);
                if (extremal) {
                    // u = r^g - eps^g with g just below alpha - 2/p
                    double g = (c.params.weight - 2.0 / p) * (1.0 - 0.01);
                    c.profile = power_profile(g, eps, eps * 1e8);
                    c.near_extremal = true;
                } else {
                    double L = eps + U(0.5, 3.0);
                    c.profile = from_polynomial(Polynomial::power_of_linear(eps, I(1, 3)) * positive_poly(), eps, L, 1);
                }
                break;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<EtaCase> eta_corpus() {
    std::vector<EtaCase> cs;
    auto add = [&](std::string name, double eps, double r_hi, Polynomial P, int mode, double shift, double second) {
        EtaCase c;
        c.name = std::move(name);
        c.eps = eps;
        c.r_hi_target = r_hi;
        c.P = std::move(P);
        c.z_mode = mode;
        c.z_shift = shift;
        c.z_second = second;
        cs.push_back(std::move(c));
    };
    add("annulus_basic", 0.1, 0.6, Polynomial::constant(1.0), 1, 0.0, 0.0);
    add("annulus_linear", 0.1, 0.6, Polynomial({1.0, 2.0}), 2, 0.5, 0.0);
    add("annulus_wide", 0.2, 0.8, Polynomial::constant(1.0), 1, 0.3, 0.4);
    add("annulus_thin", 0.05, 0.4, Polynomial({1.0, 1.0}), 1, 0.0, 0.0);
    add("axis_basic", 0.0, 0.5, Polynomial::constant(1.0), 1, 0.0, 0.0);
    add("axis_full", 0.0, 1.0, Polynomial({1.0, 0.0, 1.0}), 1, 1.0, 0.0);
    return cs;
}

EtaSample sample_eta_case(const EtaCase& c, int N) {
    EtaSample s;
    s.grid = build_grid(c.eps, c.R, c.a, N, N);
    const Grid& g = *s.grid;
    s.r_hi = g.r(eta_outer_index(g, c.r_hi_target));
    const double rh = s.r_hi;
    Polynomial F;
    if (c.eps > 0.0) {
        F = Polynomial::power_of_linear(c.eps, 3) * Polynomial::power_of_reflected(rh, 3) * c.P;
    } else {
        Polynomial q({rh * rh, 0.0, -1.0});
        F = q * q * q * c.P;
    }
    Polynomial F1 = F.derivative(), F2 = F1.derivative();
    const double kap = c.z_mode * M_PI / c.a, kap3 = 3.0 * M_PI / c.a;
    auto Z = [&](double z) { return std::cos(kap * z) + c.z_shift + c.z_second * std::cos(kap3 * z); };
    auto Zzz = [&](double z) {
        return -kap * kap * std::cos(kap * z) - c.z_second * kap3 * kap3 * std::cos(kap3 * z);
    };
    auto radial = [&](double r) { return r > rh ? 0.0 : 1.0; };
    s.eta_exact = ScalarField::sample(s.grid, [&](double r, double z) { return radial(r) * F(r) * Z(z); });
    s.theta = ScalarField::sample(s.grid, [&](double r, double z) {
        if (r > rh) return 0.0;
        double f1_over_r = r > 0.0 ? F1(r) / r : F2(0.0);
        return (F2(r) + 3.0 * f1_over_r) * Z(z) + F(r) * Zzz(z);
    });
    return s;
}

const std::vector<std::string>& verify_groups() {
    static const std::vector<std::string> g = {"hardy",       "elliptic", "mms",          "structure", "maxprinciple",
                                               "decay",       "iteration", "restrictions", "poincare"};
    return g;
}

namespace {

EstimateReport threshold_report(std::string id, double measured, double minimum, std::string note = "") {
    // lhs = required minimum, rhs = measured: passes when measured >= minimum
    EstimateReport r = make_report(std::move(id), minimum, measured, 0.0, 0.0);
    r.note = note.empty() ? "passes when the measured value (rhs) reaches the required minimum (lhs)" : note;
    return r;
}

std::vector<EstimateReport> group_hardy(const VerifyOptions& opt) {
    std::vector<EstimateReport> out;
    for (HardyVariant v : {HardyVariant::h2_11, HardyVariant::h2_12, HardyVariant::h2_16, HardyVariant::h2_18}) {
        auto corpus = hardy_corpus(v, opt.hardy_profiles, opt.seed);
        double worst = 0.0, worst_extremal = 0.0;
        int failures = 0, first_fail = -1;
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            HardyParams hp = corpus[k].params;
            hp.constant_scale = opt.hardy_constant_scale;
            EstimateReport r = hardy_check(corpus[k].profile, v, hp);
            worst = std::max(worst, r.ratio);
            if (corpus[k].near_extremal) worst_extremal = std::max(worst_extremal, r.ratio);
            if (!r.pass) {
                ++failures;
                if (first_fail < 0) first_fail = static_cast<int>(k);
            }
        }
        EstimateReport agg = make_report(to_string(v), worst, 1.0, opt.hardy_constant_scale, 1e-6);
        agg.pass = failures == 0;
        agg.terms = {{"profiles", static_cast<double>(corpus.size())},
                     {"failures", static_cast<double>(failures)},
                     {"first_failure", static_cast<double>(first_fail)},
                     {"max_ratio_near_extremal", worst_extremal}};
        agg.note = "lhs is the largest lhs/rhs ratio over the corpus";
        out.push_back(agg);
    }
    return out;
}


std::vector<EstimateReport> group_elliptic() {
    std::vector<EstimateReport> out;
    const char* explicit_ids[] = {"elliptic_4_17", "elliptic_4_18", "elliptic_4_22"};
    for (const EtaCase& c : eta_corpus()) {
        std::vector<EstimateReport> reps[2];
        int level = 0;
        for (int N : {128, 256}) {
            EtaSample s = sample_eta_case(c, N);
            ScalarField eta = solve_eta(s.theta, s.r_hi);
            reps[level++] = elliptic_checks(eta, s.theta, s.r_hi, 0.05);
        }
        for (auto& r : reps[0]) {
            r.id += ":" + c.name;
            out.push_back(r);
        }
        for (const char* id : explicit_ids) {
            auto find = [&](const std::vector<EstimateReport>& v) {
                for (const auto& r : v)
                    if (r.id == id || r.id.rfind(std::string(id) + ":", 0) == 0) return r.ratio;
                return 0.0;
            };
            double r0 = find(reps[0]), r1 = find(reps[1]);
            double drift = r0 != 0.0 ? std::abs(r1 / r0 - 1.0) : std::abs(r1);
            EstimateReport d = make_report(std::string(id) + "_drift:" + c.name, drift, 0.02, 0.02, 0.0);
            d.terms = {{"ratio_N128", r0}, {"ratio_N256", r1}};
            d.note = "relative change of the ratio under one refinement";
            out.push_back(d);
        }
    }
    return out;
}

RunConfig annulus_base() {
    RunConfig c;
    c.eps = 0.1;
    c.R = 1.0;
    c.a = 1.0;
    return c;
}

std::vector<EstimateReport> group_mms() {
    std::vector<EstimateReport> out;
    RunConfig cfg = annulus_base();
    cfg.T = 0.05;
    GridPtr g = build_grid(cfg.eps, cfg.R, cfg.a, 32, 32);
    ManufacturedSolution m = ManufacturedSolution::coupled_case(*g, 1.0);
    MmsTable tab = mms_run(cfg, m, {32, 64, 128}, 0.5);
    const std::pair<const char*, double MmsRow::*> cols[] = {{"u", &MmsRow::err_u},     {"chi", &MmsRow::err_chi},
                                                             {"psi", &MmsRow::err_psi}, {"v_r", &MmsRow::err_vr},
                                                             {"v_z", &MmsRow::err_vz}};
    for (const auto& [name, col] : cols) {
        auto o = tab.order(col);
        double worst = *std::min_element(o.begin(), o.end());
        EstimateReport r = threshold_report(fmt::format("mms_order_{}", name), worst, 1.8);
        for (std::size_t k = 0; k < tab.rows.size(); ++k)
            r.terms.emplace_back(fmt::format("err_N{}", tab.rows[k].N), tab.rows[k].*col);
        for (std::size_t k = 0; k < o.size(); ++k) r.terms.emplace_back(fmt::format("order_{}", k), o[k]);
        out.push_back(r);
    }

    // time self-convergence on a fixed grid. Backward Euler on decaying modes approaches order 1 from
    // below (0.999 at the finest pair here), so the assertion uses the finest pair and a 0.005 allowance.
    const int levels = 5;
    for (Scheme scheme : {Scheme::imex_euler, Scheme::cnab2}) {
        std::vector<ScalarField> us, cs;
        for (int k = 0; k < levels; ++k) {
            RunConfig c = annulus_base();
            c.Nr = c.Nz = 32;
            c.T = 0.1;
            c.dt = 2e-3 / (1 << k);
            c.scheme = scheme;
            c.sample_every = 1 << 30;
            c.init.u_kind = "gaussian";
            c.init.u_amp = 0.5;
            c.init.chi_kind = "sine";
            c.init.chi_amp = 5.0;
            RunResult res = run(c);
            us.push_back(res.final.u);
            cs.push_back(res.final.chi);
        }
        auto diff = [](const ScalarField& a, const ScalarField& b) { return std::sqrt(integrate((a - b) * (a - b))); };
        double finest = 1e300;
        std::vector<std::pair<std::string, double>> terms;
        for (auto* fs : {&us, &cs}) {
            const char* nm = fs == &us ? "u" : "chi";
            for (int k = 0; k + 2 < levels; ++k) {
                double o = std::log2(diff((*fs)[k], (*fs)[k + 1]) / diff((*fs)[k + 1], (*fs)[k + 2]));
                terms.emplace_back(fmt::format("order_{}_{}", nm, k), o);
                if (k + 3 == levels) finest = std::min(finest, o);
            }
        }
        if (scheme == Scheme::imex_euler) {
            EstimateReport r = threshold_report("time_order_imex_euler", finest, 0.995,
                                                "order at the finest dt pair, min over u and chi");
            r.terms = terms;
            out.push_back(r);
        } else {
            out.push_back(measured_report("time_order_cnab2", finest, 2.0, terms, "second-order option, measured"));
        }
    }
    return out;
}

std::vector<EstimateReport> group_structure() {
    std::vector<EstimateReport> out;
    std::vector<double> cont, vort;
    std::vector<int> Ns = {32, 64, 128};
    for (int N : Ns) {
        RunConfig c = annulus_base();
        c.Nr = c.Nz = N;
        c.init.chi_kind = "ring";
        c.init.chi_amp = 2.0;
        c.init.chi_rc = 0.5;
        c.init.chi_sigma = 0.15;
        FlowState s = initial_state(c);
        ScalarField r1 = ddr(s.v_r) + over_r(s.v_r) + ddz(s.v_z);
        ScalarField r2 = s.chi - (ddz(s.v_r) - ddr(s.v_z));
        cont.push_back(std::sqrt(integrate(r1 * r1)));
        vort.push_back(std::sqrt(integrate(r2 * r2)));
    }
    for (auto [name, v] : {std::pair{"continuity", &cont}, std::pair{"vorticity", &vort}}) {
        double o0 = std::log2((*v)[0] / (*v)[1]), o1 = std::log2((*v)[1] / (*v)[2]);
        EstimateReport r = threshold_report(fmt::format("structure_{}_order", name), std::min(o0, o1), 1.8);
        r.terms = {{"res_N32", (*v)[0]}, {"res_N64", (*v)[1]}, {"res_N128", (*v)[2]}, {"order_0", o0}, {"order_1", o1}};
        out.push_back(r);
    }
    {
        RunConfig c;
        c.eps = 0.0;
        c.Nr = c.Nz = 32;
        c.dt = 1e-3;
        c.init.u_kind = "rigid";
        c.init.u_amp = 0.7;
        FlowState s = initial_state(c);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            FlowState n = step(s, c);
            worst = std::max({worst, (n.u - s.u).max_abs(), n.chi.max_abs()});
            s = std::move(n);
        }
        EstimateReport r = make_report("structure_rigid_rotation", worst, 1e-10, 0.0, 0.0);
        r.note = "largest per-step change of u (and chi) over 20 steps";
        out.push_back(r);
    }
    return out;
}

struct MpRun {
    const char* name;
    double eps;
    const char* u_kind;
    double u_amp, u_rc, u_sigma;
    const char* chi_kind;
    double chi_amp;
    bool energy_asserted;
};

std::vector<EstimateReport> group_maxprinciple() {
    std::vector<EstimateReport> out;
    const MpRun runs[] = {
        {"axis_gaussian_sine", 0.0, "gaussian", 0.1, 0.4, 0.12, "sine", 0.3, true},
        {"axis_bump_ring", 0.0, "radial_bump", 0.05, 0.5, 0.1, "ring", 0.5, true},
        {"axis_gaussian", 0.0, "gaussian", 0.2, 0.3, 0.08, "zero", 0.0, true},
        {"annulus_gaussian", 0.1, "gaussian", 0.05, 0.5, 0.1, "zero", 0.0, false},
        {"annulus_bump_ring", 0.2, "radial_bump", 0.02, 0.6, 0.1, "ring", 1.0, false},
    };
    for (const MpRun& p : runs) {
        RunConfig c;
        c.eps = p.eps;
        c.Nr = c.Nz = 32;
        c.dt = 2e-4;
        c.T = 0.3;
        c.sample_every = 5;
        c.init.u_kind = p.u_kind;
        c.init.u_amp = p.u_amp;
        c.init.u_rc = p.u_rc;
        c.init.u_sigma = p.u_sigma;
        c.init.chi_kind = p.chi_kind;
        c.init.chi_amp = p.chi_amp;
        c.init.chi_rc = 0.5;
        RunResult res = run(c);
        auto um = res.series.column("u_max");
        auto E = res.series.column("kinetic_energy");
        const auto& t = res.series.times();
        double umax = *std::max_element(um.begin(), um.end());
        EstimateReport r = make_report(std::string("max_principle:") + p.name, umax, um[0] * (1.0 + 1e-10), 1.0, 0.0);
        r.terms = {{"u_max_initial", um[0]}, {"u_max_final", um.back()}};
        out.push_back(r);
        double rate = -1e300;
        for (std::size_t k = 1; k < E.size(); ++k) rate = std::max(rate, (E[k] - E[k - 1]) / (t[k] - t[k - 1]));
        if (p.energy_asserted) {
            EstimateReport e = make_report(std::string("energy_monotone:") + p.name, rate, 1e-8, 0.0, 0.0);
            e.note = "largest energy increase per unit time between samples";
            if (rate <= 0.0) e.pass = true;
            out.push_back(e);
        } else {
            out.push_back(measured_report(std::string("energy_rate:") + p.name, rate, 1e-8, {{"max_rate", rate}},
                                          "annulus: the inner condition u_r = 0 exerts a torque, energy may rise"));
        }
    }
    {
        // the z-independent swirl mode that grows under the annulus wall conditions
        RunConfig c;
        c.eps = 0.1;
        c.Nr = 32;
        c.Nz = 16;
        c.dt = 1e-3;
        c.T = 3.0;
        c.sample_every = 250;
        c.init.u_kind = "radial_bump";
        c.init.u_amp = 0.05;
        c.init.u_rc = 0.5;
        RunResult res = run(c);
        auto um = res.series.column("u_max");
        const auto& t = res.series.times();
        std::size_t n = um.size();
        double rate = std::log(um[n - 1] / um[n - 2]) / (t[n - 1] - t[n - 2]);
        out.push_back(measured_report("annulus_swirl_growth", rate, 2.1013537, {{"u_max_final", um.back()}},
                                      "late growth rate of max|u| against the wall-mode eigenvalue 2.1014 nu"));
    }
    return out;
}

struct DecayRun {
    const char* name;
    double eps;
    double u_amp;
};

std::vector<EstimateReport> group_decay() {
    std::vector<EstimateReport> out;
    const double eps_param = 0.5;
    for (DecayRun d : {DecayRun{"annulus_no_swirl", 0.1, 0.0}, DecayRun{"axis_swirl", 0.0, 0.05},
                       DecayRun{"annulus_swirl", 0.1, 0.05}}) {
        RunConfig c;
        c.eps = d.eps;
        c.Nr = c.Nz = 48;
        c.dt = 5e-4;
        c.T = 1.0;
        c.r0 = 0.3;
        c.sample_every = 10;
        c.init.u_kind = d.u_amp > 0.0 ? "gaussian" : "zero";
        c.init.u_amp = d.u_amp;
        c.init.u_rc = 0.35;
        c.init.chi_kind = "ring";
        c.init.chi_amp = 1.0;
        c.init.chi_rc = 0.35;
        RunResult res = run(c);
        PoincareResult pc = poincare_constant(res.final.grid, 2.0 * c.r0, c.nu);
        auto X = res.series.column("x_functional");
        const auto& t = res.series.times();
        double A = 0.0;
        for (std::size_t k = 0; k < X.size(); ++k)
            if (t[k] >= 0.5 * c.T) A = std::max(A, X[k]);
        double worst_rise = 0.0, worst_env = -1e300;
        for (std::size_t k = 1; k < X.size(); ++k) {
            if (t[k] > 0.1 * c.T) worst_rise = std::max(worst_rise, (X[k] - X[k - 1]) / X[0]);
            worst_env = std::max(worst_env, X[k] / decay_envelope(A, X[0], eps_param, pc.nu_star, t[k]));
        }
        auto restr = check_restrictions(res.series, c.nu);
        std::vector<std::pair<std::string, double>> terms = {
            {"X0", X[0]}, {"X_final", X.back()}, {"A", A}, {"nu_star", pc.nu_star}, {"c_p", pc.c_p},
            {"swirl_6_9_satisfied", restr[1].satisfied ? 1.0 : 0.0}};
        if (std::string(d.name) == "annulus_swirl") {
            out.push_back(measured_report(std::string("decay_monotone:") + d.name, worst_rise, 0.0, terms,
                                          "annulus swirl feeds the growing wall mode; measured only"));
            continue;
        }
        EstimateReport m = make_report(std::string("decay_monotone:") + d.name, worst_rise, 1e-12, 0.0, 0.0);
        m.terms = terms;
        m.note = "largest rise of X between samples after t = T/10, relative to X(0)";
        if (worst_rise <= 0.0) m.pass = true;
        out.push_back(m);
        EstimateReport e = make_report(std::string("decay_envelope:") + d.name, worst_env, 1.0, eps_param, 0.0);
        e.terms = terms;
        e.note = "largest X(t) / envelope(t)";
        out.push_back(e);
        EstimateReport r69 = make_report(std::string("decay_restriction:") + d.name, restr[1].lhs, restr[1].threshold,
                                         1.0, 0.0);
        r69.note = "(4/nu^3) sup|u|^4 against 3 nu on the cut-off support";
        out.push_back(r69);
    }
    {
        const double A = 0.7, X0 = 3.0, nu_star = 2.0, T = std::log(4.0) / nu_star;
        const double q = std::exp(-nu_star * T) / (1.0 - eps_param);
        double closed = A / (1.0 - q);
        double far = decay_iterate(A, X0, eps_param, nu_star, T, 200);
        double x = X0;
        for (int k = 0; k < 200; ++k) x = A + q * x;
        double err = std::max(std::abs(far - closed), std::abs(x - closed)) / closed;
        EstimateReport r = make_report("decay_iterate_limit", err, 1e-12, 0.0, 0.0);
        r.terms = {{"closed_form", closed}, {"iterate_k200", far}, {"recursion_200", x}};
        out.push_back(r);
    }
    return out;
}

std::vector<EstimateReport> group_iteration() {
    double worst = 0.0;
    std::vector<std::pair<std::string, double>> terms;
    for (double mu : {0.0, 0.5, 0.9, 0.99})
        for (double K : {0.0, 1.0, 3.5, 100.0}) {
            double f = 0.0, prev = -1.0;
            for (int n = 0; n < 100000 && f != prev; ++n) {
                prev = f;
                f = mu * f + K;
            }
            double b = iteration_bound(mu, K);
            double err = std::abs(f - b) / std::max(1.0, std::abs(b));
            worst = std::max(worst, err);
            terms.emplace_back(fmt::format("mu{}_K{}", mu, K), err);
        }
    EstimateReport r = make_report("iteration_bound", worst, 1e-12, 0.0, 0.0);
    r.terms = terms;
    r.note = "relative gap between K/(1 - mu) and the recursion limit";
    return {r};
}

std::vector<EstimateReport> group_restrictions() {
    std::vector<EstimateReport> out;
    const double nu = 1.0;
    {
        // u = c0 e^{2t} U(r), forced; max over the cut-off support crosses the threshold at a known time
        RunConfig c;
        // fine in r: the z-independent mode carries an O(h^2) amplitude error of a few percent at N = 32
        c.eps = 0.1;
        c.Nr = 128;
        c.Nz = 8;
        c.nu = nu;
        c.dt = 1.25e-4;
        c.T = 0.5;
        c.r0 = 0.45;
        c.sample_every = 80;
        validate(c);
        GridPtr g = c.make_grid();
        ManufacturedSolution m = ManufacturedSolution::swirl_case(*g, nu);
        m.swirl_mode = 0;
        m.swirl_rate = -2.0;
        m.swirl_amp = 0.6;
        double umax_nodes = 0.0;
        for (int i = 0; i < g->nr() && g->r(i) <= 2.0 * c.r0 * (1.0 + 1e-12); ++i)
            umax_nodes = std::max(umax_nodes, std::abs(m.U(g->r(i))));
        const double threshold = swirl_threshold_weak(nu);
        const double t_cross = 0.5 * std::log(threshold / (m.swirl_amp * umax_nodes));
        c.forcing = [&m, g](double t, ScalarField& fu, ScalarField&) {
            for (int i = 0; i < g->nr(); ++i)
                for (int j = 0; j < g->Nz; ++j) fu(i, j) = m.forcing_u(t, g->r(i), g->z(j));
        };
        c.init.u_kind = "zero";
        // start from the exact profile
        RunResult res;
        {
            FlowState s = make_state(0.0, m.sample_u(g, 0.0), ScalarField(g));
            Cutoff cut = build_cutoff(c.r0, 2.0 * c.r0, g);
            res.series.nu = nu;
            res.series.add_sample(0.0, sample_functionals(s, cut, nu));
            Integrator integ(c);
            long steps = static_cast<long>(std::llround(c.T / c.dt));
            for (long n = 1; n <= steps; ++n) {
                s = integ.advance(s);
                if (n % c.sample_every == 0) res.series.add_sample(s.t, sample_functionals(s, cut, nu));
            }
        }
        auto reps = check_restrictions(res.series, nu);
        const double dt_sample = c.dt * c.sample_every;
        double tv = reps[0].first_violation_t.value_or(-1.0);
        EstimateReport r = make_report("restriction_crossing_time", std::abs(tv - t_cross), dt_sample, 0.0, 1e-9);
        r.terms = {{"true_crossing", t_cross}, {"first_violation_t", tv}, {"sample_interval", dt_sample}};
        r.note = "the flagged sample must lie within one sample interval of the analytic crossing";
        out.push_back(r);
    }
    {
        MonitorSeries s({"u_max_cutoff"});
        s.add_sample(0.0, std::vector<double>{nu});
        s.add_sample(1.0, std::vector<double>{nu});
        auto reps = check_restrictions(s, nu);
        EstimateReport a = make_report("restriction_marginal_5_10", reps[0].lhs, reps[0].threshold, 1.0, 0.0);
        a.pass = reps[0].satisfied;
        out.push_back(a);
        EstimateReport b = make_report("restriction_marginal_6_9", 0.0, 0.0, 1.0, 0.0);
        b.pass = !reps[1].satisfied;
        b.terms = {{"lhs", reps[1].lhs}, {"threshold", reps[1].threshold}};
        b.note = "passes when the marginal swirl is flagged as violating";
        out.push_back(b);
    }
    return out;
}

std::vector<EstimateReport> group_poincare() {
    std::vector<EstimateReport> out;
    {
        double a = 1.0;
        double cp = poincare_constant_periodic(a, 256);
        double exact = (a / M_PI) * (a / M_PI);
        out.push_back(make_report("poincare_periodic", std::abs(cp / exact - 1.0), 1e-3, 0.0, 0.0));
    }
    {
        // r_hi = 0.6 is a node at both resolutions
        GridPtr g64 = build_grid(0.2, 1.0, 1.0, 64, 64), g128 = build_grid(0.2, 1.0, 1.0, 128, 128);
        double c64 = poincare_constant(g64, 0.6, 1.0).c_p, c128 = poincare_constant(g128, 0.6, 1.0).c_p;
        EstimateReport r = make_report("poincare_refinement", std::abs(c128 / c64 - 1.0), 0.01, 0.0, 0.0);
        r.terms = {{"c_p_N64", c64}, {"c_p_N128", c128}};
        out.push_back(r);
        GridPtr g2 = build_grid(0.4, 2.0, 2.0, 64, 64);
        double c2 = poincare_constant(g2, 1.2, 1.0).c_p;
        out.push_back(make_report("poincare_scaling", std::abs(c2 / (4.0 * c64) - 1.0), 1e-9, 0.0, 0.0));
    }
    {
        GridPtr g = build_grid(0.0, 1.0, 1.0, 128, 16);
        const double j01 = 2.404825557695773;
        double cp = poincare_constant(g, 1.0, 1.0).c_p;
        EstimateReport r = make_report("poincare_disc", std::abs(cp * j01 * j01 - 1.0), 0.01, 0.0, 0.0);
        r.terms = {{"c_p", cp}, {"exact", 1.0 / (j01 * j01)}};
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<EstimateReport> run_verify_group(const std::string& group, const VerifyOptions& opt) {
    if (group == "hardy") return group_hardy(opt);
    if (group == "elliptic") return group_elliptic();
    if (group == "mms") return group_mms();
    if (group == "structure") return group_structure();
    if (group == "maxprinciple") return group_maxprinciple();
    if (group == "decay") return group_decay();
    if (group == "iteration") return group_iteration();
    if (group == "restrictions") return group_restrictions();
    if (group == "poincare") return group_poincare();
    throw ConfigError("unknown verify group '" + group + "'");
}

}  // namespace axisym
