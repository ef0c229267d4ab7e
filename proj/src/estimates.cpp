#include "axisym/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "axisym/elliptic.hpp"
#include "axisym/errors.hpp"
#include "axisym/evolve.hpp"
#include "axisym/quadrature.hpp"
#include "axisym/stencil.hpp"

namespace axisym {

EstimateReport make_report(std::string id, double lhs, double rhs, double constant, double slack) {
    EstimateReport r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.constant = constant;
    r.slack = slack;
    if (lhs == 0.0 && rhs == 0.0) {
        r.ratio = 0.0;
        r.pass = true;
    } else {
        r.ratio = rhs != 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
        r.pass = lhs <= rhs * (1.0 + slack);
    }
    return r;
}

EstimateReport measured_report(std::string id, double lhs, double rhs,
                               std::vector<std::pair<std::string, double>> terms, std::string note) {
    EstimateReport r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs != 0.0 ? lhs / rhs : 0.0;
    r.measured_only = true;
    r.pass = true;
    r.terms = std::move(terms);
    r.note = std::move(note);
    return r;
}

namespace {

// JSON has no infinity; keep the value readable.
nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::ordered_json to_json(const EstimateReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["constant"] = number(r.constant);
    j["ratio"] = number(r.ratio);
    j["pass"] = r.pass;
    j["slack"] = r.slack;
    j["measured_only"] = r.measured_only;
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.terms) terms[k] = number(v);
    j["terms"] = terms;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

nlohmann::ordered_json to_json(const std::vector<EstimateReport>& rs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a;
}

// ---------------------------------------------------------------------------------------------

HardyVariant parse_hardy_variant(const std::string& s) {
    if (s == "2_11" || s == "hardy_2_11") return HardyVariant::h2_11;
    if (s == "2_12" || s == "hardy_2_12") return HardyVariant::h2_12;
    if (s == "2_16" || s == "hardy_2_16") return HardyVariant::h2_16;
    if (s == "2_18" || s == "hardy_2_18") return HardyVariant::h2_18;
    throw ConfigError("unknown Hardy variant '" + s + "'");
}

std::string to_string(HardyVariant v) {
    switch (v) {
        case HardyVariant::h2_11: return "hardy_2_11";
        case HardyVariant::h2_12: return "hardy_2_12";
        case HardyVariant::h2_16: return "hardy_2_16";
        case HardyVariant::h2_18: return "hardy_2_18";
    }
    return "hardy";
}

double hardy_constant(HardyVariant v, double p, double w) {
    switch (v) {
        case HardyVariant::h2_11:
        case HardyVariant::h2_12: return 1.0 / std::abs(w - 2.0 / p);
        case HardyVariant::h2_16: return 1.0 / (w - 1.0 / p);
        case HardyVariant::h2_18: return 1.0 / (w - 2.0 / p);
    }
    return 0.0;
}

namespace {

double profile_scale(const RadialProfile& prof) {
    double s = 0.0;
    for (int k = 0; k <= 256; ++k) {
        double r = prof.r_min + (prof.r_max - prof.r_min) * k / 256.0;
        s = std::max(s, std::abs(prof.f(r)));
    }
    return s;
}

// Integral over [0, L] of g(r) where g ~ r^e near 0 (e > -1).
double integrate_from_axis(const std::function<double(double)>& g, double L, double e, const char* what) {
    int m = static_cast<int>(std::ceil(5.0 / (e + 1.0)));
    m = std::clamp(m, 1, 60);
    QuadratureResult q = simpson_power_map(g, L, m, 1e-8);
    if (!q.converged) throw ConvergenceError(fmt::format("hardy: quadrature of the {} did not converge", what));
    return q.value;
}

double integrate_off_axis(const std::function<double(double)>& g, double a, double b, const char* what) {
    QuadratureResult q = simpson_log_map(g, a, b, 1e-8);
    if (!q.converged) throw ConvergenceError(fmt::format("hardy: quadrature of the {} did not converge", what));
    return q.value;
}

}  // namespace

EstimateReport hardy_check(const RadialProfile& prof, HardyVariant v, const HardyParams& hp) {
    const double p = hp.p;
    const double w = hp.weight;
    const std::string id = to_string(v);
    auto fail = [&](const std::string& what) { throw PreconditionError(id + ": " + what); };
    if (!(p > 1.0)) fail(fmt::format("p must exceed 1 (got {})", p));
    if (!(prof.r_max > prof.r_min) || prof.r_min < 0.0) fail("profile interval must satisfy 0 <= r_min < r_max");
    const double scale = profile_scale(prof);
    const double tol = 1e-12 * std::max(scale, 1e-300);
    const double L = prof.r_max;

    double lhs_p = 0.0, rhs_p = 0.0;
    switch (v) {
        case HardyVariant::h2_11:
        case HardyVariant::h2_12: {
            if (prof.r_min != 0.0) fail("profile must start on the axis (r_min = 0)");
            if (std::abs(w - 2.0 / p) < 1e-12) fail("mu = 2/p is excluded");
            const bool shifted = v == HardyVariant::h2_12;
            if (shifted && w < 2.0 / p) fail("the shifted form needs mu > 2/p");
            const double f0 = shifted ? prof.f(0.0) : 0.0;
            auto f = [&](double r) { return prof.f(r) - f0; };
            int order = shifted ? std::max(prof.order_at_min, 1) : prof.order_at_min;
            if (w < 2.0 / p) {
                if (std::abs(prof.f(L)) > tol) fail("f must vanish at r_max when mu < 2/p");
            } else if (!shifted && std::abs(prof.f(0.0)) > tol) {
                fail("f(0) != 0 with mu > 2/p; use the shifted variant hardy_2_12");
            }
            const double eL = order * p + 1.0 - w * p;
            const double eR = std::max(order - 1, 0) * p + 1.0 + p - w * p;
            if (eL <= -1.0) fail("|f|^p r^(-mu p) is not integrable at the axis for this vanishing order");
            // split off r^order so that the factors do not overflow near the axis
            auto gl = [&](double r) {
                return std::pow(std::abs(f(r)) / std::pow(r, order), p) * std::pow(r, eL);
            };
            auto gr = [&](double r) {
                const int od = std::max(order - 1, 0);
                return std::pow(std::abs(prof.df(r)) / std::pow(r, od), p) * std::pow(r, eR);
            };
            lhs_p = integrate_from_axis(gl, L, eL, "left side");
            rhs_p = integrate_from_axis(gr, L, eR, "right side");
            if (w > 2.0 / p) lhs_p += std::pow(std::abs(f(L)), p) * std::pow(L, 2.0 - w * p) / (w * p - 2.0);
            break;
        }
        case HardyVariant::h2_16: {
            if (!(prof.r_min > 0.0)) fail("needs eps > 0");
            if (!(w > 1.0 / p)) fail("beta must exceed 1/p");
            if (std::abs(prof.f(prof.r_min)) > tol) fail("F must vanish for x <= eps");
            auto gl = [&](double x) { return std::pow(std::abs(prof.f(x)), p) * std::pow(x, -w * p); };
            auto gr = [&](double x) { return std::pow(std::abs(prof.df(x)), p) * std::pow(x, (1.0 - w) * p); };
            lhs_p = integrate_off_axis(gl, prof.r_min, L, "left side");
            rhs_p = integrate_off_axis(gr, prof.r_min, L, "right side");
            lhs_p += std::pow(std::abs(prof.f(L)), p) * std::pow(L, 1.0 - w * p) / (w * p - 1.0);
            break;
        }
        case HardyVariant::h2_18: {
            if (!(prof.r_min > 0.0)) fail("needs eps > 0");
            if (!(w > 2.0 / p)) fail("alpha must exceed 2/p");
            if (std::abs(prof.f(prof.r_min)) > tol) fail("u must vanish for r <= eps (u_r = 0 there)");
            auto gl = [&](double r) { return std::pow(std::abs(prof.f(r)), p) * std::pow(r, 1.0 - w * p); };
            auto gr = [&](double r) { return std::pow(std::abs(prof.df(r)), p) * std::pow(r, 1.0 + p - w * p); };
            lhs_p = integrate_off_axis(gl, prof.r_min, L, "left side");
            rhs_p = integrate_off_axis(gr, prof.r_min, L, "right side");
            lhs_p += std::pow(std::abs(prof.f(L)), p) * std::pow(L, 2.0 - w * p) / (w * p - 2.0);
            break;
        }
    }
    const double c = hardy_constant(v, p, w) * hp.constant_scale;
    EstimateReport rep = make_report(id, std::pow(lhs_p, 1.0 / p), c * std::pow(rhs_p, 1.0 / p), c, hp.slack);
    rep.terms = {{"p", p}, {"weight", w}, {"r_min", prof.r_min}, {"r_max", prof.r_max}};
    return rep;
}

// ---------------------------------------------------------------------------------------------

namespace {

double sq(const ScalarField& f) { return integrate(f * f); }

}  // namespace

std::vector<EstimateReport> elliptic_checks(const ScalarField& eta_full, const ScalarField& theta_full, double r_hi,
                                            double slack) {
    require_same_grid(eta_full, theta_full);
    const GridPtr& gfull = eta_full.grid_ptr();
    const int n = eta_outer_index(*gfull, r_hi);
    GridPtr g = radial_prefix(gfull, n);
    ScalarField eta = restrict_rows(eta_full, g);
    ScalarField theta = restrict_rows(theta_full, g);

    const double th_scale = theta.max_abs();
    for (int j = 0; j < g->Nz; ++j)
        if (std::abs(theta(n, j)) > 1e-8 * std::max(th_scale, 1e-300))
            throw PreconditionError("elliptic checks: theta must vanish at r_hi");

    ScalarField er = ddr(eta), ez = ddz(eta);
    ScalarField err = ddr(er), erz = ddz(er), ezz = ddz(ez);
    ScalarField erzr = ddr(erz), erzz = ddz(erz);
    ScalarField th_r = ddr(theta);
    ScalarField er_over_r = over_r(er);
    ScalarField erz_over_r = over_r(erz);

    const double ring_er = integrate_ring(er * er, 0);
    const double ring_ez = integrate_ring(ez * ez, 0);
    const double ring_erz = integrate_ring(erz * erz, 0);
    const double ring_eta = integrate_ring(eta * eta, 0);
    const double th2 = sq(theta);
    const double thr2 = sq(th_r);

    const double grad_er = sq(err) + sq(erz);
    const double grad_ez = sq(erz) + sq(ezz);
    const double grad_erz = sq(erzr) + sq(erzz);

    std::vector<EstimateReport> out;
    {
        double lhs = grad_er + sq(er_over_r) + ring_er;
        EstimateReport r = make_report("elliptic_4_17", lhs, 1.2 * th2, 1.2, slack);
        r.terms = {{"grad_eta_r_sq", grad_er}, {"eta_r_over_r_sq", sq(er_over_r)}, {"inner_ring_eta_r_sq", ring_er},
                   {"theta_sq", th2}};
        out.push_back(r);
    }
    {
        double lhs = grad_ez + 2.0 * ring_ez;
        EstimateReport r = make_report("elliptic_4_18", lhs, th2, 1.0, slack);
        r.terms = {{"grad_eta_z_sq", grad_ez}, {"inner_ring_eta_z_sq", ring_ez}, {"theta_sq", th2}};
        out.push_back(r);
    }
    {
        double lhs = grad_erz + 6.0 * sq(erz_over_r) + 2.0 * ring_erz;
        EstimateReport r = make_report("elliptic_4_22", lhs, thr2, 1.0, slack);
        r.terms = {{"grad_eta_zr_sq", grad_erz}, {"eta_zr_over_r_sq", sq(erz_over_r)},
                   {"inner_ring_eta_zr_sq", ring_erz}, {"theta_r_sq", thr2}};
        out.push_back(r);
    }
    const double h1 = std::sqrt(sq(eta) + sq(er) + sq(ez));
    out.push_back(measured_report("elliptic_4_14", h1 + std::sqrt(ring_eta), std::sqrt(th2),
                                  {{"eta_h1", h1}, {"inner_ring_eta", std::sqrt(ring_eta)}, {"theta_l2", std::sqrt(th2)}},
                                  "ratio is the measured constant c1"));
    const double agg = sq(eta) + sq(er) + sq(ez) + grad_er + grad_ez + sq(erz) + sq(erzz) + grad_erz + sq(er_over_r) +
                       sq(erz_over_r) + ring_eta + 2.0 * ring_ez;
    out.push_back(measured_report("elliptic_4_12", agg, th2 + thr2, {{"lhs", agg}, {"theta_h1r_sq", th2 + thr2}},
                                  "ratio is the measured constant c"));
    return out;
}

EstimateReport vr_estimate_check(const FlowState& s, const Cutoff& c) {
    if (s.grid->axis_mode()) throw PreconditionError("vr estimate: defined on the annulus only (eps > 0)");
    ScalarField z2 = c.profile * c.profile;
    ScalarField w = over_r(s.v_r * z2);
    ScalarField wr = ddr(w);
    double lhs = sq(ddr(wr)) + sq(ddz(wr)) + 6.0 * sq(over_r(wr));
    double chi_term = sq(ddr(over_r(s.chi * z2)));
    double vz_terms = sq(s.v_z) + sq(ddr(s.v_z));
    double excess = lhs - chi_term;
    EstimateReport r = measured_report("vr_4_23", excess, vz_terms,
                                       {{"lhs", lhs}, {"chi_term", chi_term}, {"vz_terms", vz_terms}},
                                       "ratio is (lhs - chi term) / axial terms");
    if (vz_terms == 0.0) r.ratio = excess > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return r;
}

std::pair<double, double> a0_data(const MonitorSeries& s) {
    double v = std::sqrt(std::max(0.0, s.value(0, "vphi_tilde4_r2")));
    double c2 = s.value(0, "chi_tilde_r_h0_sq");
    return {1.0 + v + c2, 1.0 + v * v + c2};
}

std::vector<EstimateReport> chain_monitors(const MonitorSeries& s, const Cutoff& c, double nu, double nu_star,
                                           double eps_param) {
    for (const char* id : {"vphi_tilde4_r4", "vphi_tilde4_r2", "grad_vphi_tilde2_r_l2sq", "vr_r_vphi_tilde4_r2",
                           "chi_tilde_r_h0_sq", "chi_tilde_r_grad_h0_sq", "chi_strip_l20_7", "kinetic_energy",
                           "u_max", "x_functional", "v_tilde_r_h1_sq", "vprime_h0_sq"})
        if (!s.has(id)) throw DomainError(std::string("chain monitors: missing accumulator ") + id);
    if (s.size() == 0) throw DomainError("chain monitors: empty series");
    const std::size_t last = s.size() - 1;

    const double d1_sq = s.value(0, "kinetic_energy");
    const double d2 = s.value(0, "u_max");
    const double chi0 = s.value(0, "chi_tilde_r_h0_sq");
    const double vphi0 = s.value(0, "vphi_tilde4_r2");
    const double int_vphi4_r4 = s.integral("vphi_tilde4_r4");
    const double strip_sq = std::pow(std::max(0.0, s.integral("chi_strip_l20_7")), 0.7);
    const double chi_v2_sq = std::pow(v2_norm(s, "chi_tilde_r", 0), 2);

    std::vector<EstimateReport> out;
    {
        double known = chi0 + int_vphi4_r4 / nu;
        out.push_back(measured_report("chain_5_3", chi_v2_sq, known,
                                      {{"chi_tilde_r_v2_sq", chi_v2_sq},
                                       {"initial_chi_tilde_r_sq", chi0},
                                       {"vphi_tilde4_r4_over_nu", int_vphi4_r4 / nu},
                                       {"d1_sq", d1_sq},
                                       {"d1_chi_strip_l20_7_sq", std::sqrt(d1_sq) * strip_sq}},
                                      "rhs holds the explicit terms; the d1 terms carry an unknown constant"));
    }
    {
        double lhs = 0.25 * s.value(last, "vphi_tilde4_r2") + 0.75 * nu * s.integral("grad_vphi_tilde2_r_l2sq") +
                     0.75 * nu * int_vphi4_r4;
        double known = 1.5 * s.integral("vr_r_vphi_tilde4_r2") + 0.25 * vphi0;
        out.push_back(measured_report("chain_5_8", lhs, known,
                                      {{"quarter_vphi_tilde4_r2", 0.25 * s.value(last, "vphi_tilde4_r2")},
                                       {"grad_term", 0.75 * nu * s.integral("grad_vphi_tilde2_r_l2sq")},
                                       {"vphi_tilde4_r4_term", 0.75 * nu * int_vphi4_r4},
                                       {"vr_coupling_term", 1.5 * s.integral("vr_r_vphi_tilde4_r2")},
                                       {"initial_term", 0.25 * vphi0},
                                       {"d2", d2},
                                       {"d1_sq", d1_sq}},
                                      "rhs holds the explicit terms; the d1, d2 term carries an unknown constant"));
    }
    const double L2 = functional_L(s, c);
    {
        out.push_back(measured_report("chain_5_11", L2, 1.0 + vphi0 + chi0,
                                      {{"L_sq", L2},
                                       {"chi_strip_l20_7_sq", strip_sq},
                                       {"initial_data", 1.0 + vphi0 + chi0}},
                                      "both right-hand terms carry unknown functions"));
    }
    {
        auto [a0, a0sq] = a0_data(s);
        out.push_back(measured_report("chain_5_28", L2, a0, {{"L_sq", L2}, {"A0", a0}, {"A0_sq", a0sq}},
                                      "ratio against A0; A0 and A0 squared both tabulated"));
    }
    {
        const auto X = s.column("x_functional");
        const auto& t = s.times();
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < X.size(); ++k)
            worst = std::max(worst, X[k] - X[0] * std::exp(-nu_star * (t[k] - t[0])) / (1.0 - eps_param));
        out.push_back(measured_report("chain_6_1", s.value(last, "x_functional"), X[0],
                                      {{"X_final", X.back()},
                                       {"X_initial", X[0]},
                                       {"nu_star", nu_star},
                                       {"max_excess_over_decay", worst}},
                                      "max_excess_over_decay is the smallest admissible offset A"));
    }
    {
        double vt = v2_norm(s, "v_tilde_r", 1);
        double ch = v2_norm(s, "chi_tilde_r", 0);
        double vp = v2_norm(s, "vprime", 0);
        out.push_back(measured_report("chain_6_38", vt, ch + vp,
                                      {{"v_tilde_r_v2_1", vt}, {"chi_tilde_r_v2_0", ch}, {"vprime_v2_0", vp}},
                                      "radial component of v~/r; constants unknown"));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

double iteration_bound(double mu, double K) {
    if (!(mu >= 0.0) || !(K >= 0.0)) throw DomainError("iteration_bound: needs mu >= 0 and K >= 0");
    if (!(mu < 1.0)) throw DomainError(fmt::format("iteration_bound: mu = {} >= 1, the recursion diverges", mu));
    return K / (1.0 - mu);
}

double decay_envelope(double A, double X0, double eps_param, double nu_star, double t) {
    if (!(eps_param > 0.0 && eps_param < 1.0)) throw PreconditionError("decay envelope: eps must lie in (0, 1)");
    if (!(nu_star > 0.0)) throw PreconditionError("decay envelope: nu_star must be positive");
    return A + X0 * std::exp(-nu_star * t) / (1.0 - eps_param);
}

double decay_iterate(double A, double X0, double eps_param, double nu_star, double T, int k) {
    if (!(eps_param > 0.0 && eps_param < 1.0)) throw PreconditionError("decay iterate: eps must lie in (0, 1)");
    if (!(nu_star > 0.0)) throw PreconditionError("decay iterate: nu_star must be positive");
    const double q = std::exp(-nu_star * T) / (1.0 - eps_param);
    if (!(q < 1.0))
        throw PreconditionError(fmt::format("decay iterate: e^(-nu_star T)/(1 - eps) = {} is not below 1", q));
    return A / (1.0 - q) + X0 * std::exp(-nu_star * k * T) / (1.0 - eps_param);
}

double nu_star_from(double nu, double c_p) { return std::min(nu / (2.0 * c_p), 3.0 * nu / c_p); }

PoincareResult poincare_constant(const GridPtr& gfull, double r_hi, double nu, int max_iter, double tol) {
    const int n = eta_outer_index(*gfull, r_hi);
    GridPtr g = radial_prefix(gfull, n);
    RadialStencil st = gradient_form_stencil(*g);
    ModalSolver& solver = modal_solver(g->nr(), g->Nz);

    const double span = g->r(n) - g->eps;
    ScalarField x = ScalarField::sample(g, [&](double r, double z) {
        double s = (g->r(n) - r) / span;
        return s * (1.0 + 0.1 * std::cos(M_PI * z / g->a));
    });
    auto dot = [&](const ScalarField& a, const ScalarField& b) { return integrate(a * b); };
    double norm = std::sqrt(dot(x, x));
    x *= 1.0 / norm;
    double lambda = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        ScalarField rhs = x;
        for (int j = 0; j < g->Nz; ++j) rhs(n, j) = 0.0;
        ScalarField y = solver.solve(st, 0.0, -1.0, rhs);
        double new_lambda = 1.0 / dot(x, y);
        double ny = std::sqrt(dot(y, y));
        y *= 1.0 / ny;
        x = std::move(y);
        if (it > 2 && std::abs(new_lambda - lambda) <= tol * std::abs(new_lambda)) {
            PoincareResult res;
            res.lambda1 = new_lambda;
            res.c_p = 1.0 / new_lambda;
            res.nu_star = nu_star_from(nu, res.c_p);
            res.iterations = it;
            return res;
        }
        lambda = new_lambda;
    }
    throw ConvergenceError(fmt::format("poincare constant: inverse iteration did not converge in {} steps", max_iter));
}

double poincare_constant_periodic(double a, int N, int max_iter, double tol) {
    if (!(a > 0.0) || N < 4) throw DomainError("poincare_constant_periodic: needs a > 0 and N >= 4");
    const double h = 2.0 * a / N;
    auto remove_mean = [](std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(v.size());
        for (double& x : v) x -= m;
    };
    // -(x_{j+1} - 2x_j + x_{j-1})/h^2 = b_j for zero-mean b, solved through the periodic first differences.
    auto solve = [&](const std::vector<double>& b) {
        std::vector<double> d(N);
        double acc = 0.0;
        for (int j = 0; j < N; ++j) {
            acc += b[j];
            d[j] = -h * h * acc;
        }
        double shift = 0.0;
        for (double v : d) shift += v;
        shift /= N;
        for (double& v : d) v -= shift;
        std::vector<double> x(N, 0.0);
        for (int j = 1; j < N; ++j) x[j] = x[j - 1] + d[j - 1];
        remove_mean(x);
        return x;
    };
    auto dot = [](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
        return s;
    };
    std::vector<double> x(N);
    for (int j = 0; j < N; ++j) {
        double z = -a + j * h;
        x[j] = std::cos(M_PI * z / a) + 0.3 * std::sin(2.0 * M_PI * z / a) + 0.1 * z;
    }
    remove_mean(x);
    double lambda = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        double nx = std::sqrt(dot(x, x));
        for (double& v : x) v /= nx;
        std::vector<double> y = solve(x);
        double new_lambda = 1.0 / dot(x, y);
        x = std::move(y);
        if (it > 2 && std::abs(new_lambda - lambda) <= tol * std::abs(new_lambda)) return 1.0 / new_lambda;
        lambda = new_lambda;
    }
    throw ConvergenceError("poincare_constant_periodic: inverse iteration did not converge");
}

}  // namespace axisym
