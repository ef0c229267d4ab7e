#include "axisym/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "axisym/errors.hpp"
#include "axisym/evolve.hpp"

namespace axisym {

MonitorSeries::MonitorSeries(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t k = 0; k < names_.size(); ++k) lookup_[names_[k]] = k;
    integral_.assign(names_.size(), 0.0);
    sup_.assign(names_.size(), -INFINITY);
}

void MonitorSeries::add_sample(double t, const std::vector<double>& values) {
    if (values.size() != names_.size()) throw DomainError("monitor sample has the wrong number of values");
    if (!times_.empty() && !(t > times_.back()))
        throw DomainError(fmt::format("monitor sample times must increase (t={} after {})", t, times_.back()));
    if (!times_.empty()) {
        double h = t - times_.back();
        const auto& prev = rows_.back();
        for (std::size_t k = 0; k < values.size(); ++k) integral_[k] += 0.5 * h * (prev[k] + values[k]);
    }
    for (std::size_t k = 0; k < values.size(); ++k) sup_[k] = std::max(sup_[k], values[k]);
    times_.push_back(t);
    rows_.push_back(values);
}

void MonitorSeries::add_sample(double t, const std::vector<std::pair<std::string, double>>& values) {
    if (names_.empty() && times_.empty()) {
        std::vector<std::string> names;
        for (const auto& kv : values) names.push_back(kv.first);
        double nu_keep = nu, lo = cutoff_lo, hi = cutoff_hi;
        bool van = cutoff_vanishing;
        auto snaps = std::move(snapshots_);
        *this = MonitorSeries(std::move(names));
        nu = nu_keep;
        cutoff_lo = lo;
        cutoff_hi = hi;
        cutoff_vanishing = van;
        snapshots_ = std::move(snaps);
    }
    std::vector<double> row(names_.size());
    if (values.size() != names_.size()) throw DomainError("monitor sample column set changed");
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k].first != names_[k]) throw DomainError("monitor sample column set changed");
        row[k] = values[k].second;
    }
    add_sample(t, row);
}

bool MonitorSeries::has(const std::string& id) const { return lookup_.count(id) != 0; }

std::size_t MonitorSeries::index(const std::string& id) const {
    auto it = lookup_.find(id);
    if (it == lookup_.end()) throw DomainError("monitor series has no column '" + id + "'");
    return it->second;
}

double MonitorSeries::value(std::size_t sample, const std::string& id) const { return rows_.at(sample)[index(id)]; }

std::vector<double> MonitorSeries::column(const std::string& id) const {
    std::size_t k = index(id);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[k]);
    return out;
}

double MonitorSeries::integral(const std::string& id) const { return integral_[index(id)]; }

double MonitorSeries::sup(const std::string& id) const {
    if (times_.empty()) throw DomainError("monitor series is empty");
    return sup_[index(id)];
}

void MonitorSeries::add_snapshot(const std::string& field, ScalarField f) { snapshots_[field].push_back(std::move(f)); }

const std::vector<ScalarField>& MonitorSeries::snapshots(const std::string& field) const {
    auto it = snapshots_.find(field);
    if (it == snapshots_.end()) throw DomainError("monitor series has no snapshots of '" + field + "'");
    return it->second;
}

std::string MonitorSeries::to_csv() const {
    std::string out = "t";
    for (const auto& n : names_) out += "," + n;
    out += '\n';
    for (std::size_t s = 0; s < times_.size(); ++s) {
        out += fmt::format("{:.16e}", times_[s]);
        for (double v : rows_[s]) out += fmt::format(",{:.16e}", v);
        out += '\n';
    }
    return out;
}

namespace {

double l2sq(const ScalarField& f) { return integrate(f * f); }

double grad_l2sq(const ScalarField& f) { return l2sq(ddr(f)) + l2sq(ddz(f)); }

double hessian_l2sq(const ScalarField& f) {
    ScalarField fr = ddr(f);
    ScalarField fz = ddz(f);
    return l2sq(ddr(fr)) + 2.0 * l2sq(ddz(fr)) + l2sq(ddz(fz));
}

ScalarField pow_abs(const ScalarField& f, double p) {
    return map(f, [p](double x) { return std::pow(std::abs(x), p); });
}

}  // namespace

std::vector<std::pair<std::string, double>> sample_functionals(const FlowState& s, const Cutoff& c, double nu) {
    const Grid& g = *s.grid;
    const ScalarField& zeta = c.profile;
    ScalarField zeta2 = zeta * zeta;

    ScalarField vphi = over_r(s.u);
    ScalarField vphi_t = vphi * zeta;
    ScalarField q = over_r(vphi_t * vphi_t);       // v_phi~^2 / r
    ScalarField q_over_r = over_r(q);              // v_phi~^2 / r^2
    ScalarField chi_t_r = over_r(s.chi * zeta2);   // chi~ / r
    ScalarField w = over_r(s.v_r * zeta2);         // v_r~ / r
    ScalarField wr = ddr(w);
    ScalarField vr_r = over_r(s.v_r);

    double u_max_cut = 0.0;
    if (!c.vanishing)
        for (int i = 0; i < g.nr() && g.r(i) <= c.r_hi * (1.0 + 1e-12); ++i)
            for (int j = 0; j < g.Nz; ++j) u_max_cut = std::max(u_max_cut, std::abs(s.u(i, j)));

    ScalarField strip(s.grid);
    if (!c.vanishing)
        for (int i = 0; i < g.nr(); ++i)
            if (g.r(i) >= c.r_lo && g.r(i) <= c.r_hi)
                for (int j = 0; j < g.Nz; ++j) strip(i, j) = std::pow(std::abs(s.chi(i, j)), 20.0 / 7.0);

    ScalarField continuity = ddr(s.v_r) + ddz(s.v_z) + vr_r;
    ScalarField vort = s.chi - (ddz(s.v_r) - ddr(s.v_z));

    double vphi4_r2 = l2sq(q);
    double chi_t_sq = l2sq(chi_t_r);
    double w_grad = grad_l2sq(w);

    std::vector<std::pair<std::string, double>> out = {
        {"u_max", s.u.max_abs()},
        {"u_max_cutoff", u_max_cut},
        {"kinetic_energy", integrate(s.v_r * s.v_r + s.v_z * s.v_z + vphi * vphi)},
        {"x_functional", vphi4_r2 / (nu * nu) + chi_t_sq},
        {"vphi_tilde4_r4", l2sq(q_over_r)},
        {"vphi_tilde4_r2", vphi4_r2},
        {"grad_vphi_tilde2_r_l2sq", grad_l2sq(q)},
        {"vr_r_vphi_tilde4_r2", integrate(map(vr_r, [](double x) { return std::abs(x); }) * q * q)},
        {"chi_tilde_r_h0_sq", chi_t_sq},
        {"chi_tilde_r_grad_h0_sq", grad_l2sq(chi_t_r)},
        {"chi_tilde_r_r_l2sq", l2sq(ddr(chi_t_r))},
        {"vr_tilde_r_r_grad_l2sq", grad_l2sq(wr)},
        {"vr_tilde_r_r_over_r_l2sq", l2sq(over_r(wr))},
        {"v_tilde_r_h1_sq", l2sq(w) + w_grad},
        {"v_tilde_r_grad_h1_sq", w_grad + hessian_l2sq(w)},
        {"vprime_h0_sq", l2sq(s.v_r) + l2sq(s.v_z)},
        {"vprime_grad_h0_sq", grad_l2sq(s.v_r) + grad_l2sq(s.v_z)},
        {"vz_l2sq", l2sq(s.v_z)},
        {"vz_r_l2sq", l2sq(ddr(s.v_z))},
        {"chi_strip_l20_7", integrate(strip)},
        {"u_h0_sq", l2sq(s.u)},
        {"u_grad_h0_sq", grad_l2sq(s.u)},
        {"vphi_r_l2sq", l2sq(over_r(vphi))},
        {"vphi_l4_4", integrate(pow_abs(vphi, 4.0))},
        {"continuity_residual", std::sqrt(l2sq(continuity))},
        {"vorticity_mismatch", std::sqrt(l2sq(vort))},
    };
    return out;
}

double weighted_norm(const ScalarField& f, double p, double k) {
    if (!(p >= 1.0)) throw DomainError(fmt::format("weighted_norm: p must be >= 1 (got {})", p));
    const Grid& g = f.grid();
    if (k < 0.0 && g.axis_mode()) {
        double scale = f.max_abs();
        for (int j = 0; j < g.Nz; ++j)
            if (std::abs(f(0, j)) > 1e-12 * scale)
                throw DomainError("weighted_norm: negative radial weight diverges on the axis for a nonvanishing field");
    }
    double total = 0.0;
    for (int i = 0; i < g.nr(); ++i) {
        double w = g.weight(i);
        if (w == 0.0) continue;
        double rw = std::pow(g.r(i), p * k);
        double s = 0.0;
        for (int j = 0; j < g.Nz; ++j) s += std::pow(std::abs(f(i, j)), p);
        total += w * rw * s;
    }
    return std::pow(total, 1.0 / p);
}

double v2_norm(const MonitorSeries& s, const std::string& f_id, int k) {
    std::string h = fmt::format("{}_h{}_sq", f_id, k);
    std::string gr = fmt::format("{}_grad_h{}_sq", f_id, k);
    if (!s.has(h) || !s.has(gr)) throw DomainError("v2_norm: missing accumulator for '" + f_id + "'");
    return std::sqrt(std::max(0.0, s.sup(h) + s.nu * s.integral(gr)));
}

namespace {

double periodic_gap(double dz, double period) {
    dz = std::fmod(std::abs(dz), period);
    return std::min(dz, period - dz);
}

}  // namespace

HolderResult holder_seminorm(const MonitorSeries& s, const std::string& f_id, double alpha, std::uint64_t pair_budget,
                             std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("holder_seminorm: alpha must lie in (0, 1]");
    const auto& snaps = s.snapshots(f_id);
    const auto& times = s.times();
    if (snaps.size() < 2 || snaps.size() != times.size())
        throw DomainError("holder_seminorm: need at least two snapshots aligned with the sample times");
    const Grid& g = snaps.front().grid();
    const std::uint64_t per = g.size();
    const std::uint64_t P = per * snaps.size();
    const double period = 2.0 * g.a;

    HolderResult res;
    res.pairs_total = P * (P - 1) / 2;
    res.seed = seed;

    auto value = [&](std::uint64_t p) { return snaps[p / per].values()[p % per]; };
    auto ratio = [&](std::uint64_t p, std::uint64_t q) {
        std::uint64_t sp = p / per, sq = q / per;
        std::uint64_t xp = p % per, xq = q % per;
        int ip = static_cast<int>(xp / g.Nz), jp = static_cast<int>(xp % g.Nz);
        int iq = static_cast<int>(xq / g.Nz), jq = static_cast<int>(xq % g.Nz);
        double dr = g.r(ip) - g.r(iq);
        double dz = periodic_gap(g.z(jp) - g.z(jq), period);
        double dx = std::sqrt(dr * dr + dz * dz);
        double dt = std::abs(times[sp] - times[sq]);
        double den = std::pow(dx, alpha) + std::pow(dt, 0.5 * alpha);
        if (den == 0.0) return 0.0;
        return std::abs(value(p) - value(q)) / den;
    };

    if (res.pairs_total <= pair_budget) {
        for (std::uint64_t p = 0; p < P; ++p)
            for (std::uint64_t q = p + 1; q < P; ++q) res.seminorm = std::max(res.seminorm, ratio(p, q));
        res.pairs_examined = res.pairs_total;
        return res;
    }

    res.subsampled = true;
    // neighbour pairs along r, z and t
    for (std::uint64_t n = 0; n < snaps.size(); ++n)
        for (int i = 0; i < g.nr(); ++i)
            for (int j = 0; j < g.Nz; ++j) {
                std::uint64_t p = n * per + static_cast<std::uint64_t>(i) * g.Nz + j;
                if (i + 1 < g.nr()) {
                    res.seminorm = std::max(res.seminorm, ratio(p, p + g.Nz));
                    ++res.pairs_examined;
                }
                std::uint64_t qz = n * per + static_cast<std::uint64_t>(i) * g.Nz + (j + 1) % g.Nz;
                res.seminorm = std::max(res.seminorm, ratio(p, qz));
                ++res.pairs_examined;
                if (n + 1 < snaps.size()) {
                    res.seminorm = std::max(res.seminorm, ratio(p, p + per));
                    ++res.pairs_examined;
                }
            }
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < pair_budget; ++k) {
        std::uint64_t p = rng() % P, q = rng() % P;
        if (p == q) continue;
        res.seminorm = std::max(res.seminorm, ratio(p, q));
        ++res.pairs_examined;
    }
    return res;
}

double ball_arc_fraction(double r, double z, double r0, double z0, double rho, double period) {
    double dz = periodic_gap(z - z0, period);
    if (r == 0.0 || r0 == 0.0) return r * r + r0 * r0 + dz * dz < rho * rho ? 1.0 : 0.0;
    double c = (r * r + r0 * r0 + dz * dz - rho * rho) / (2.0 * r * r0);
    if (c >= 1.0) return 0.0;
    if (c <= -1.0) return 1.0;
    return std::acos(c) / M_PI;
}

TruncationReport truncation_functionals(const MonitorSeries& s, const std::string& w_id, const TruncationParams& p) {
    if (!(p.rho > 0.0) || !(p.tau > 0.0)) throw DomainError("truncation_functionals: rho and tau must be positive");
    const auto& snaps = s.snapshots(w_id);
    const auto& times = s.times();
    if (snaps.size() != times.size()) throw DomainError("truncation_functionals: snapshots not aligned with samples");
    const Grid& g = snaps.front().grid();
    const double period = 2.0 * g.a;
    const double tol = 1e-12 * std::max(1.0, std::abs(p.t0) + p.tau);

    TruncationReport rep;
    rep.level = p.level;
    rep.kappa = p.kappa;
    rep.r_exp = p.r_exp;
    rep.q_exp = p.q_exp;

    auto fraction_field = [&](double rho) {
        ScalarField f(snaps.front().grid_ptr());
        for (int i = 0; i < g.nr(); ++i)
            for (int j = 0; j < g.Nz; ++j) f(i, j) = ball_arc_fraction(g.r(i), g.z(j), p.x0_r, p.x0_z, rho, period);
        return f;
    };
    const ScalarField ball = fraction_field(p.rho);
    const ScalarField ball_s = fraction_field(p.rho * (1.0 - p.sigma1));
    const double t_end = p.t0 + p.tau;
    const double t_end_s = p.t0 + p.tau * (1.0 - p.sigma2);

    std::vector<double> t_win, meas_pow, l2_full, l2_shr, grad_shr, t_shr;
    for (std::size_t n = 0; n < snaps.size(); ++n) {
        double t = times[n];
        if (t < p.t0 - tol || t > t_end + tol) continue;
        ScalarField trunc = map(snaps[n], [k = p.level](double x) { return std::max(x - k, 0.0); });
        ScalarField ind = map(snaps[n], [k = p.level](double x) { return x > k ? 1.0 : 0.0; });
        ScalarField t2 = trunc * trunc;
        double meas = integrate(ind * ball);
        rep.level_set_measure.push_back(meas);
        rep.sample_times.push_back(t);
        t_win.push_back(t);
        meas_pow.push_back(std::pow(meas, p.r_exp / p.q_exp));
        l2_full.push_back(integrate(t2 * ball));
        if (t <= t_end_s + tol) {
            double shr = integrate(t2 * ball_s);
            rep.max_l2sq_shrunk = std::max(rep.max_l2sq_shrunk, shr);
            ScalarField gr = ddr(trunc), gz = ddz(trunc);
            grad_shr.push_back(integrate((gr * gr + gz * gz) * ball_s));
            t_shr.push_back(t);
            l2_shr.push_back(shr);
        }
    }
    if (t_win.empty()) throw DomainError("truncation_functionals: no samples inside the time window");
    rep.initial_l2sq = l2_full.front();
    auto trapz = [](const std::vector<double>& t, const std::vector<double>& y) {
        double s2 = 0.0;
        for (std::size_t k = 1; k < t.size(); ++k) s2 += 0.5 * (t[k] - t[k - 1]) * (y[k] + y[k - 1]);
        return s2;
    };
    rep.spacetime_l2sq = trapz(t_win, l2_full);
    rep.mu = trapz(t_win, meas_pow);
    rep.mu_power = std::pow(rep.mu, 2.0 / p.r_exp * (1.0 + p.kappa));
    double sup_shr = l2_shr.empty() ? 0.0 : *std::max_element(l2_shr.begin(), l2_shr.end());
    rep.v2_sq_shrunk = sup_shr + p.nu * trapz(t_shr, grad_shr);
    return rep;
}

double functional_L(const MonitorSeries& s, const Cutoff& c) {
    bool same = (c.vanishing && s.cutoff_vanishing) ||
                (!c.vanishing && !s.cutoff_vanishing && std::abs(c.r_lo - s.cutoff_lo) <= 1e-12 &&
                 std::abs(c.r_hi - s.cutoff_hi) <= 1e-12);
    if (!same) throw DomainError("functional_L: series was sampled with a different cut-off");
    for (const char* id : {"vphi_tilde4_r4", "chi_tilde_r_h0_sq", "chi_tilde_r_grad_h0_sq", "vr_tilde_r_r_grad_l2sq",
                           "vr_tilde_r_r_over_r_l2sq"})
        if (!s.has(id)) throw DomainError(std::string("functional_L: missing accumulator ") + id);
    return s.integral("vphi_tilde4_r4") + v2_norm(s, "chi_tilde_r", 0) * v2_norm(s, "chi_tilde_r", 0) +
           s.integral("vr_tilde_r_r_grad_l2sq") + s.integral("vr_tilde_r_r_over_r_l2sq");
}

double functional_X(const FlowState& s, const Cutoff& c, double nu) {
    const ScalarField& zeta = c.profile;
    ScalarField vphi_t = over_r(s.u) * zeta;
    ScalarField q = over_r(vphi_t * vphi_t);
    ScalarField chi_t_r = over_r(s.chi * zeta * zeta);
    return integrate(q * q) / (nu * nu) + integrate(chi_t_r * chi_t_r);
}

double swirl_threshold_weak(double nu) { return std::pow(1.25, 0.25) * nu; }
double swirl_threshold_strong(double nu) { return std::pow(0.75, 0.25) * nu; }

std::vector<RestrictionReport> check_restrictions(const MonitorSeries& s, double nu) {
    std::vector<double> col = s.column("u_max_cutoff");
    const auto& times = s.times();
    auto make = [&](const std::string& id, auto lhs_of, double threshold) {
        RestrictionReport rep;
        rep.id = id;
        rep.threshold = threshold;
        for (std::size_t k = 0; k < col.size(); ++k) {
            double v = lhs_of(col[k]);
            rep.lhs = std::max(rep.lhs, v);
            if (v > threshold && !rep.first_violation_t) rep.first_violation_t = times[k];
        }
        rep.satisfied = !rep.first_violation_t.has_value();
        return rep;
    };
    auto ident = [](double x) { return x; };
    auto quartic = [nu](double x) { return 4.0 / (nu * nu * nu) * x * x * x * x; };
    return {make("swirl_5_10", ident, swirl_threshold_weak(nu)), make("swirl_6_9", quartic, 3.0 * nu),
            make("swirl_1_10", ident, swirl_threshold_weak(nu))};
}

}  // namespace axisym
