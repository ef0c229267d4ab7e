#include "axisym/evolve.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "axisym/elliptic.hpp"
#include "axisym/errors.hpp"
#include "axisym/fields.hpp"
#include "axisym/stencil.hpp"

namespace axisym {

GridPtr RunConfig::make_grid() const { return build_grid(eps, R, a, Nr, Nz); }

double stability_bound(const RunConfig& cfg) {
    double dr = (cfg.R - cfg.eps) / cfg.Nr;
    double dz = 2.0 * cfg.a / cfg.Nz;
    double h = std::min(dr, dz);
    return cfg.cfl * h * h / cfg.nu;
}

void validate(const RunConfig& cfg) {
    if (!(cfg.nu > 0.0)) throw ConfigError(fmt::format("nu must be > 0 (got {})", cfg.nu));
    if (!(cfg.dt > 0.0)) throw ConfigError(fmt::format("dt must be > 0 (got {})", cfg.dt));
    if (!(cfg.T >= 0.0)) throw ConfigError(fmt::format("T must be >= 0 (got {})", cfg.T));
    if (cfg.sample_every < 1) throw ConfigError("sample_every must be >= 1");
    build_grid(cfg.eps, cfg.R, cfg.a, cfg.Nr, cfg.Nz);
    double bound = stability_bound(cfg);
    if (cfg.dt > bound)
        throw ConfigError(fmt::format("dt={} exceeds the stability bound cfl*min(dr,dz)^2/nu = {}", cfg.dt, bound));
}

namespace {

// 1 away from the walls, flat C^3 transition to 0 within `frac` of the radial extent at each wall.
double wall_ramp(const Grid& g, double r, double frac = 0.1) {
    double w = frac * (g.R - g.eps);
    double in[4], out[4];
    Cutoff::evaluate(g.eps, g.eps + w, r, in);
    Cutoff::evaluate(g.R - w, g.R, r, out);
    return (1.0 - in[0]) * out[0];
}

// Smooth periodic stand-in for z^2 on [-a, a).
double periodic_z2(double z, double a) {
    double d = 2.0 * a / M_PI * std::sin(M_PI * z / (2.0 * a));
    return d * d;
}

void check_rhs(const ScalarField& a, const ScalarField& b, double t) {
    if (!a.all_finite() || !b.all_finite()) throw BlowUpError(fmt::format("blow-up detected at t={:.9g}", t), t);
}

void check_finite(const FlowState& s) {
    if (!s.u.all_finite() || !s.chi.all_finite() || !s.psi.all_finite() || !s.v_r.all_finite() ||
        !s.v_z.all_finite())
        throw BlowUpError(fmt::format("blow-up detected at t={:.9g}", s.t), s.t);
}

struct Explicit {
    ScalarField nu, nchi;
};

Explicit explicit_terms(const FlowState& s, const RunConfig& cfg, double t) {
    Explicit e{swirl_advection(s.u, s.v_r, s.v_z), chi_explicit(s.chi, s.u, s.v_r, s.v_z)};
    if (cfg.forcing) {
        ScalarField fu(s.grid), fc(s.grid);
        cfg.forcing(t, fu, fc);
        e.nu += fu;
        e.nchi += fc;
    }
    return e;
}

void zero_fixed_rows(const RadialStencil& st, ScalarField& f) {
    for (int i = 0; i < st.n; ++i)
        if (st.fixed[i])
            for (int j = 0; j < f.grid().Nz; ++j) f(i, j) = 0.0;
}

}  // namespace

FlowState make_state(double t, ScalarField u, ScalarField chi, double psi_inner, double psi_outer) {
    require_same_grid(u, chi);
    FlowState s;
    s.t = t;
    s.grid = u.grid_ptr();
    s.psi = solve_stream(chi, psi_inner, psi_outer);
    auto [vr, vz] = recover_velocity(s.psi);
    s.v_r = std::move(vr);
    s.v_z = std::move(vz);
    s.u = std::move(u);
    s.chi = std::move(chi);
    return s;
}

FlowState initial_state(const RunConfig& cfg) { return initial_state(cfg, cfg.make_grid()); }

FlowState initial_state(const RunConfig& cfg, const GridPtr& g) {
    const InitialData& d = cfg.init;
    const double a = g->a;
    ScalarField u(g), chi(g);
    if (d.u_kind == "gaussian") {
        u = ScalarField::sample(g, [&](double r, double z) {
            double e = ((r - d.u_rc) * (r - d.u_rc) + periodic_z2(z, a)) / (d.u_sigma * d.u_sigma);
            return d.u_amp * std::exp(-e) * (r * r) / (d.u_rc * d.u_rc) * wall_ramp(*g, r);
        });
    } else if (d.u_kind == "radial_bump") {
        u = ScalarField::sample(g, [&](double r, double) {
            double e = (r - d.u_rc) * (r - d.u_rc) / (d.u_sigma * d.u_sigma);
            return d.u_amp * std::exp(-e) * wall_ramp(*g, r);
        });
    } else if (d.u_kind == "rigid") {
        u = ScalarField::sample(g, [&](double r, double) { return d.u_amp * r * r; });
    } else if (d.u_kind != "zero") {
        throw ConfigError("unknown initial swirl kind '" + d.u_kind + "'");
    }
    if (d.chi_kind == "ring") {
        chi = ScalarField::sample(g, [&](double r, double z) {
            double e = ((r - d.chi_rc) * (r - d.chi_rc) + periodic_z2(z, a)) / (d.chi_sigma * d.chi_sigma);
            return d.chi_amp * std::exp(-e) * wall_ramp(*g, r);
        });
    } else if (d.chi_kind == "sine") {
        chi = ScalarField::sample(g, [&](double r, double z) { return d.chi_amp * std::sin(M_PI * z / a) * wall_ramp(*g, r); });
    } else if (d.chi_kind != "zero") {
        throw ConfigError("unknown initial vorticity kind '" + d.chi_kind + "'");
    }
    return make_state(0.0, std::move(u), std::move(chi), cfg.psi_inner, cfg.psi_outer);
}

FlowState step(const FlowState& s, const RunConfig& cfg) {
    const Grid& g = *s.grid;
    const double dt = cfg.dt;
    Explicit e = explicit_terms(s, cfg, s.t);
    RadialStencil su = swirl_diffusion_stencil(g);
    RadialStencil sc = vorticity_diffusion_stencil(g);
    ModalSolver& solver = modal_solver(g.nr(), g.Nz);

    check_rhs(e.nu, e.nchi, s.t + dt);
    ScalarField rhs_u = s.u + dt * e.nu;
    zero_fixed_rows(su, rhs_u);
    ScalarField u = solver.solve(su, 1.0, -dt * cfg.nu, rhs_u);
    ScalarField rhs_c = s.chi + dt * e.nchi;
    zero_fixed_rows(sc, rhs_c);
    ScalarField chi = solver.solve(sc, 1.0, -dt * cfg.nu, rhs_c);
    if (!u.all_finite() || !chi.all_finite())
        throw BlowUpError(fmt::format("blow-up detected at t={:.9g}", s.t + dt), s.t + dt);

    FlowState out = make_state(s.t + dt, std::move(u), std::move(chi), cfg.psi_inner, cfg.psi_outer);
    check_finite(out);
    return out;
}

Integrator::Integrator(RunConfig cfg) : cfg_(std::move(cfg)) {}

FlowState Integrator::advance(const FlowState& s) {
    if (cfg_.scheme == Scheme::imex_euler) return step(s, cfg_);

    const Grid& g = *s.grid;
    const double dt = cfg_.dt;
    Explicit e = explicit_terms(s, cfg_, s.t);
    ScalarField ext_u = e.nu, ext_c = e.nchi;
    if (have_prev_) {
        ext_u = 1.5 * e.nu - 0.5 * prev_nu_;
        ext_c = 1.5 * e.nchi - 0.5 * prev_nchi_;
    }
    prev_nu_ = std::move(e.nu);
    prev_nchi_ = std::move(e.nchi);
    have_prev_ = true;

    RadialStencil su = swirl_diffusion_stencil(g);
    RadialStencil sc = vorticity_diffusion_stencil(g);
    ModalSolver& solver = modal_solver(g.nr(), g.Nz);
    const double half = 0.5 * dt * cfg_.nu;

    check_rhs(ext_u, ext_c, s.t + dt);
    ScalarField rhs_u = s.u + half * apply(su, s.u) + dt * ext_u;
    zero_fixed_rows(su, rhs_u);
    ScalarField u = solver.solve(su, 1.0, -half, rhs_u);
    ScalarField rhs_c = s.chi + half * apply(sc, s.chi) + dt * ext_c;
    zero_fixed_rows(sc, rhs_c);
    ScalarField chi = solver.solve(sc, 1.0, -half, rhs_c);
    if (!u.all_finite() || !chi.all_finite())
        throw BlowUpError(fmt::format("blow-up detected at t={:.9g}", s.t + dt), s.t + dt);
    FlowState out = make_state(s.t + dt, std::move(u), std::move(chi), cfg_.psi_inner, cfg_.psi_outer);
    check_finite(out);
    return out;
}

namespace {

long step_count(double T, double dt) {
    if (T <= 0.0) return 0;
    return static_cast<long>(std::ceil(T / dt - 1e-9));
}

}  // namespace

RunResult run(const RunConfig& cfg_in) {
    validate(cfg_in);
    RunConfig cfg = cfg_in;
    GridPtr g = cfg.make_grid();
    if (!(cfg.r0 >= g->eps) || !(2.0 * cfg.r0 <= g->R))
        throw ConfigError(fmt::format("r0={} must satisfy eps <= r0 and 2*r0 <= R", cfg.r0));
    Cutoff cut = build_cutoff(cfg.r0, 2.0 * cfg.r0, g);

    const long nsteps = step_count(cfg.T, cfg.dt);
    if (nsteps > 0) cfg.dt = cfg.T / nsteps;  // land exactly on T

    RunResult res;
    FlowState state = initial_state(cfg, g);
    res.series.nu = cfg.nu;
    res.series.cutoff_lo = cut.r_lo;
    res.series.cutoff_hi = cut.r_hi;
    auto record = [&](const FlowState& s) {
        res.series.add_sample(s.t, sample_functionals(s, cut, cfg.nu));
        if (cfg.keep_snapshots) {
            res.series.add_snapshot("u", s.u);
            res.series.add_snapshot("chi", s.chi);
        }
    };
    record(state);

    Integrator integ(cfg);
    for (long n = 1; n <= nsteps; ++n) {
        try {
            FlowState next = integ.advance(state);
            if (n == nsteps) next.t = cfg.T;
            state = std::move(next);
        } catch (const BlowUpError& e) {
            res.blew_up = true;
            res.message = e.what();
            break;
        }
        if (n % cfg.sample_every == 0 || n == nsteps) record(state);
    }
    res.final = std::move(state);
    return res;
}

std::vector<double> MmsTable::order(double MmsRow::*field) const {
    std::vector<double> out;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        double e0 = rows[k - 1].*field, e1 = rows[k].*field;
        double ratio = static_cast<double>(rows[k].N) / rows[k - 1].N;
        out.push_back(std::log(e0 / e1) / std::log(ratio));
    }
    return out;
}

namespace {

double l2_error(const ScalarField& num, const ScalarField& exact) {
    ScalarField d = num - exact;
    return std::sqrt(integrate(d * d));
}

}  // namespace

MmsTable mms_run(const RunConfig& cfg, const ManufacturedSolution& m, const std::vector<int>& resolutions,
                 double dt_coeff) {
    MmsTable table;
    for (int N : resolutions) {
        GridPtr g = build_grid(cfg.eps, cfg.R, cfg.a, N, N);
        m.check_compatible(*g);
        RunConfig c = cfg;
        c.Nr = c.Nz = N;
        c.nu = m.nu;
        long steps = cfg.T > 0.0 ? std::max(1L, step_count(cfg.T, dt_coeff * g->dr * g->dr)) : 0;
        c.dt = steps > 0 ? cfg.T / steps : dt_coeff * g->dr * g->dr;
        c.forcing = [&m, g](double t, ScalarField& fu, ScalarField& fc) {
            for (int i = 0; i < g->nr(); ++i) {
                double r = g->r(i);
                if (r <= 0.0) continue;
                for (int j = 0; j < g->Nz; ++j) {
                    fu(i, j) = m.forcing_u(t, r, g->z(j));
                    fc(i, j) = m.forcing_chi(t, r, g->z(j));
                }
            }
        };
        FlowState s = make_state(0.0, m.sample_u(g, 0.0), m.sample_chi(g, 0.0));
        Integrator integ(c);
        for (long n = 0; n < steps; ++n) s = integ.advance(s);
        s.t = c.T;

        MmsRow row;
        row.N = N;
        row.dt = c.dt;
        row.steps = static_cast<int>(steps);
        row.err_u = l2_error(s.u, m.sample_u(g, s.t));
        row.err_chi = l2_error(s.chi, m.sample_chi(g, s.t));
        row.err_psi = l2_error(s.psi, m.sample_psi(g, s.t));
        row.err_vr = l2_error(s.v_r, ScalarField::sample(g, [&](double r, double z) { return m.v_r(s.t, r, z); }));
        row.err_vz = l2_error(s.v_z, ScalarField::sample(g, [&](double r, double z) { return m.v_z(s.t, r, z); }));
        table.rows.push_back(row);
    }
    return table;
}

std::string field_to_csv(const ScalarField& f, const std::string& name, double t) {
    const Grid& g = f.grid();
    std::string out = fmt::format("# field={} t={:.16e} eps={:.16e} R={:.16e} a={:.16e} Nr={} Nz={} layout=r-outer\n",
                                  name, t, g.eps, g.R, g.a, g.Nr, g.Nz);
    for (int i = 0; i < g.nr(); ++i) {
        for (int j = 0; j < g.Nz; ++j) {
            if (j) out += ',';
            out += fmt::format("{:.16e}", f(i, j));
        }
        out += '\n';
    }
    return out;
}

void dump_state(const FlowState& s, const std::string& directory) {
    std::filesystem::create_directories(directory);
    const std::pair<const char*, const ScalarField*> fields[] = {
        {"u", &s.u}, {"chi", &s.chi}, {"psi", &s.psi}, {"v_r", &s.v_r}, {"v_z", &s.v_z}};
    for (const auto& [name, f] : fields) {
        std::ofstream os(std::filesystem::path(directory) / fmt::format("state_{}.csv", name));
        os << field_to_csv(*f, name, s.t);
    }
}

ScalarField load_field(const std::string& path, const GridPtr& g, double* t) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    std::string header;
    std::getline(is, header);
    int nr = -1, nz = -1;
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
        if (tok.rfind("Nr=", 0) == 0) nr = std::stoi(tok.substr(3));
        if (tok.rfind("Nz=", 0) == 0) nz = std::stoi(tok.substr(3));
        if (tok.rfind("t=", 0) == 0 && t) *t = std::stod(tok.substr(2));
    }
    if (nr != g->Nr || nz != g->Nz) throw ConfigError(path + ": grid shape does not match");
    ScalarField f(g);
    std::string line;
    for (int i = 0; i < g->nr(); ++i) {
        if (!std::getline(is, line)) throw ConfigError(path + ": truncated");
        std::istringstream ls(line);
        std::string cell;
        for (int j = 0; j < g->Nz; ++j) {
            if (!std::getline(ls, cell, ',')) throw ConfigError(path + ": short row");
            f(i, j) = std::stod(cell);
        }
    }
    return f;
}

}  // namespace axisym
