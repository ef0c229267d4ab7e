// axisym: run, verify, mms and sweep front end.
//
// Exit codes: 0 ok, 1 config error, 2 restriction violated under --strict, 3 blow-up, 4 verify failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "axisym/config.hpp"
#include "axisym/errors.hpp"
#include "axisym/estimates.hpp"
#include "axisym/evolve.hpp"
#include "axisym/fields.hpp"
#include "axisym/manufactured.hpp"
#include "axisym/monitors.hpp"
#include "axisym/stencil.hpp"
#include "axisym/verify.hpp"

namespace fs = std::filesystem;
using namespace axisym;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, config_error = 1, restriction = 2, blow_up = 3, verify_failed = 4 };

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + p.string());
    out << text;
}

bool wanted(const std::vector<std::string>& suite, const std::string& name) {
    for (auto& s : suite)
        if (s == "all" || s == name) return true;
    return false;
}

json config_json(const Config& c) {
    const RunConfig& r = c.run;
    json j;
    j["eps"] = r.eps;
    j["R"] = r.R;
    j["a"] = r.a;
    j["Nr"] = r.Nr;
    j["Nz"] = r.Nz;
    j["nu"] = r.nu;
    j["dt"] = r.dt;
    j["T"] = r.T;
    j["r0"] = r.r0;
    j["scheme"] = r.scheme == Scheme::cnab2 ? "cnab2" : "imex_euler";
    j["sample_every"] = r.sample_every;
    j["u_kind"] = r.init.u_kind;
    j["u_amp"] = r.init.u_amp;
    j["chi_kind"] = r.init.chi_kind;
    j["chi_amp"] = r.init.chi_amp;
    j["seed"] = c.seed;
    j["strict"] = c.strict;
    return j;
}

json restriction_json(const RestrictionReport& r) {
    json j;
    j["id"] = r.id;
    j["lhs"] = r.lhs;
    j["threshold"] = r.threshold;
    j["satisfied"] = r.satisfied;
    j["first_violation_t"] = r.first_violation_t ? json(*r.first_violation_t) : json(nullptr);
    return j;
}

struct RunOutcome {
    RunResult res;
    json report;
    std::vector<RestrictionReport> restrictions;
};

RunOutcome execute(const Config& c) {
    RunConfig rc = c.run;
    rc.keep_snapshots = wanted(c.suite, "holder");
    RunOutcome o;
    o.res = run(rc);
    const RunResult& res = o.res;
    GridPtr g = res.final.grid;
    Cutoff cut = build_cutoff(rc.r0, 2.0 * rc.r0, g);

    json j;
    j["config"] = config_json(c);
    j["samples"] = res.series.size();
    j["final_time"] = res.final.t;
    j["blew_up"] = res.blew_up;
    if (res.blew_up) j["message"] = res.message;

    o.restrictions = check_restrictions(res.series, rc.nu);
    if (wanted(c.suite, "restrictions")) {
        json arr = json::array();
        for (auto& r : o.restrictions) arr.push_back(restriction_json(r));
        j["restrictions"] = arr;
    }
    if (res.blew_up || res.series.size() < 2) {
        // the derived estimates need a finite history of at least two samples
        j["estimates"] = json::array();
        o.report = j;
        return o;
    }
    std::vector<EstimateReport> reports;
    if (wanted(c.suite, "chain")) {
        PoincareResult pc = poincare_constant(g, 2.0 * rc.r0, rc.nu);
        j["poincare"] = {{"c_p", pc.c_p}, {"nu_star", pc.nu_star}, {"iterations", pc.iterations}};
        for (auto& r : chain_monitors(res.series, cut, rc.nu, pc.nu_star, c.decay_eps)) reports.push_back(r);
    }
    if (wanted(c.suite, "vr") && g->eps > 0.0) reports.push_back(vr_estimate_check(res.final, cut));
    if (wanted(c.suite, "a0")) {
        auto [a1, a2] = a0_data(res.series);
        reports.push_back(measured_report("a0", a1, a2, {{"A0", a1}, {"A0_squared_norms", a2}},
                                          "tabulated with both norm powers"));
    }
    if (wanted(c.suite, "holder")) {
        HolderResult h = holder_seminorm(res.series, "u", c.holder_alpha, 1000000, c.seed);
        j["holder_u"] = {{"alpha", c.holder_alpha},   {"seminorm", h.seminorm},     {"pairs_examined", h.pairs_examined},
                         {"pairs_total", h.pairs_total}, {"subsampled", h.subsampled}, {"seed", h.seed}};
    }
    j["estimates"] = to_json(reports);
    o.report = j;
    return o;
}

int cmd_run(Config c) {
    validate_config(c);
    fs::create_directories(c.out);
    RunOutcome o = execute(c);
    fs::path out(c.out);
    write_file(out / "monitors.csv", o.res.series.to_csv());
    write_file(out / "estimates.json", o.report.dump(2) + "\n");
    dump_state(o.res.final, c.out);
    if (o.res.blew_up) {
        std::cerr << o.res.message << "\n";
        return blow_up;
    }
    int code = ok;
    for (auto& r : o.restrictions) {
        if (r.satisfied) continue;
        std::cerr << fmt::format("{} violated: lhs={:.6g} threshold={:.6g} first_violation_t={:.9g}\n", r.id, r.lhs,
                                 r.threshold, r.first_violation_t.value_or(-1.0));
        if (c.strict) code = restriction;
    }
    std::cout << fmt::format("wrote {}/monitors.csv, estimates.json and state dumps ({} samples, t={})\n", c.out,
                             o.res.series.size(), o.res.final.t);
    return code;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& out_dir, double hardy_scale) {
    VerifyOptions opt;
    opt.hardy_constant_scale = hardy_scale;
    std::vector<std::string> groups;
    for (auto& g : verify_groups())
        if (only.empty() || std::find(only.begin(), only.end(), g) != only.end()) groups.push_back(g);
    for (auto& o : only)
        if (std::find(verify_groups().begin(), verify_groups().end(), o) == verify_groups().end())
            throw ConfigError("--only: unknown verify group '" + o + "'");

    std::vector<EstimateReport> all;
    std::vector<std::string> failed;
    std::cout << fmt::format("{:<44} {:>13} {:>13} {:>10}  {}\n", "id", "lhs", "rhs", "ratio", "verdict");
    for (auto& g : groups) {
        std::vector<EstimateReport> reps;
        try {
            reps = run_verify_group(g, opt);
        } catch (const std::exception& e) {
            // a group that cannot finish counts as a failed check
            EstimateReport r;
            r.id = g + ":error";
            r.pass = false;
            r.note = e.what();
            reps.push_back(r);
            std::cerr << g << ": " << e.what() << "\n";
        }
        for (auto& r : reps) {
            const char* verdict = r.measured_only ? "measured" : (r.pass ? "PASS" : "FAIL");
            std::cout << fmt::format("{:<44} {:>13.6g} {:>13.6g} {:>10.4g}  {}\n", r.id, r.lhs, r.rhs, r.ratio, verdict);
            if (!r.measured_only && !r.pass) failed.push_back(r.id);
            all.push_back(std::move(r));
        }
    }
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "verify.json", to_json(all).dump(2) + "\n");
    }
    if (!failed.empty()) {
        for (auto& id : failed) std::cerr << "verify failed: " << id << "\n";
        return verify_failed;
    }
    std::cout << "all asserted checks passed\n";
    return ok;
}

int cmd_mms(const Config& c) {
    validate_config(c);
    if (!(c.run.T > 0.0)) throw ConfigError("mms: T must be > 0");
    RunConfig rc = c.run;
    GridPtr g = rc.make_grid();
    ManufacturedSolution m = c.mms_case == "swirl"       ? ManufacturedSolution::swirl_case(*g, rc.nu)
                             : c.mms_case == "vorticity" ? ManufacturedSolution::vorticity_case(*g, rc.nu)
                                                         : ManufacturedSolution::coupled_case(*g, rc.nu);
    MmsTable t = mms_run(rc, m, c.mms_N, c.mms_dt_coeff);
    std::string csv = "N,dt,steps,err_u,err_chi,err_psi,err_vr,err_vz\n";
    std::cout << fmt::format("{:>6} {:>12} {:>12} {:>12} {:>12}\n", "N", "err_u", "err_chi", "err_psi", "err_vz");
    for (auto& r : t.rows) {
        csv += fmt::format("{},{:.16e},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n", r.N, r.dt, r.steps, r.err_u,
                           r.err_chi, r.err_psi, r.err_vr, r.err_vz);
        std::cout << fmt::format("{:>6} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}\n", r.N, r.err_u, r.err_chi, r.err_psi,
                                 r.err_vz);
    }
    auto ou = t.order(&MmsRow::err_u), oc = t.order(&MmsRow::err_chi), op = t.order(&MmsRow::err_psi);
    for (std::size_t k = 0; k < ou.size(); ++k)
        std::cout << fmt::format("order {}->{}: u {:.3f} chi {:.3f} psi {:.3f}\n", t.rows[k].N, t.rows[k + 1].N, ou[k],
                                 oc[k], op[k]);
    fs::create_directories(c.out);
    write_file(fs::path(c.out) / "mms.csv", csv);
    return ok;
}

int cmd_sweep(const Config& base) {
    if (base.sweep_values.empty()) throw ConfigError("sweep: sweep_values is empty");
    fs::create_directories(base.out);
    std::string csv = fmt::format("{},x_initial,x_final,sup_u_max_cutoff,swirl_5_10,swirl_6_9,nu_star,blew_up\n",
                                  base.sweep_param);
    int code = ok;
    for (double v : base.sweep_values) {
        Config c = base;
        c.suite = {"restrictions"};
        (c.sweep_param == "r0" ? c.run.r0 : c.run.nu) = v;
        validate_config(c);
        RunOutcome o = execute(c);
        auto X = o.res.series.column("x_functional");
        double nu_star = poincare_constant(o.res.final.grid, 2.0 * c.run.r0, c.run.nu).nu_star;
        csv += fmt::format("{:.16e},{:.16e},{:.16e},{:.16e},{},{},{:.16e},{}\n", v, X.front(), X.back(),
                           o.res.series.sup("u_max_cutoff"), o.restrictions[0].satisfied ? 1 : 0,
                           o.restrictions[1].satisfied ? 1 : 0, nu_star, o.res.blew_up ? 1 : 0);
        std::cout << fmt::format("{}={:<10g} X: {:.4e} -> {:.4e}  nu_star={:.4g}{}\n", c.sweep_param, v, X.front(),
                                 X.back(), nu_star, o.res.blew_up ? "  blow-up" : "");
        if (o.res.blew_up) code = blow_up;
    }
    write_file(fs::path(base.out) / "sweep.csv", csv);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Axisymmetric Navier-Stokes with swirl: simulation and estimate monitors"};
    app.require_subcommand(1);
    std::string config_path, out_dir;
    bool strict = false;
    std::vector<std::string> only;
    int threads = 0;
    double hardy_scale = 1.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_dir, "output directory (overrides the config)");
        sub->add_option("--threads", threads, "worker threads (default: AXISYM_THREADS or 1)");
    };
    CLI::App* run_cmd = app.add_subcommand("run", "integrate one configuration and write monitors and estimates");
    run_cmd->add_option("--config", config_path, "config file")->required();
    run_cmd->add_flag("--strict", strict, "exit 2 if a swirl restriction is violated");
    run_cmd->add_option("--only", only, "restrict the estimate suite (restrictions, chain, vr, holder, a0)")
        ->delimiter(',');
    add_common(run_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    verify_cmd->add_option("--only", only, "comma separated groups")->delimiter(',');
    verify_cmd->add_option("--hardy-constant-scale", hardy_scale)->group("");
    add_common(verify_cmd);

    CLI::App* mms_cmd = app.add_subcommand("mms", "manufactured-solution convergence table");
    mms_cmd->add_option("--config", config_path, "config file");
    add_common(mms_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "repeat a run over r0 or nu values");
    sweep_cmd->add_option("--config", config_path, "config file")->required();
    add_common(sweep_cmd);

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) set_num_threads(threads);

    try {
        Config c;
        if (!config_path.empty()) c = load_config(config_path);
        if (!out_dir.empty()) c.out = out_dir;
        if (strict) c.strict = true;
        if (*run_cmd) {
            if (!only.empty()) c.suite = only;
            return cmd_run(c);
        }
        if (*verify_cmd) return cmd_verify(only, out_dir, hardy_scale);
        if (*mms_cmd) return cmd_mms(c);
        return cmd_sweep(c);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    } catch (const PreconditionError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    } catch (const BlowUpError& e) {
        std::cerr << e.what() << "\n";
        return blow_up;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return config_error;
    }
}
