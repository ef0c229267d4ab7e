#include "axisym/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "axisym/errors.hpp"

namespace axisym {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& v) {
    double x = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError("expected a number, got '" + v + "'");
    return x;
}

long long to_int(const std::string& v) {
    long long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError("expected an integer, got '" + v + "'");
    return x;
}

bool to_bool(const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("expected true or false, got '" + v + "'");
}

std::string unquote(const std::string& v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
    return v;
}

struct Key {
    const char* type;
    const char* def;
    const char* help;
    std::function<void(Config&, const std::string&)> set;
};

const std::vector<std::pair<std::string, Key>>& keys() {
    static const std::vector<std::pair<std::string, Key>> k = {
        {"eps", {"float", "0.1", "inner radius; 0 selects axis mode", [](Config& c, auto& v) { c.run.eps = to_double(v); }}},
        {"R", {"float", "1.0", "outer radius", [](Config& c, auto& v) { c.run.R = to_double(v); }}},
        {"a", {"float", "1.0", "half period in z", [](Config& c, auto& v) { c.run.a = to_double(v); }}},
        {"Nr", {"int", "64", "radial intervals", [](Config& c, auto& v) { c.run.Nr = static_cast<int>(to_int(v)); }}},
        {"Nz", {"int", "64", "axial nodes (even)", [](Config& c, auto& v) { c.run.Nz = static_cast<int>(to_int(v)); }}},
        {"nu", {"float", "1.0", "viscosity", [](Config& c, auto& v) { c.run.nu = to_double(v); }}},
        {"dt", {"float", "1e-4", "time step", [](Config& c, auto& v) { c.run.dt = to_double(v); }}},
        {"T", {"float", "0.0", "final time", [](Config& c, auto& v) { c.run.T = to_double(v); }}},
        {"r0", {"float", "0.25", "cut-off plateau radius; zeta = 0 beyond 2 r0", [](Config& c, auto& v) { c.run.r0 = to_double(v); }}},
        {"psi_inner", {"float", "0.0", "stream function on the inner wall", [](Config& c, auto& v) { c.run.psi_inner = to_double(v); }}},
        {"psi_outer", {"float", "0.0", "stream function on the outer wall", [](Config& c, auto& v) { c.run.psi_outer = to_double(v); }}},
        {"cfl", {"float", "4.0", "dt <= cfl * min(dr,dz)^2 / nu", [](Config& c, auto& v) { c.run.cfl = to_double(v); }}},
        {"scheme", {"string", "imex_euler", "imex_euler | cnab2", [](Config& c, auto& v) {
             if (v == "imex_euler") c.run.scheme = Scheme::imex_euler;
             else if (v == "cnab2") c.run.scheme = Scheme::cnab2;
             else throw ConfigError("scheme must be imex_euler or cnab2, got '" + v + "'");
         }}},
        {"sample_every", {"int", "10", "monitor cadence in steps", [](Config& c, auto& v) { c.run.sample_every = static_cast<int>(to_int(v)); }}},
        {"u_kind", {"string", "zero", "initial swirl: zero | gaussian | radial_bump | rigid", [](Config& c, auto& v) { c.run.init.u_kind = v; }}},
        {"u_amp", {"float", "0.0", "initial swirl amplitude", [](Config& c, auto& v) { c.run.init.u_amp = to_double(v); }}},
        {"u_rc", {"float", "0.3", "initial swirl centre radius", [](Config& c, auto& v) { c.run.init.u_rc = to_double(v); }}},
        {"u_sigma", {"float", "0.1", "initial swirl width", [](Config& c, auto& v) { c.run.init.u_sigma = to_double(v); }}},
        {"chi_kind", {"string", "zero", "initial vorticity: zero | ring | sine", [](Config& c, auto& v) { c.run.init.chi_kind = v; }}},
        {"chi_amp", {"float", "0.0", "initial vorticity amplitude", [](Config& c, auto& v) { c.run.init.chi_amp = to_double(v); }}},
        {"chi_rc", {"float", "0.3", "initial vorticity centre radius", [](Config& c, auto& v) { c.run.init.chi_rc = to_double(v); }}},
        {"chi_sigma", {"float", "0.1", "initial vorticity width", [](Config& c, auto& v) { c.run.init.chi_sigma = to_double(v); }}},
        {"out", {"string", "out", "output directory", [](Config& c, auto& v) { c.out = v; }}},
        {"seed", {"int", "12345", "seed for sampled seminorms", [](Config& c, auto& v) {
             long long s = to_int(v);
             if (s < 0) throw ConfigError("seed must be >= 0");
             c.seed = static_cast<std::uint64_t>(s);
         }}},
        {"suite", {"list", "all", "reports: restrictions, chain, vr, holder, a0, all", [](Config& c, auto& v) {
             c.suite = split_list(v);
             for (auto& s : c.suite)
                 if (s != "all" && s != "restrictions" && s != "chain" && s != "vr" && s != "holder" && s != "a0")
                     throw ConfigError("unknown suite entry '" + s + "'");
         }}},
        {"strict", {"bool", "false", "exit 2 when a swirl restriction is violated", [](Config& c, auto& v) { c.strict = to_bool(v); }}},
        {"holder_alpha", {"float", "0.5", "exponent of the Holder seminorm of u", [](Config& c, auto& v) { c.holder_alpha = to_double(v); }}},
        {"decay_eps", {"float", "0.5", "epsilon in the decay envelope", [](Config& c, auto& v) { c.decay_eps = to_double(v); }}},
        {"mms_case", {"string", "coupled", "swirl | vorticity | coupled", [](Config& c, auto& v) {
             if (v != "swirl" && v != "vorticity" && v != "coupled")
                 throw ConfigError("mms_case must be swirl, vorticity or coupled, got '" + v + "'");
             c.mms_case = v;
         }}},
        {"mms_N", {"int list", "32,64,128", "resolutions of the convergence study", [](Config& c, auto& v) {
             c.mms_N.clear();
             for (auto& s : split_list(v)) c.mms_N.push_back(static_cast<int>(to_int(s)));
         }}},
        {"mms_dt_coeff", {"float", "0.5", "dt = coeff * dr^2 in the study", [](Config& c, auto& v) { c.mms_dt_coeff = to_double(v); }}},
        {"sweep_param", {"string", "r0", "r0 | nu", [](Config& c, auto& v) {
             if (v != "r0" && v != "nu") throw ConfigError("sweep_param must be r0 or nu, got '" + v + "'");
             c.sweep_param = v;
         }}},
        {"sweep_values", {"float list", "", "values of the swept parameter", [](Config& c, auto& v) {
             c.sweep_values.clear();
             for (auto& s : split_list(v)) c.sweep_values.push_back(to_double(s));
         }}},
    };
    return k;
}

}  // namespace

Config parse_config(const std::string& text, const std::string& source) {
    static const std::map<std::string, const Key*> index = [] {
        std::map<std::string, const Key*> m;
        for (auto& [name, key] : keys()) m[name] = &key;
        return m;
    }();
    Config c;
    c.source = source;
    std::map<std::string, int>& seen = c.lines;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto at = [&](const std::string& msg) { return ConfigError(fmt::format("{}:{}: {}", source, lineno, msg)); };
        auto eq = line.find('=');
        if (eq == std::string::npos) throw at("expected 'key = value'");
        std::string k = trim(line.substr(0, eq));
        std::string v = unquote(trim(line.substr(eq + 1)));
        auto it = index.find(k);
        if (it == index.end()) throw at("unknown key '" + k + "'");
        if (seen.count(k)) throw at(fmt::format("duplicate key '{}' (first set on line {})", k, seen[k]));
        seen[k] = lineno;
        try {
            it->second->set(c, v);
        } catch (const ConfigError& e) {
            throw at(k + ": " + e.what());
        }
    }
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ":0: cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

void validate_config(const Config& c) {
    // prefix with the latest line among `keys` that the file actually set
    auto anchored = [&](std::initializer_list<const char*> keys, const std::string& msg) {
        int line = 0;
        for (const char* k : keys) {
            auto it = c.lines.find(k);
            if (it != c.lines.end()) line = std::max(line, it->second);
        }
        if (line == 0 || c.source.empty()) return ConfigError(msg);
        return ConfigError(fmt::format("{}:{}: {}", c.source, line, msg));
    };
    const RunConfig& r = c.run;
    if (!(r.R > 0.0)) throw anchored({"R"}, fmt::format("R must be > 0 (got {})", r.R));
    if (!(r.r0 > 0.0)) throw anchored({"r0"}, fmt::format("r0 must be > 0 (got {})", r.r0));
    if (!(r.eps < r.r0))
        throw anchored({"eps", "r0"}, fmt::format("constraint eps < r0 violated (eps={}, r0={})", r.eps, r.r0));
    if (!(2.0 * r.r0 < r.R))
        throw anchored({"r0", "R"}, fmt::format("constraint 2*r0 < R violated (r0={}, R={})", r.r0, r.R));
    if (!(c.holder_alpha > 0.0 && c.holder_alpha < 1.0))
        throw anchored({"holder_alpha"}, fmt::format("holder_alpha must lie in (0, 1) (got {})", c.holder_alpha));
    if (!(c.decay_eps > 0.0 && c.decay_eps < 1.0))
        throw anchored({"decay_eps"}, fmt::format("decay_eps must lie in (0, 1) (got {})", c.decay_eps));
    if (!(c.mms_dt_coeff > 0.0)) throw anchored({"mms_dt_coeff"}, "mms_dt_coeff must be > 0");
    if (c.mms_N.size() < 2) throw anchored({"mms_N"}, "mms_N needs at least two resolutions");
    try {
        validate(r);
    } catch (const ConfigError& e) {
        throw anchored({"eps", "R", "a", "Nr", "Nz", "nu", "dt", "T", "cfl", "sample_every"}, e.what());
    }
}

const std::string& config_schema() {
    static const std::string s = [] {
        std::string out;
        for (auto& [name, key] : keys())
            out += fmt::format("{:<14} {:<10} {:<12} {}\n", name, key.type, key.def[0] ? key.def : "(empty)", key.help);
        return out;
    }();
    return s;
}

}  // namespace axisym
