#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "axisym/evolve.hpp"

namespace axisym {

/// Everything a config file can set. `run` mirrors the integrator settings.
struct Config {
    RunConfig run;
    std::string out = "out";
    std::uint64_t seed = 12345;
    /// Estimate reports written by `run`: any of restrictions, chain, vr, holder, a0; or "all".
    std::vector<std::string> suite = {"all"};
    bool strict = false;
    double holder_alpha = 0.5;
    double decay_eps = 0.5;
    /// swirl | vorticity | coupled
    std::string mms_case = "coupled";
    std::vector<int> mms_N = {32, 64, 128};
    double mms_dt_coeff = 0.5;
    /// r0 | nu
    std::string sweep_param = "r0";
    std::vector<double> sweep_values;

    /// Where each key was set, for line-anchored validation errors.
    std::string source;
    std::map<std::string, int> lines;
};

/// Parses flat `key = value` lines; '#' starts a comment. Lists are comma separated.
/// Errors are ConfigError with a "source:line: " prefix; unknown keys are rejected.
Config parse_config(const std::string& text, const std::string& source = "<config>");
Config load_config(const std::string& path);

/// Cross-field checks: eps < r0, 2 r0 < R, positivity, stability bound. Throws ConfigError anchored at
/// the line of the offending key (the later one for a pair).
void validate_config(const Config& c);

/// One line per key: name, type, default, meaning.
const std::string& config_schema();

}  // namespace axisym
