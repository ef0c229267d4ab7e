// Acceptance criteria 1-9: one PASS/FAIL line each, nonzero exit if any fails.
// Usage: acceptance <path to the axisym executable> <scratch dir>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "axisym/verify.hpp"

namespace fs = std::filesystem;
using namespace axisym;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome groups(const std::vector<std::string>& names, double budget_s) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int asserted = 0;
    for (const auto& g : names) {
        for (const auto& r : run_verify_group(g, VerifyOptions{})) {
            if (r.measured_only) continue;
            ++asserted;
            if (!r.pass) {
                o.pass = false;
                o.detail += fmt::format(" {}(lhs={:.6g},rhs={:.6g})", r.id, r.lhs, r.rhs);
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0.0 && secs > budget_s) {
        o.pass = false;
        o.detail += fmt::format(" runtime {:.1f}s over {:.0f}s", secs, budget_s);
    }
    o.detail = fmt::format("{} asserted checks, {:.1f}s", asserted, secs) + o.detail;
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const std::string& exe, const fs::path& scratch) {
    Outcome o;
    fs::create_directories(scratch);
    fs::path cfg = scratch / "determinism.cfg";
    std::ofstream(cfg) << "eps = 0.1\nNr = 32\nNz = 32\ndt = 5e-4\nT = 0.2\nr0 = 0.3\nu_kind = gaussian\n"
                          "u_amp = 0.05\nchi_kind = ring\nchi_amp = 1.0\nseed = 99\n";
    std::vector<std::string> files = {"monitors.csv", "estimates.json", "state_u.csv", "state_chi.csv",
                                      "state_psi.csv"};
    for (const char* d : {"a", "b"}) {
        fs::remove_all(scratch / d);
        std::string cmd = fmt::format("\"{}\" run --config \"{}\" --out \"{}\" > /dev/null", exe, cfg.string(),
                                      (scratch / d).string());
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            o.pass = false;
            o.detail = fmt::format("run into {} returned {}", d, rc);
            return o;
        }
    }
    for (const auto& f : files) {
        std::string a = slurp(scratch / "a" / f), b = slurp(scratch / "b" / f);
        if (a.empty() || a != b) {
            o.pass = false;
            o.detail += " " + f + (a.empty() ? " missing" : " differs");
        }
    }
    if (o.pass) o.detail = fmt::format("{} files bit-identical", files.size());
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <axisym executable> <scratch dir>\n";
        return 2;
    }
    const std::string exe = argv[1];
    const fs::path scratch = argv[2];

    struct Criterion {
        const char* name;
        std::vector<std::string> groups;
        double budget;
    };
    const std::vector<Criterion> list = {
        {"1 hardy suite", {"hardy"}, 10.0},
        {"2 elliptic explicit constants", {"elliptic"}, 60.0},
        {"3 mms convergence", {"mms"}, 180.0},
        {"4 structure identities", {"structure"}, 0.0},
        {"5 maximum principle and energy", {"maxprinciple"}, 0.0},
        {"6 decay", {"decay", "poincare"}, 0.0},
        {"7 iteration bound", {"iteration"}, 0.0},
        {"8 restriction detection", {"restrictions"}, 0.0},
    };
    int failed = 0;
    for (const auto& c : list) {
        Outcome o;
        try {
            o = groups(c.groups, c.budget);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = e.what();
        }
        std::cout << fmt::format("{} criterion {}: {}\n", o.pass ? "PASS" : "FAIL", c.name, o.detail) << std::flush;
        failed += o.pass ? 0 : 1;
    }
    Outcome d = determinism(exe, scratch);
    std::cout << fmt::format("{} criterion 9 determinism: {}\n", d.pass ? "PASS" : "FAIL", d.detail);
    failed += d.pass ? 0 : 1;
    return failed == 0 ? 0 : 1;
}
