#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "axisym/estimates.hpp"
#include "axisym/grid.hpp"
#include "axisym/manufactured.hpp"

namespace axisym {

/// One Hardy test case: profile, variant and parameters.
struct HardyCase {
    HardyVariant variant;
    RadialProfile profile;
    HardyParams params;
    bool near_extremal = false;
};

/// `n` seeded smooth profiles satisfying every hypothesis of `v`. Every tenth case is a
/// near-extremal power profile spanning many decades, where the ratio approaches 1.
std::vector<HardyCase> hardy_corpus(HardyVariant v, int n, std::uint64_t seed);

/// Manufactured eta problem: eta* built with triple roots so that eta, eta_r and theta vanish at r_hi
/// and eta_r vanishes at the inner edge; theta = eta*_rr + 3 eta*_r / r + eta*_zz exactly.
struct EtaCase {
    std::string name;
    double eps = 0.0, R = 1.0, a = 1.0;
    double r_hi_target = 0.5;
    Polynomial P;          ///< radial factor of eta*
    int z_mode = 1;        ///< Z(z) = cos(k pi z / a) + z_shift + z_second cos(3 pi z / a)
    double z_shift = 0.0;
    double z_second = 0.0;
};

std::vector<EtaCase> eta_corpus();

struct EtaSample {
    GridPtr grid;
    double r_hi = 0.0;
    ScalarField eta_exact, theta;
};

/// Samples theta on an N x N grid, with r_hi snapped onto the nearest node first.
EtaSample sample_eta_case(const EtaCase& c, int N);

struct VerifyOptions {
    double hardy_constant_scale = 1.0;
    int hardy_profiles = 100;
    std::uint64_t seed = 20250101;
};

/// Check groups in run order.
const std::vector<std::string>& verify_groups();

/// Runs one group. Asserted reports have measured_only = false.
std::vector<EstimateReport> run_verify_group(const std::string& group, const VerifyOptions& opt);

}  // namespace axisym
