#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axisym/grid.hpp"
#include "axisym/manufactured.hpp"
#include "axisym/monitors.hpp"

namespace axisym {

struct FlowState {
    double t = 0.0;
    GridPtr grid;
    ScalarField u, chi, psi, v_r, v_z;
};

enum class Scheme { imex_euler, cnab2 };

/// Initial swirl and vorticity from the built-in library.
///   u:   zero | gaussian | radial_bump | rigid
///   chi: zero | ring | sine
struct InitialData {
    std::string u_kind = "zero";
    double u_amp = 0.0, u_rc = 0.3, u_sigma = 0.1;
    std::string chi_kind = "zero";
    double chi_amp = 0.0, chi_rc = 0.3, chi_sigma = 0.1;
};

/// Extra source terms added to the explicit part (manufactured solutions).
using Forcing = std::function<void(double t, ScalarField& f_u, ScalarField& f_chi)>;

struct RunConfig {
    double eps = 0.1, R = 1.0, a = 1.0;
    int Nr = 64, Nz = 64;
    double nu = 1.0;
    double dt = 1e-4;
    double T = 0.0;
    double r0 = 0.25;
    double psi_inner = 0.0, psi_outer = 0.0;
    /// dt must satisfy dt <= cfl * min(dr, dz)^2 / nu.
    double cfl = 4.0;
    Scheme scheme = Scheme::imex_euler;
    InitialData init;
    int sample_every = 10;
    bool keep_snapshots = false;
    Forcing forcing;

    GridPtr make_grid() const;
};

/// Throws ConfigError on dt <= 0, T < 0 or a dt above the stability bound.
void validate(const RunConfig& cfg);
double stability_bound(const RunConfig& cfg);

FlowState initial_state(const RunConfig& cfg);
FlowState initial_state(const RunConfig& cfg, const GridPtr& g);

/// Builds a consistent state from u and chi (psi and velocity recovered).
FlowState make_state(double t, ScalarField u, ScalarField chi, double psi_inner = 0.0, double psi_outer = 0.0);

/// One first-order IMEX step. Throws BlowUpError on non-finite values.
FlowState step(const FlowState& s, const RunConfig& cfg);

/// Stepper that keeps the history needed by the second-order scheme.
class Integrator {
public:
    explicit Integrator(RunConfig cfg);
    FlowState advance(const FlowState& s);

private:
    RunConfig cfg_;
    bool have_prev_ = false;
    ScalarField prev_nu_, prev_nchi_;
};

struct RunResult {
    FlowState final;
    MonitorSeries series;
    bool blew_up = false;
    std::string message;
};

/// Integrates to cfg.T, sampling every `sample_every` steps and at T. A blow-up ends the run early with
/// the last finite state in `final`.
RunResult run(const RunConfig& cfg);

/// Error norms of one manufactured run.
struct MmsRow {
    int N = 0;
    double dt = 0.0;
    int steps = 0;
    double err_u = 0.0, err_chi = 0.0, err_psi = 0.0, err_vr = 0.0, err_vz = 0.0;
};

struct MmsTable {
    std::vector<MmsRow> rows;
    /// log2 ratios of consecutive rows.
    std::vector<double> order(double MmsRow::*field) const;
};

/// Runs the manufactured solution at each N (Nr = Nz = N) with dt = dt_coeff * dr^2, measuring
/// weighted L2 errors at cfg.T. Boundary compatibility is checked first.
MmsTable mms_run(const RunConfig& cfg, const ManufacturedSolution& m, const std::vector<int>& resolutions,
                 double dt_coeff);

/// Writes each field as CSV with a '#' header line of grid parameters and t.
void dump_state(const FlowState& s, const std::string& directory);
/// Reads a field written by dump_state (header must match `g`).
ScalarField load_field(const std::string& path, const GridPtr& g, double* t = nullptr);
/// One field as text in the dump format.
std::string field_to_csv(const ScalarField& f, const std::string& name, double t);

}  // namespace axisym
