#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axisym/fields.hpp"
#include "axisym/grid.hpp"

namespace axisym {

struct FlowState;

/// Named scalar functionals sampled over time, with trapezoid-in-time integrals and
/// running suprema kept alongside.
class MonitorSeries {
public:
    MonitorSeries() = default;
    explicit MonitorSeries(std::vector<std::string> names);

    /// Appends one sample; `values` must follow `names()` order and t must increase strictly.
    void add_sample(double t, const std::vector<double>& values);
    /// Appends one sample given as (id, value) pairs; the first call fixes the column set.
    void add_sample(double t, const std::vector<std::pair<std::string, double>>& values);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<double>& times() const { return times_; }
    std::size_t size() const { return times_.size(); }
    bool has(const std::string& id) const;

    double value(std::size_t sample, const std::string& id) const;
    std::vector<double> column(const std::string& id) const;
    /// Trapezoid integral of the column over [t_0, t_last].
    double integral(const std::string& id) const;
    /// Maximum of the column over the samples.
    double sup(const std::string& id) const;

    /// Optional field snapshots aligned with the sample times.
    void add_snapshot(const std::string& field, ScalarField f);
    const std::vector<ScalarField>& snapshots(const std::string& field) const;
    bool has_snapshots(const std::string& field) const { return snapshots_.count(field) != 0; }

    /// Metadata of the sampling: viscosity and cut-off radii used for the tilde quantities.
    double nu = 1.0;
    double cutoff_lo = 0.0;
    double cutoff_hi = 0.0;
    bool cutoff_vanishing = false;

    /// "t,<ids...>" header and one row per sample in %.16e.
    std::string to_csv() const;

private:
    std::size_t index(const std::string& id) const;

    std::vector<std::string> names_;
    std::map<std::string, std::size_t> lookup_;
    std::vector<double> times_;
    std::vector<std::vector<double>> rows_;
    std::vector<double> integral_;
    std::vector<double> sup_;
    std::map<std::string, std::vector<ScalarField>> snapshots_;
};

/// All monitor functionals of a state, in a fixed order. Tilde quantities use the cut-off:
/// v_phi~ = v_phi zeta, chi~ = chi zeta^2, v_r~ = v_r zeta^2.
std::vector<std::pair<std::string, double>> sample_functionals(const FlowState& s, const Cutoff& c, double nu);

/// (integral |f|^p r^{pk} r dr dz)^{1/p}. Throws DomainError for k < 0 in axis mode with f nonzero on the axis.
double weighted_norm(const ScalarField& f, double p, double k);

/// (sup_t ||f||_{H^k}^2 + nu * int ||grad f||_{H^k}^2 dt)^{1/2}, read from the columns
/// "<f_id>_h<k>_sq" and "<f_id>_grad_h<k>_sq". Throws DomainError if either is missing.
double v2_norm(const MonitorSeries& s, const std::string& f_id, int k);

struct HolderResult {
    double seminorm = 0.0;
    std::uint64_t pairs_examined = 0;
    std::uint64_t pairs_total = 0;
    bool subsampled = false;
    std::uint64_t seed = 0;
};

/// Largest |f(x,t) - f(x',t')| / (|x-x'|^alpha + |t-t'|^{alpha/2}) over sampled pairs, using the
/// meridional distance (periodic in z). All pairs up to `pair_budget`; beyond that all grid-neighbour
/// pairs plus `pair_budget` seeded random pairs.
HolderResult holder_seminorm(const MonitorSeries& s, const std::string& f_id, double alpha,
                             std::uint64_t pair_budget = 1000000, std::uint64_t seed = 12345);

/// Level-set functionals of w^{(k)} = max(w - k, 0) over the cylinder B_rho(x0) x (t0, t0 + tau).
struct TruncationReport {
    double level = 0.0;
    double max_l2sq_shrunk = 0.0;    ///< max_t ||w^(k)||^2 over B_{rho - sigma1 rho}
    double initial_l2sq = 0.0;       ///< ||w^(k)(t0)||^2 over B_rho
    double spacetime_l2sq = 0.0;     ///< ||w^(k)||^2 over Q(rho, tau)
    double v2_sq_shrunk = 0.0;       ///< V_2^0 norm squared over Q(rho - sigma1 rho, tau - sigma2 tau)
    std::vector<double> level_set_measure;  ///< meas A_{k,rho}(t) per sample in the window
    std::vector<double> sample_times;
    double mu = 0.0;                 ///< int meas^{r/q}(A_{k,rho}(t)) dt
    double mu_power = 0.0;           ///< mu^{(2/r)(1 + kappa)}
    double kappa = 1.0 / 6.0;
    double r_exp = 10.0 / 3.0;
    double q_exp = 10.0 / 3.0;
};

struct TruncationParams {
    double level = 0.0;
    double x0_r = 0.0, x0_z = 0.0;
    double t0 = 0.0;
    double rho = 0.0, tau = 0.0;
    double sigma1 = 0.5, sigma2 = 0.5;
    double nu = 1.0;
    double r_exp = 10.0 / 3.0, q_exp = 10.0 / 3.0, kappa = 1.0 / 6.0;
};

/// Uses the snapshots of field `w_id` stored in the series.
TruncationReport truncation_functionals(const MonitorSeries& s, const std::string& w_id, const TruncationParams& p);

/// Fraction of the circle {|x| = r} at height z inside the 3-D ball of radius rho centred at (r0, 0, z0).
double ball_arc_fraction(double r, double z, double r0, double z0, double rho, double period);

/// Sum of the four localized terms: int int v_phi~^4/r^4 + ||chi~/r||^2_{V_2^0} + int int |grad (v_r~/r)_r|^2
/// + int int ((v_r~/r)_r)^2 / r^2. Throws DomainError if the cut-off differs from the one sampled.
double functional_L(const MonitorSeries& s, const Cutoff& c);

/// (1/nu^2) ||v_phi~^2 / r||^2 + ||chi~ / r||^2.
double functional_X(const FlowState& s, const Cutoff& c, double nu);

struct RestrictionReport {
    std::string id;
    double lhs = 0.0;
    double threshold = 0.0;
    bool satisfied = true;
    std::optional<double> first_violation_t;
};

/// Swirl smallness conditions on sup ||r v_phi|| over the cut-off support.
std::vector<RestrictionReport> check_restrictions(const MonitorSeries& s, double nu);

/// Thresholds on ||r v_phi||_inf: (5/4)^{1/4} nu and (3/4)^{1/4} nu.
double swirl_threshold_weak(double nu);
double swirl_threshold_strong(double nu);

}  // namespace axisym
