#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "axisym/fields.hpp"
#include "axisym/grid.hpp"
#include "axisym/monitors.hpp"

#include <json.hpp>

namespace axisym {

struct FlowState;

/// One inequality lhs <= rhs, evaluated. `measured_only` reports carry terms but no verdict
/// (their constants are not known explicitly); `pass` is then always true.
struct EstimateReport {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 0.0;
    double ratio = 0.0;
    bool pass = true;
    double slack = 0.0;
    bool measured_only = false;
    std::vector<std::pair<std::string, double>> terms;
    std::string note;
};

/// Fills ratio and pass from lhs, rhs and slack. lhs = rhs = 0 gives ratio 0 and a pass.
EstimateReport make_report(std::string id, double lhs, double rhs, double constant, double slack);
/// Tabulated terms with ratio lhs/rhs (0 when rhs is 0) and no verdict.
EstimateReport measured_report(std::string id, double lhs, double rhs,
                               std::vector<std::pair<std::string, double>> terms, std::string note = "");

nlohmann::ordered_json to_json(const EstimateReport& r);
nlohmann::ordered_json to_json(const std::vector<EstimateReport>& rs);

// ---------------------------------------------------------------------------------------------
// Hardy inequalities

/// h2_11: ||f r^-mu|| <= |mu - 2/p|^-1 ||f_r r^(1-mu)||, weight r dr, f on [0, r_max].
/// h2_12: the same for f - f(0) when mu > 2/p.
/// h2_16: 1-D, (int_eps^inf |x^-beta F|^p)^(1/p) <= (beta - 1/p)^-1 (int_eps^inf |x^(1-beta) F'|^p)^(1/p), F(eps) = 0.
/// h2_18: ||u r^-alpha|| <= (alpha - 2/p)^-1 ||u_r r^(1-alpha)||, weight r dr on r > eps, u(eps) = 0.
enum class HardyVariant { h2_11, h2_12, h2_16, h2_18 };

HardyVariant parse_hardy_variant(const std::string& s);
std::string to_string(HardyVariant v);

/// Radial profile on [r_min, r_max], extended as the constant f(r_max) beyond r_max.
/// `order_at_min` is the vanishing order of f at r_min (0 if f(r_min) != 0); for hardy_2_12 it is the
/// order of f - f(0). It sets the quadrature map near a singular weight at r = 0.
struct RadialProfile {
    std::function<double(double)> f;
    std::function<double(double)> df;
    double r_min = 0.0;
    double r_max = 1.0;
    int order_at_min = 0;
};

struct HardyParams {
    double p = 2.0;
    /// mu for h2_11/h2_12, beta for h2_16, alpha for h2_18.
    double weight = 0.0;
    /// Multiplies the exact constant (1 for the real check).
    double constant_scale = 1.0;
    double slack = 1e-6;
};

/// Exact constant of the variant: 1/|mu - 2/p|, 1/(beta - 1/p) or 1/(alpha - 2/p).
double hardy_constant(HardyVariant v, double p, double weight);

/// Both sides by Simpson quadrature refined to 1e-8. Throws PreconditionError naming the violated
/// hypothesis (mu = 2/p, beta <= 1/p, alpha <= 2/p, wrong vanishing, p <= 1, bad interval).
EstimateReport hardy_check(const RadialProfile& prof, HardyVariant v, const HardyParams& hp);

// ---------------------------------------------------------------------------------------------
// Elliptic estimates for eta_rr + 3 eta_r/r + eta_zz = theta on [eps, r_hi]

/// Explicit-constant checks with weights 6/5, 1, 1 (ids elliptic_4_17, elliptic_4_18, elliptic_4_22) and
/// measured-only aggregates (elliptic_4_14, elliptic_4_12). Boundary ring terms are taken at the inner edge.
/// Throws PreconditionError if theta does not vanish at r_hi.
std::vector<EstimateReport> elliptic_checks(const ScalarField& eta, const ScalarField& theta, double r_hi,
                                            double slack = 0.05);

/// Terms of the localized radial-velocity estimate: lhs = ||grad (v_r~/r)_r||^2 + 6 ||(v_r~/r)_r / r||^2,
/// chi term ||(chi~/r)_r||^2 and axial terms ||v_z||^2 + ||v_z,r||^2. Measured only; ratio is
/// (lhs - chi term) / axial terms. Throws PreconditionError in axis mode.
EstimateReport vr_estimate_check(const FlowState& s, const Cutoff& c);

/// Terms of the swirl/vorticity estimate chain read from a run's monitor series.
/// Initial values come from the first sample; `nu_star` and `eps_param` enter the X(t) envelope.
std::vector<EstimateReport> chain_monitors(const MonitorSeries& s, const Cutoff& c, double nu, double nu_star,
                                           double eps_param = 0.5);

/// 1 + ||v_phi~^2(0)/r|| + ||chi~(0)/r||^2 and the same with every norm squared, from the first sample.
std::pair<double, double> a0_data(const MonitorSeries& s);

// ---------------------------------------------------------------------------------------------
// Closed forms

/// K / (1 - mu), the limit of f <- mu f + K. Throws DomainError for mu >= 1, mu < 0 or K < 0.
double iteration_bound(double mu, double K);

/// A + X0 e^{-nu_star t} / (1 - eps_param).
double decay_envelope(double A, double X0, double eps_param, double nu_star, double t);

/// Bound at time (k+1)T: A / (1 - q) + X0 e^{-nu_star k T} / (1 - eps_param), q = e^{-nu_star T} / (1 - eps_param).
/// Throws PreconditionError unless q < 1.
double decay_iterate(double A, double X0, double eps_param, double nu_star, double T, int k);

struct PoincareResult {
    double c_p = 0.0;
    double lambda1 = 0.0;
    double nu_star = 0.0;
    int iterations = 0;
};

/// Smallest eigenvalue of -(1/r)(r f_r)_r - f_zz over fields periodic in z and vanishing at r_hi
/// (zero flux at the inner edge), by inverse power iteration. c_p = 1/lambda1,
/// nu_star = min(nu / (2 c_p), 3 nu / c_p). Throws ConvergenceError after `max_iter` iterations.
PoincareResult poincare_constant(const GridPtr& g, double r_hi, double nu, int max_iter = 2000, double tol = 1e-12);

/// Same iteration for the 1-D periodic, zero-mean Laplacian on [-a, a) with N nodes; returns c_p.
double poincare_constant_periodic(double a, int N, int max_iter = 2000, double tol = 1e-12);

double nu_star_from(double nu, double c_p);

}  // namespace axisym
