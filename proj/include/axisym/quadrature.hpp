#pragma once

#include <functional>

namespace axisym {

struct QuadratureResult {
    double value = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Composite Simpson on [a, b], doubling the panel count until two successive values agree to
/// `rel_tol` (relative, with an absolute floor of rel_tol * abs_scale).
QuadratureResult simpson(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-8,
                         double abs_scale = 0.0, int max_doublings = 22);

/// Integral over [0, b] of an integrand with an integrable power singularity at 0, through r = b s^m.
QuadratureResult simpson_power_map(const std::function<double(double)>& f, double b, int m, double rel_tol = 1e-8);

/// Integral over [a, b] with 0 < a < b, through r = a e^s (for ranges spanning many decades).
QuadratureResult simpson_log_map(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-8);

}  // namespace axisym
