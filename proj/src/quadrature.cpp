#include "axisym/quadrature.hpp"

#include <cmath>
#include <vector>

namespace axisym {

QuadratureResult simpson(const std::function<double(double)>& f, double a, double b, double rel_tol,
                         double abs_scale, int max_doublings) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    // Keep endpoint, even and odd node sums separately so each doubling only evaluates the new nodes.
    int n = 16;
    double h = (b - a) / n;
    double ends = f(a) + f(b);
    double even = 0.0, odd = 0.0;
    for (int k = 1; k < n; ++k) (k % 2 ? odd : even) += f(a + k * h);
    double prev = h / 3.0 * (ends + 2.0 * even + 4.0 * odd);
    for (int level = 0; level < max_doublings; ++level) {
        n *= 2;
        h = (b - a) / n;
        even += odd;
        odd = 0.0;
        for (int k = 1; k < n; k += 2) odd += f(a + k * h);
        double cur = h / 3.0 * (ends + 2.0 * even + 4.0 * odd);
        res.value = cur;
        res.panels = n;
        double scale = std::max(std::abs(cur), abs_scale);
        if (std::abs(cur - prev) <= rel_tol * scale || (cur == 0.0 && prev == 0.0)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

QuadratureResult simpson_power_map(const std::function<double(double)>& f, double b, int m, double rel_tol) {
    auto g = [&](double s) {
        if (s == 0.0) return 0.0;
        double r = b * std::pow(s, m);
        return f(r) * b * m * std::pow(s, m - 1);
    };
    return simpson(g, 0.0, 1.0, rel_tol);
}

QuadratureResult simpson_log_map(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    auto g = [&](double s) {
        double r = a * std::exp(s);
        return f(r) * r;
    };
    return simpson(g, 0.0, std::log(b / a), rel_tol);
}

}  // namespace axisym
