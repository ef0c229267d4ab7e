#include "axisym/manufactured.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "axisym/errors.hpp"

namespace axisym {

Polynomial Polynomial::power_of_linear(double root, int m) {
    Polynomial p = constant(1.0);
    Polynomial lin({-root, 1.0});
    for (int k = 0; k < m; ++k) p = p * lin;
    return p;
}

Polynomial Polynomial::power_of_reflected(double root, int m) {
    Polynomial p = constant(1.0);
    Polynomial lin({root, -1.0});
    for (int k = 0; k < m; ++k) p = p * lin;
    return p;
}

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return constant(0.0);
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::times_x() const {
    std::vector<double> d(c_.size() + 1, 0.0);
    std::copy(c_.begin(), c_.end(), d.begin() + 1);
    return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial::constant(0.0);
    std::vector<double> d(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> d(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Polynomial(std::move(d));
}

Polynomial operator*(double s, const Polynomial& a) {
    std::vector<double> d = a.c_;
    for (double& x : d) x *= s;
    return Polynomial(std::move(d));
}

namespace {

struct Trig {
    double c, s, kappa;
};

Trig trig(int mode, double a, double z) {
    double kappa = mode * M_PI / a;
    return {std::cos(kappa * z), std::sin(kappa * z), kappa};
}

}  // namespace

Polynomial ManufacturedSolution::Q() const {
    double kappa = stream_mode * M_PI / a;
    Polynomial S1 = S.derivative();
    Polynomial S2 = S1.derivative();
    return 3.0 * S1 + S2.times_x() + (-kappa * kappa) * S.times_x();
}

double ManufacturedSolution::u(double t, double r, double z) const {
    if (swirl_amp == 0.0) return 0.0;
    return swirl_amp * std::exp(-swirl_rate * t) * U(r) * trig(swirl_mode, a, z).c;
}

double ManufacturedSolution::psi(double t, double r, double z) const {
    if (stream_amp == 0.0) return 0.0;
    return stream_amp * std::exp(-stream_rate * t) * r * r * S(r) * trig(stream_mode, a, z).c;
}

double ManufacturedSolution::chi(double t, double r, double z) const {
    if (stream_amp == 0.0) return 0.0;
    return stream_amp * std::exp(-stream_rate * t) * Q()(r) * trig(stream_mode, a, z).c;
}

double ManufacturedSolution::v_r(double t, double r, double z) const {
    if (stream_amp == 0.0) return 0.0;
    Trig tk = trig(stream_mode, a, z);
    return -stream_amp * std::exp(-stream_rate * t) * tk.kappa * r * S(r) * tk.s;
}

double ManufacturedSolution::v_z(double t, double r, double z) const {
    if (stream_amp == 0.0) return 0.0;
    Trig tk = trig(stream_mode, a, z);
    return -stream_amp * std::exp(-stream_rate * t) * (2.0 * S(r) + r * S.derivative()(r)) * tk.c;
}

double ManufacturedSolution::forcing_u(double t, double r, double z) const {
    if (swirl_amp == 0.0) return 0.0;
    Trig tm = trig(swirl_mode, a, z);
    double B = swirl_amp * std::exp(-swirl_rate * t);
    Polynomial U1 = U.derivative();
    double u0 = B * U(r) * tm.c;
    double ur = B * U1(r) * tm.c;
    double urr = B * U1.derivative()(r) * tm.c;
    double uz = -B * U(r) * tm.kappa * tm.s;
    double uzz = -tm.kappa * tm.kappa * u0;
    double ut = -swirl_rate * u0;
    double visc = r > 0.0 ? urr - ur / r + uzz : uzz;
    return ut + v_r(t, r, z) * ur + v_z(t, r, z) * uz - nu * visc;
}

double ManufacturedSolution::forcing_chi(double t, double r, double z) const {
    double f = 0.0;
    if (stream_amp != 0.0) {
        Trig tk = trig(stream_mode, a, z);
        double A = stream_amp * std::exp(-stream_rate * t);
        Polynomial q = Q();
        Polynomial q1 = q.derivative();
        double c0 = A * q(r) * tk.c;
        double cr = A * q1(r) * tk.c;
        double crr = A * q1.derivative()(r) * tk.c;
        double cz = -A * q(r) * tk.kappa * tk.s;
        double czz = -tk.kappa * tk.kappa * c0;
        double ct = -stream_rate * c0;
        double vr = v_r(t, r, z), vz = v_z(t, r, z);
        f += ct + vr * cr + vz * cz - vr / r * c0 - nu * (crr + cr / r - c0 / (r * r) + czz);
    }
    if (swirl_amp != 0.0) {
        Trig tm = trig(swirl_mode, a, z);
        double B = swirl_amp * std::exp(-swirl_rate * t);
        double u0 = B * U(r) * tm.c;
        double uz = -B * U(r) * tm.kappa * tm.s;
        f -= 2.0 * u0 * uz / (r * r * r);
    }
    return f;
}

ScalarField ManufacturedSolution::sample_u(const GridPtr& g, double t) const {
    return ScalarField::sample(g, [&](double r, double z) { return u(t, r, z); });
}

ScalarField ManufacturedSolution::sample_chi(const GridPtr& g, double t) const {
    return ScalarField::sample(g, [&](double r, double z) { return chi(t, r, z); });
}

ScalarField ManufacturedSolution::sample_psi(const GridPtr& g, double t) const {
    return ScalarField::sample(g, [&](double r, double z) { return psi(t, r, z); });
}

void ManufacturedSolution::check_compatible(const Grid& g) const {
    const double tol = 1e-10;
    Polynomial U1 = U.derivative();
    Polynomial q = Q();
    double us = 1.0, ss = 1.0;
    for (int i = 0; i <= 64; ++i) {
        double r = g.eps + (g.R - g.eps) * i / 64.0;
        us = std::max(us, std::abs(U(r)) + std::abs(U1(r)) * (g.R - g.eps));
        ss = std::max(ss, std::abs(r * r * S(r)) + std::abs(q(r)) * g.R * g.R);
    }
    auto fail = [&](const std::string& what) { throw ConfigError("manufactured solution '" + name + "': " + what); };
    if (swirl_amp != 0.0) {
        if (std::abs(U1(g.R) - 2.0 * U(g.R) / g.R) > tol * us) fail("u_r = 2u/R violated at r = R");
        if (g.axis_mode()) {
            if (std::abs(U(0.0)) > tol * us) fail("u != 0 on the axis");
        } else if (std::abs(U1(g.eps)) > tol * us) {
            fail("u_r = 0 violated at r = eps");
        }
    }
    if (stream_amp != 0.0) {
        if (stream_mode != 0) {
            if (std::abs(g.R * g.R * S(g.R)) > tol * ss) fail("psi not constant in z at r = R");
            if (std::abs(g.eps * g.eps * S(g.eps)) > tol * ss) fail("psi not constant in z at r = eps");
        }
        if (std::abs(q(g.R)) > tol * ss) fail("chi != 0 at r = R");
        if (std::abs(q(g.eps)) > tol * ss) fail(g.axis_mode() ? "chi != 0 on the axis" : "chi != 0 at r = eps");
        if (std::abs(g.R * g.R * S(g.R)) > tol * ss || std::abs(g.eps * g.eps * S(g.eps)) > tol * ss)
            fail("wall values of psi must vanish (zero-flux gauge)");
    }
}

namespace {

// Scale p so that max |p| on [lo, hi] is 1.
Polynomial normalized(const Polynomial& p, double lo, double hi) {
    double m = 0.0;
    for (int i = 0; i <= 400; ++i) m = std::max(m, std::abs(p(lo + (hi - lo) * i / 400.0)));
    return m > 0.0 ? (1.0 / m) * p : p;
}

}  // namespace

ManufacturedSolution ManufacturedSolution::swirl_case(const Grid& g, double nu) {
    ManufacturedSolution m;
    m.name = "swirl";
    m.a = g.a;
    m.nu = nu;
    Polynomial r2({0.0, 0.0, 1.0});
    m.U = normalized(r2 * Polynomial::power_of_linear(g.eps, 2) * Polynomial::power_of_reflected(g.R, 2), g.eps, g.R);
    m.swirl_amp = 1.0;
    m.swirl_rate = 1.0;
    m.swirl_mode = 1;
    m.S = Polynomial::constant(0.0);
    return m;
}

ManufacturedSolution ManufacturedSolution::vorticity_case(const Grid& g, double nu) {
    ManufacturedSolution m;
    m.name = "vorticity";
    m.a = g.a;
    m.nu = nu;
    m.U = Polynomial::constant(0.0);
    Polynomial S = Polynomial::power_of_linear(g.eps, 3) * Polynomial::power_of_reflected(g.R, 3);
    m.S = S;
    m.stream_mode = 1;
    // scale so that chi* is O(1)
    Polynomial q = m.Q();
    double qm = 0.0;
    for (int i = 0; i <= 400; ++i) qm = std::max(qm, std::abs(q(g.eps + (g.R - g.eps) * i / 400.0)));
    m.S = (1.0 / qm) * S;
    m.stream_amp = 1.0;
    m.stream_rate = 1.0;
    return m;
}

ManufacturedSolution ManufacturedSolution::coupled_case(const Grid& g, double nu) {
    ManufacturedSolution m = vorticity_case(g, nu);
    ManufacturedSolution s = swirl_case(g, nu);
    m.name = "coupled";
    m.U = s.U;
    m.swirl_amp = s.swirl_amp;
    m.swirl_rate = s.swirl_rate;
    m.swirl_mode = s.swirl_mode;
    return m;
}

ManufacturedSolution ManufacturedSolution::rigid_rotation(const Grid& g, double nu, double omega) {
    ManufacturedSolution m;
    m.name = "rigid_rotation";
    m.a = g.a;
    m.nu = nu;
    m.U = Polynomial({0.0, 0.0, omega});
    m.swirl_amp = 1.0;
    m.swirl_rate = 0.0;
    m.swirl_mode = 0;
    m.S = Polynomial::constant(0.0);
    return m;
}

}  // namespace axisym
