#include "axisym/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "axisym/errors.hpp"
#include "axisym/fields.hpp"
#include "axisym/stencil.hpp"

namespace axisym {

namespace {

double stencil_norm(const RadialStencil& st, double dz) {
    double m = 1.0;
    for (int i = 0; i < st.n; ++i)
        m = std::max(m, std::abs(st.lower[i]) + std::abs(st.diag[i]) + std::abs(st.upper[i]) +
                            4.0 * std::abs(st.zz[i]) / (dz * dz));
    return m;
}

// Relative residual of (L x = b) with fixed rows as identity.
void check_residual(const RadialStencil& st, const ScalarField& x, const ScalarField& b, const char* what) {
    ScalarField res = apply(st, x, 1.0) - b;
    double scale = b.max_abs() + stencil_norm(st, x.grid().dz) * x.max_abs();
    if (!x.all_finite() || (scale > 0.0 && res.max_abs() > 1e-10 * scale))
        throw GaugeError(fmt::format("{}: residual {:.3e} exceeds tolerance", what, res.max_abs() / scale));
}

}  // namespace

ScalarField solve_stream(const ScalarField& chi, double psi_inner, double psi_outer) {
    const Grid& g = chi.grid();
    RadialStencil st = stream_stencil(g);
    ScalarField rhs = chi;
    for (int j = 0; j < g.Nz; ++j) {
        rhs(0, j) = psi_inner;
        rhs(g.Nr, j) = psi_outer;
    }
    ScalarField psi = modal_solver(g.nr(), g.Nz).solve(st, 0.0, 1.0, rhs);
    check_residual(st, psi, rhs, "solve_stream");
    return psi;
}

ScalarField apply_stream_operator(const ScalarField& psi) { return apply(stream_stencil(psi.grid()), psi, 1.0); }

int eta_outer_index(const Grid& g, double r_hi) {
    if (!(r_hi > g.eps) || r_hi > g.R * (1.0 + 1e-12))
        throw ConfigError(fmt::format("eta problem: r_hi={} must lie in (eps, R]", r_hi));
    int n = static_cast<int>(std::lround((r_hi - g.eps) / g.dr));
    return std::clamp(n, 2, g.Nr);
}

ScalarField restrict_rows(const ScalarField& f, const GridPtr& sub) {
    ScalarField out(sub);
    std::copy(f.values().begin(), f.values().begin() + static_cast<std::ptrdiff_t>(sub->size()), out.values().begin());
    return out;
}

ScalarField extend_rows(const ScalarField& f, const GridPtr& full) {
    ScalarField out(full);
    std::copy(f.values().begin(), f.values().end(), out.values().begin());
    return out;
}

ScalarField solve_eta(const ScalarField& theta, double r_hi) {
    const Grid& g = theta.grid();
    int n = eta_outer_index(g, r_hi);
    GridPtr sub = radial_prefix(theta.grid_ptr(), n);
    RadialStencil st = eta_stencil(*sub);
    ScalarField rhs = restrict_rows(theta, sub);
    for (int j = 0; j < g.Nz; ++j) rhs(n, j) = 0.0;
    ScalarField eta = modal_solver(sub->nr(), sub->Nz).solve(st, 0.0, 1.0, rhs);
    check_residual(st, eta, rhs, "solve_eta");
    return extend_rows(eta, theta.grid_ptr());
}

ScalarField apply_eta_operator(const ScalarField& eta, double r_hi) {
    int n = eta_outer_index(eta.grid(), r_hi);
    GridPtr sub = radial_prefix(eta.grid_ptr(), n);
    return extend_rows(apply(eta_stencil(*sub), restrict_rows(eta, sub), 1.0), eta.grid_ptr());
}

std::pair<ScalarField, ScalarField> recover_velocity(const ScalarField& psi) {
    const Grid& g = psi.grid();
    ScalarField vr = ddz(psi);
    ScalarField vz = ddr(psi);
    for (int i = 0; i < g.nr(); ++i) {
        double r = g.r(i);
        if (r == 0.0) continue;
        for (int j = 0; j < g.Nz; ++j) {
            vr(i, j) /= r;
            vz(i, j) = -vz(i, j) / r;
        }
    }
    if (g.axis_mode()) {
        const double h2 = g.dr * g.dr;
        for (int j = 0; j < g.Nz; ++j) {
            // psi = psi_0 + c r^2 + d r^4 near the axis; v_z(0) = -2c
            double c = (16.0 * (psi(1, j) - psi(0, j)) - (psi(2, j) - psi(0, j))) / (12.0 * h2);
            vr(0, j) = 0.0;
            vz(0, j) = -2.0 * c;
        }
    }
    return {std::move(vr), std::move(vz)};
}

}  // namespace axisym
