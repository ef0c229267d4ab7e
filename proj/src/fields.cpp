#include "axisym/fields.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "axisym/errors.hpp"
#include "axisym/stencil.hpp"

namespace axisym {

namespace {

double one_sided_lo(const ScalarField& f, int j, double h) { return (-3.0 * f(0, j) + 4.0 * f(1, j) - f(2, j)) / (2.0 * h); }

}  // namespace

ScalarField ddr(const ScalarField& f) {
    const Grid& g = f.grid();
    const int N = g.Nr;
    const double h = g.dr;
    ScalarField out(f.grid_ptr());
    for (int j = 0; j < g.Nz; ++j) {
        out(0, j) = one_sided_lo(f, j, h);
        out(N, j) = (3.0 * f(N, j) - 4.0 * f(N - 1, j) + f(N - 2, j)) / (2.0 * h);
    }
    for (int i = 1; i < N; ++i)
        for (int j = 0; j < g.Nz; ++j) out(i, j) = (f(i + 1, j) - f(i - 1, j)) / (2.0 * h);
    return out;
}

ScalarField ddz(const ScalarField& f) {
    const Grid& g = f.grid();
    const int nz = g.Nz;
    ScalarField out(f.grid_ptr());
    for (int i = 0; i < g.nr(); ++i) {
        const double* row = f.row(i);
        double* o = out.row(i);
        for (int j = 0; j < nz; ++j) {
            int jp = j + 1 == nz ? 0 : j + 1;
            int jm = j == 0 ? nz - 1 : j - 1;
            o[j] = (row[jp] - row[jm]) / (2.0 * g.dz);
        }
    }
    return out;
}

ScalarField d2dz2(const ScalarField& f) {
    const Grid& g = f.grid();
    const int nz = g.Nz;
    ScalarField out(f.grid_ptr());
    const double idz2 = 1.0 / (g.dz * g.dz);
    for (int i = 0; i < g.nr(); ++i) {
        const double* row = f.row(i);
        double* o = out.row(i);
        for (int j = 0; j < nz; ++j) {
            int jp = j + 1 == nz ? 0 : j + 1;
            int jm = j == 0 ? nz - 1 : j - 1;
            o[j] = (row[jp] - 2.0 * row[j] + row[jm]) * idz2;
        }
    }
    return out;
}

ScalarField laplacian_axisym(const ScalarField& f) {
    const Grid& g = f.grid();
    const int N = g.Nr;
    const double h = g.dr, h2 = h * h;
    ScalarField out = d2dz2(f);
    ScalarField fr = ddr(f);
    for (int i = 1; i < N; ++i) {
        double r = g.r(i);
        for (int j = 0; j < g.Nz; ++j) out(i, j) += (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) / h2 + fr(i, j) / r;
    }
    for (int j = 0; j < g.Nz; ++j) {
        double frr_hi = (2.0 * f(N, j) - 5.0 * f(N - 1, j) + 4.0 * f(N - 2, j) - f(N - 3, j)) / h2;
        out(N, j) += frr_hi + fr(N, j) / g.R;
    }
    if (g.axis_mode()) {
        const double scale = f.max_abs();
        for (int j = 0; j < g.Nz; ++j) {
            if (std::abs(fr(0, j)) * g.R > 0.1 * scale && scale > 0.0)
                throw DomainError("laplacian_axisym: field is not even in r on the axis");
            out(0, j) += 4.0 * (f(1, j) - f(0, j)) / h2;
        }
    } else {
        for (int j = 0; j < g.Nz; ++j) {
            double frr_lo = (2.0 * f(0, j) - 5.0 * f(1, j) + 4.0 * f(2, j) - f(3, j)) / h2;
            out(0, j) += frr_lo + fr(0, j) / g.eps;
        }
    }
    return out;
}

ScalarField over_r(const ScalarField& f, int k) {
    const Grid& g = f.grid();
    ScalarField cur = f;
    for (int p = 0; p < k; ++p) {
        ScalarField next(f.grid_ptr());
        for (int i = 0; i < g.nr(); ++i) {
            double r = g.r(i);
            if (r > 0.0) {
                for (int j = 0; j < g.Nz; ++j) next(i, j) = cur(i, j) / r;
            } else {
                for (int j = 0; j < g.Nz; ++j) next(0, j) = one_sided_lo(cur, j, g.dr);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

ScalarField times_r(const ScalarField& f, int k) {
    const Grid& g = f.grid();
    ScalarField out = f;
    for (int i = 0; i < g.nr(); ++i) {
        double w = std::pow(g.r(i), k);
        for (int j = 0; j < g.Nz; ++j) out(i, j) *= w;
    }
    return out;
}

void Cutoff::evaluate(double r_lo, double r_hi, double r, double out[4]) {
    const double L = r_hi - r_lo;
    double s = (r - r_lo) / L;
    if (s <= 0.0) {
        out[0] = 1.0;
        out[1] = out[2] = out[3] = 0.0;
        return;
    }
    if (s >= 1.0) {
        out[0] = out[1] = out[2] = out[3] = 0.0;
        return;
    }
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    double P = s4 * (35.0 - 84.0 * s + 70.0 * s2 - 20.0 * s3);
    double P1 = 140.0 * s3 * std::pow(1.0 - s, 3);
    double P2 = 420.0 * s2 - 1680.0 * s3 + 2100.0 * s4 - 840.0 * s4 * s;
    double P3 = 840.0 * s - 5040.0 * s2 + 8400.0 * s3 - 4200.0 * s4;
    out[0] = 1.0 - P;
    out[1] = -P1 / L;
    out[2] = -P2 / (L * L);
    out[3] = -P3 / (L * L * L);
}

Cutoff build_cutoff(double r_lo, double r_hi, const GridPtr& g) {
    if (!(r_lo < r_hi)) throw ConfigError(fmt::format("cutoff: r_lo={} must be below r_hi={}", r_lo, r_hi));
    if (r_lo < g->eps || r_hi > g->R)
        throw ConfigError(fmt::format("cutoff: radii [{}, {}] must lie in [eps, R] = [{}, {}]", r_lo, r_hi, g->eps, g->R));
    Cutoff c;
    c.r_lo = r_lo;
    c.r_hi = r_hi;
    c.profile = ScalarField(g);
    c.d1 = ScalarField(g);
    c.d2 = ScalarField(g);
    c.d3 = ScalarField(g);
    for (int i = 0; i < g->nr(); ++i) {
        double v[4];
        Cutoff::evaluate(r_lo, r_hi, g->r(i), v);
        for (int j = 0; j < g->Nz; ++j) {
            c.profile(i, j) = v[0];
            c.d1(i, j) = v[1];
            c.d2(i, j) = v[2];
            c.d3(i, j) = v[3];
        }
    }
    return c;
}

Cutoff zero_cutoff(const GridPtr& g) {
    Cutoff c;
    c.r_lo = g->eps;
    c.r_hi = g->eps;
    c.vanishing = true;
    c.profile = c.d1 = c.d2 = c.d3 = ScalarField(g);
    return c;
}

ScalarField swirl_advection(const ScalarField& u, const ScalarField& v_r, const ScalarField& v_z) {
    require_same_grid(u, v_r);
    require_same_grid(u, v_z);
    const Grid& g = u.grid();
    ScalarField ur = ddr(u);
    ScalarField uz = ddz(u);
    const int N = g.Nr;
    for (int j = 0; j < g.Nz; ++j) {
        ur(0, j) = 0.0;
        ur(N, j) = 2.0 * u(N, j) / g.R;
    }
    ScalarField out(u.grid_ptr());
    for (int i = 0; i < g.nr(); ++i)
        for (int j = 0; j < g.Nz; ++j) out(i, j) = -(v_r(i, j) * ur(i, j) + v_z(i, j) * uz(i, j));
    if (g.axis_mode())
        for (int j = 0; j < g.Nz; ++j) out(0, j) = 0.0;
    return out;
}

ScalarField swirl_rhs(const ScalarField& u, const ScalarField& v_r, const ScalarField& v_z, double nu) {
    ScalarField out = swirl_advection(u, v_r, v_z);
    out += nu * apply(swirl_diffusion_stencil(u.grid()), u);
    return out;
}

ScalarField chi_explicit(const ScalarField& chi, const ScalarField& u, const ScalarField& v_r,
                         const ScalarField& v_z) {
    require_same_grid(chi, u);
    require_same_grid(chi, v_r);
    require_same_grid(chi, v_z);
    const Grid& g = chi.grid();
    ScalarField cr = ddr(chi);
    ScalarField cz = ddz(chi);
    ScalarField u2z = ddz(u * u);
    ScalarField out(chi.grid_ptr());
    for (int i = 1; i < g.Nr; ++i) {
        double r = g.r(i);
        double ir3 = 1.0 / (r * r * r);
        for (int j = 0; j < g.Nz; ++j)
            out(i, j) = -(v_r(i, j) * cr(i, j) + v_z(i, j) * cz(i, j)) + v_r(i, j) / r * chi(i, j) + u2z(i, j) * ir3;
    }
    return out;
}

ScalarField chi_rhs(const ScalarField& chi, const ScalarField& u, const ScalarField& v_r, const ScalarField& v_z,
                    double nu) {
    ScalarField out = chi_explicit(chi, u, v_r, v_z);
    out += nu * apply(vorticity_diffusion_stencil(chi.grid()), chi);
    return out;
}

}  // namespace axisym
