#pragma once

#include "axisym/grid.hpp"

namespace axisym {

/// Central differences inside, second-order one-sided at r = eps and r = R.
ScalarField ddr(const ScalarField& f);
/// Periodic central difference in z.
ScalarField ddz(const ScalarField& f);
/// Periodic three-point second difference in z.
ScalarField d2dz2(const ScalarField& f);

/// (1/r)(r f_r)_r + f_zz. In axis mode the axis row uses 2 f_rr + f_zz, which needs
/// f even in r; a field with a nonzero slope on the axis throws DomainError.
ScalarField laplacian_axisym(const ScalarField& f);

/// f / r^k. On the axis (r = 0) the limit is taken from one-sided differences,
/// which assumes f vanishes there to order k.
ScalarField over_r(const ScalarField& f, int k = 1);
/// f * r^k.
ScalarField times_r(const ScalarField& f, int k = 1);

/// Smooth radial cut-off: 1 for r <= r_lo, 0 for r >= r_hi, C^3 across both joins.
struct Cutoff {
    double r_lo = 0.0;
    double r_hi = 0.0;
    bool vanishing = false;
    ScalarField profile, d1, d2, d3;

    /// zeta and its first three r-derivatives at radius r.
    static void evaluate(double r_lo, double r_hi, double r, double out[4]);
};

/// Throws ConfigError unless eps <= r_lo < r_hi <= R.
Cutoff build_cutoff(double r_lo, double r_hi, const GridPtr& g);
/// zeta == 0 everywhere.
Cutoff zero_cutoff(const GridPtr& g);

/// -v.grad u + nu (Delta u - 2 u_r / r) with the swirl wall conditions closed by ghost nodes.
/// Axis-mode axis row is zero (u is held at 0 there).
ScalarField swirl_rhs(const ScalarField& u, const ScalarField& v_r, const ScalarField& v_z, double nu);

/// Explicit part of the swirl update: -v.grad u, using u_r = 0 and u_r = 2u/R on the walls.
ScalarField swirl_advection(const ScalarField& u, const ScalarField& v_r, const ScalarField& v_z);

/// -v.grad chi + (v_r/r) chi + nu [(r (chi/r)_r)_r + chi_zz + 2 (chi/r)_r] + (u^2)_z / r^3.
/// Rows on which chi is held fixed (both walls) are zero.
ScalarField chi_rhs(const ScalarField& chi, const ScalarField& u, const ScalarField& v_r, const ScalarField& v_z,
                    double nu);

/// Explicit part of the chi update: everything in chi_rhs except the viscous bracket.
ScalarField chi_explicit(const ScalarField& chi, const ScalarField& u, const ScalarField& v_r,
                         const ScalarField& v_z);

}  // namespace axisym
