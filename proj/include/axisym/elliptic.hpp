#pragma once

#include <utility>

#include "axisym/grid.hpp"

namespace axisym {

/// Solves (psi_z/r)_z + (psi_r/r)_r = chi with psi = psi_inner at r = eps and psi = psi_outer at r = R.
/// psi_inner - psi_outer is the net axial flux; equal values give zero flux.
ScalarField solve_stream(const ScalarField& chi, double psi_inner = 0.0, double psi_outer = 0.0);

/// Discrete stream operator on interior rows, identity on the wall rows (round-trip partner of solve_stream).
ScalarField apply_stream_operator(const ScalarField& psi);

/// Index of the radial node used as the outer edge r_hi (nearest node, at least 2).
int eta_outer_index(const Grid& g, double r_hi);

/// Solves eta_rr + 3 eta_r/r + eta_zz = theta on [eps, r_hi] with eta(r_hi) = 0, periodic in z and
/// eta_r = 0 at the inner edge (the natural condition of the weak form). Zero beyond r_hi.
ScalarField solve_eta(const ScalarField& theta, double r_hi);

/// Discrete eta operator on [eps, r_hi), identity on the r_hi row, zero beyond.
ScalarField apply_eta_operator(const ScalarField& eta, double r_hi);

/// v_r = psi_z / r, v_z = -psi_r / r. On the axis v_r = 0 and v_z = -psi_rr.
std::pair<ScalarField, ScalarField> recover_velocity(const ScalarField& psi);

/// Rows 0..n of f on the prefix grid `sub`.
ScalarField restrict_rows(const ScalarField& f, const GridPtr& sub);
/// f on a prefix grid, zero-extended to `full`.
ScalarField extend_rows(const ScalarField& f, const GridPtr& full);

}  // namespace axisym
