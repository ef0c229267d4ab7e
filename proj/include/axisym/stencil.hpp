#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "axisym/grid.hpp"

namespace axisym {

/// Three-point radial operator plus a z-second-difference term, row by row:
///   (L f)_{i,j} = lower_i f_{i-1,j} + diag_i f_{i,j} + upper_i f_{i+1,j} + zz_i (D_zz f)_{i,j}
/// where D_zz is the periodic three-point second difference. Rows flagged `fixed`
/// carry Dirichlet data and are excluded from the operator.
struct RadialStencil {
    int n = 0;
    std::vector<double> lower, diag, upper, zz;
    std::vector<char> fixed;

    explicit RadialStencil(int rows = 0)
        : n(rows), lower(rows, 0.0), diag(rows, 0.0), upper(rows, 0.0), zz(rows, 0.0), fixed(rows, 0) {}
};

/// L f on free rows; fixed rows get `fixed_value_scale * f` (0 gives a pure operator, 1 gives identity rows).
ScalarField apply(const RadialStencil& st, const ScalarField& f, double fixed_value_scale = 0.0);

/// u_rr - u_r/r + u_zz with the wall conditions of the swirl: u_r = 0 at r = eps (annulus),
/// u = 0 on the axis, u_r = 2u/R at r = R. Wall conditions enter through ghost nodes.
RadialStencil swirl_diffusion_stencil(const Grid& g);

/// chi_rr + chi_r/r - chi/r^2 + chi_zz with chi fixed on both walls.
RadialStencil vorticity_diffusion_stencil(const Grid& g);

/// (psi_r/r)_r + psi_zz/r in flux form, psi fixed on both walls.
RadialStencil stream_stencil(const Grid& g);

/// eta_rr + 3 eta_r/r + eta_zz, eta_r = 0 at the inner edge, eta fixed at the last row.
RadialStencil eta_stencil(const Grid& g);

/// Finite-volume (1/r)(r f_r)_r + f_zz, zero flux at the inner edge and f fixed at the last row.
/// Symmetric with respect to the trapezoid weights.
RadialStencil gradient_form_stencil(const Grid& g);

/// Eigenvalue of the periodic D_zz on Fourier mode k.
double dzz_symbol(int k, int Nz, double dz);

/// Fourier-in-z / tridiagonal-in-r solver for (alpha I + beta L) x = b on free rows
/// and x = b on fixed rows. One instance per thread.
class ModalSolver {
public:
    ModalSolver(int nrows, int Nz);
    ~ModalSolver();
    ModalSolver(const ModalSolver&) = delete;
    ModalSolver& operator=(const ModalSolver&) = delete;

    ScalarField solve(const RadialStencil& st, double alpha, double beta, const ScalarField& rhs);

private:
    int n_, nz_, nk_;
    double* real_ = nullptr;
    std::complex<double>* spec_ = nullptr;
    void* fwd_ = nullptr;
    void* bwd_ = nullptr;
};

/// Per-thread cached solver for the given shape.
ModalSolver& modal_solver(int nrows, int Nz);

/// Worker count used by the per-mode loops (defaults to AXISYM_THREADS or 1).
void set_num_threads(int n);
int num_threads();

}  // namespace axisym
