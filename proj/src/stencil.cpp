#include "axisym/stencil.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include <fftw3.h>
#include <lapacke.h>
#include <fmt/format.h>

#include "axisym/errors.hpp"

namespace axisym {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

int initial_threads() {
    if (const char* env = std::getenv("AXISYM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

int g_threads = initial_threads();

}  // namespace

void set_num_threads(int n) { g_threads = n > 0 ? n : 1; }
int num_threads() { return g_threads; }

double dzz_symbol(int k, int Nz, double dz) {
    double s = std::sin(M_PI * k / Nz);
    return -4.0 * s * s / (dz * dz);
}

ScalarField apply(const RadialStencil& st, const ScalarField& f, double fixed_value_scale) {
    const Grid& g = f.grid();
    if (st.n != g.nr()) throw DomainError("stencil/field row count mismatch");
    ScalarField out(f.grid_ptr());
    const int nz = g.Nz;
    const double idz2 = 1.0 / (g.dz * g.dz);
    for (int i = 0; i < st.n; ++i) {
        if (st.fixed[i]) {
            for (int j = 0; j < nz; ++j) out(i, j) = fixed_value_scale * f(i, j);
            continue;
        }
        for (int j = 0; j < nz; ++j) {
            double v = st.diag[i] * f(i, j);
            if (i > 0) v += st.lower[i] * f(i - 1, j);
            if (i + 1 < st.n) v += st.upper[i] * f(i + 1, j);
            if (st.zz[i] != 0.0) {
                int jp = j + 1 == nz ? 0 : j + 1;
                int jm = j == 0 ? nz - 1 : j - 1;
                v += st.zz[i] * (f(i, jp) - 2.0 * f(i, j) + f(i, jm)) * idz2;
            }
            out(i, j) = v;
        }
    }
    return out;
}

RadialStencil swirl_diffusion_stencil(const Grid& g) {
    const int n = g.nr();
    const double h = g.dr, h2 = h * h;
    RadialStencil st(n);
    for (int i = 0; i < n; ++i) {
        double r = g.r(i);
        st.zz[i] = 1.0;
        st.diag[i] = -2.0 / h2;
        if (r > 0.0) {
            st.lower[i] = 1.0 / h2 + 1.0 / (2.0 * r * h);
            st.upper[i] = 1.0 / h2 - 1.0 / (2.0 * r * h);
        }
    }
    if (g.axis_mode()) {
        st.fixed[0] = 1;
    } else {
        // ghost u_{-1} = u_1 (u_r = 0); the -u_r/r term vanishes on the wall
        st.lower[0] = 0.0;
        st.upper[0] = 2.0 / h2;
    }
    // ghost u_{N+1} = u_{N-1} + (4h/R) u_N from u_r = 2u/R
    const int N = n - 1;
    double up = st.upper[N];
    st.lower[N] += up;
    st.diag[N] += up * 4.0 * h / g.R;
    st.upper[N] = 0.0;
    return st;
}

RadialStencil vorticity_diffusion_stencil(const Grid& g) {
    const int n = g.nr();
    const double h = g.dr, h2 = h * h;
    RadialStencil st(n);
    for (int i = 1; i + 1 < n; ++i) {
        double r = g.r(i);
        st.lower[i] = 1.0 / h2 - 1.0 / (2.0 * r * h);
        st.upper[i] = 1.0 / h2 + 1.0 / (2.0 * r * h);
        st.diag[i] = -2.0 / h2 - 1.0 / (r * r);
        st.zz[i] = 1.0;
    }
    st.fixed[0] = st.fixed[n - 1] = 1;
    return st;
}

RadialStencil stream_stencil(const Grid& g) {
    const int n = g.nr();
    const double h = g.dr, h2 = h * h;
    RadialStencil st(n);
    for (int i = 1; i + 1 < n; ++i) {
        double rm = g.r(i) - 0.5 * h, rp = g.r(i) + 0.5 * h;
        st.lower[i] = 1.0 / (rm * h2);
        st.upper[i] = 1.0 / (rp * h2);
        st.diag[i] = -(st.lower[i] + st.upper[i]);
        st.zz[i] = 1.0 / g.r(i);
    }
    st.fixed[0] = st.fixed[n - 1] = 1;
    return st;
}

RadialStencil eta_stencil(const Grid& g) {
    const int n = g.nr();
    const double h = g.dr, h2 = h * h;
    RadialStencil st(n);
    for (int i = 1; i + 1 < n; ++i) {
        double r = g.r(i);
        st.lower[i] = 1.0 / h2 - 1.5 / (r * h);
        st.upper[i] = 1.0 / h2 + 1.5 / (r * h);
        st.diag[i] = -2.0 / h2;
        st.zz[i] = 1.0;
    }
    // eta_r = 0 at the inner edge; on the axis eta_rr + 3 eta_r/r -> 4 eta_rr
    double c = g.axis_mode() ? 8.0 / h2 : 2.0 / h2;
    st.upper[0] = c;
    st.diag[0] = -c;
    st.zz[0] = 1.0;
    st.fixed[n - 1] = 1;
    return st;
}

RadialStencil gradient_form_stencil(const Grid& g) {
    const int n = g.nr();
    const double h = g.dr, h2 = h * h;
    RadialStencil st(n);
    for (int i = 1; i + 1 < n; ++i) {
        double r = g.r(i);
        st.lower[i] = (r - 0.5 * h) / (r * h2);
        st.upper[i] = (r + 0.5 * h) / (r * h2);
        st.diag[i] = -(st.lower[i] + st.upper[i]);
        st.zz[i] = 1.0;
    }
    // half cell at the inner edge; on the axis its measure is h^2/8 rather than r_0 h/2
    double cell = g.axis_mode() ? h2 / 8.0 : 0.5 * g.r(0) * h;
    st.upper[0] = (g.r(0) + 0.5 * h) / h / cell;
    st.diag[0] = -st.upper[0];
    st.zz[0] = 1.0;
    st.fixed[n - 1] = 1;
    return st;
}

ModalSolver::ModalSolver(int nrows, int Nz) : n_(nrows), nz_(Nz), nk_(Nz / 2 + 1) {
    real_ = fftw_alloc_real(static_cast<std::size_t>(n_) * nz_);
    spec_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(static_cast<std::size_t>(n_) * nk_));
    std::lock_guard<std::mutex> lock(planner_mutex());
    int len[1] = {nz_};
    fwd_ = fftw_plan_many_dft_r2c(1, len, n_, real_, nullptr, 1, nz_, reinterpret_cast<fftw_complex*>(spec_),
                                  nullptr, 1, nk_, FFTW_ESTIMATE);
    bwd_ = fftw_plan_many_dft_c2r(1, len, n_, reinterpret_cast<fftw_complex*>(spec_), nullptr, 1, nk_, real_,
                                  nullptr, 1, nz_, FFTW_ESTIMATE);
}

ModalSolver::~ModalSolver() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    fftw_free(real_);
    fftw_free(spec_);
}

ScalarField ModalSolver::solve(const RadialStencil& st, double alpha, double beta, const ScalarField& rhs) {
    const Grid& g = rhs.grid();
    if (g.nr() != n_ || g.Nz != nz_ || st.n != n_) throw DomainError("modal solve: shape mismatch");
    std::copy(rhs.values().begin(), rhs.values().end(), real_);
    fftw_execute(static_cast<fftw_plan>(fwd_));

    auto solve_modes = [&](int k_begin, int k_end) -> int {
        std::vector<double> dl(n_ > 1 ? n_ - 1 : 1), d(n_), du(n_ > 1 ? n_ - 1 : 1), b(2 * n_);
        for (int k = k_begin; k < k_end; ++k) {
            const double lam = dzz_symbol(k, nz_, g.dz);
            for (int i = 0; i < n_; ++i) {
                if (st.fixed[i]) {
                    d[i] = 1.0;
                    if (i > 0) dl[i - 1] = 0.0;
                    if (i + 1 < n_) du[i] = 0.0;
                } else {
                    d[i] = alpha + beta * (st.diag[i] + st.zz[i] * lam);
                    if (i > 0) dl[i - 1] = beta * st.lower[i];
                    if (i + 1 < n_) du[i] = beta * st.upper[i];
                }
                const std::complex<double> c = spec_[static_cast<std::size_t>(i) * nk_ + k];
                b[i] = c.real();
                b[n_ + i] = c.imag();
            }
            lapack_int info = LAPACKE_dgtsv(LAPACK_COL_MAJOR, n_, 2, dl.data(), d.data(), du.data(), b.data(), n_);
            if (info != 0) return k + 1;
            for (int i = 0; i < n_; ++i) spec_[static_cast<std::size_t>(i) * nk_ + k] = {b[i], b[n_ + i]};
        }
        return 0;
    };

    int failed = 0;
    const int workers = std::min(num_threads(), nk_);
    if (workers <= 1) {
        failed = solve_modes(0, nk_);
    } else {
        std::vector<int> status(workers, 0);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            int kb = nk_ * w / workers, ke = nk_ * (w + 1) / workers;
            pool.emplace_back([&, w, kb, ke] { status[w] = solve_modes(kb, ke); });
        }
        for (auto& t : pool) t.join();
        for (int s : status)
            if (s != 0 && failed == 0) failed = s;
    }
    if (failed != 0) throw GaugeError(fmt::format("banded solve failed on Fourier mode {}", failed - 1));

    fftw_execute(static_cast<fftw_plan>(bwd_));
    ScalarField out(rhs.grid_ptr());
    const double scale = 1.0 / nz_;
    auto& v = out.values();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = real_[k] * scale;
    return out;
}

ModalSolver& modal_solver(int nrows, int Nz) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<ModalSolver>> cache;
    auto& slot = cache[{nrows, Nz}];
    if (!slot) slot = std::make_unique<ModalSolver>(nrows, Nz);
    return *slot;
}

}  // namespace axisym
