#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace axisym {

/// Uniform node-centred mesh on eps <= r <= R, z periodic on [-a, a).
///
/// Radial nodes r_i = eps + i*dr for i = 0..Nr (both walls included).
/// Axial nodes z_j = -a + j*dz for j = 0..Nz-1; node Nz is node 0.
struct Grid {
    double eps = 0.0;
    double R = 1.0;
    double a = 1.0;
    int Nr = 0;
    int Nz = 0;
    double dr = 0.0;
    double dz = 0.0;
    std::vector<double> r_nodes;
    std::vector<double> z_nodes;

    int nr() const { return Nr + 1; }
    std::size_t size() const { return static_cast<std::size_t>(nr()) * Nz; }
    double r(int i) const { return r_nodes[i]; }
    double z(int j) const { return z_nodes[j]; }
    bool axis_mode() const { return eps == 0.0; }
    /// Quadrature weight of node (i, .) in r: trapezoid times r_i times dz.
    double weight(int i) const;
    /// Total pi-free measure (R^2 - eps^2)/2 * 2a.
    double volume() const { return 0.5 * (R * R - eps * eps) * 2.0 * a; }
};

using GridPtr = std::shared_ptr<const Grid>;

/// Throws ConfigError on eps >= R ("degenerate annulus"), a <= 0, small or odd counts.
GridPtr build_grid(double eps, double R, double a, int Nr, int Nz);

/// Same z layout, radial nodes 0..n of `g` only.
GridPtr radial_prefix(const GridPtr& g, int n);

/// Values on all nodes of a grid, row-major with the r index outer.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(GridPtr g, double fill = 0.0);
    static ScalarField sample(GridPtr g, const std::function<double(double, double)>& f);

    const GridPtr& grid_ptr() const { return grid_; }
    const Grid& grid() const { return *grid_; }
    bool empty() const { return !grid_; }

    double& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * nz_ + j]; }
    double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * nz_ + j]; }
    /// Periodic access in z.
    double at_wrap(int i, int j) const { return (*this)(i, ((j % nz_) + nz_) % nz_); }

    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }
    double* row(int i) { return v_.data() + static_cast<std::size_t>(i) * nz_; }
    const double* row(int i) const { return v_.data() + static_cast<std::size_t>(i) * nz_; }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(const ScalarField& o);
    ScalarField& operator*=(double s);

    double max_abs() const;
    bool all_finite() const;

private:
    GridPtr grid_;
    int nz_ = 0;
    std::vector<double> v_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
ScalarField operator*(ScalarField a, double s);

/// Pointwise transform.
ScalarField map(const ScalarField& f, const std::function<double(double)>& op);

/// Throws DomainError if the two fields live on different grids.
void require_same_grid(const ScalarField& a, const ScalarField& b);

/// Trapezoid in r (weight r), rectangle rule in z: approximates the integral of f r dr dz.
double integrate(const ScalarField& f);

/// Integral of f at radial node i over z (the boundary integrals  f|_{r=r_i} dz).
double integrate_ring(const ScalarField& f, int i);

}  // namespace axisym
