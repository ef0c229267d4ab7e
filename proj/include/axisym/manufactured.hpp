#pragma once

#include <string>
#include <vector>

#include "axisym/grid.hpp"

namespace axisym {

/// Real polynomial, coefficients in ascending powers.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> c) : c_(std::move(c)) {}
    static Polynomial constant(double v) { return Polynomial({v}); }
    /// (x - root)^m
    static Polynomial power_of_linear(double root, int m);
    /// (root - x)^m
    static Polynomial power_of_reflected(double root, int m);

    double operator()(double x) const;
    Polynomial derivative() const;
    Polynomial times_x() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& a);

private:
    std::vector<double> c_;
};

/// Separable manufactured solution of the swirl / vorticity system:
///   u*   = Bu e^{-lu t} U(r) cos(m pi z / a)
///   psi* = Bp e^{-lp t} r^2 S(r) cos(k pi z / a)
/// chi* follows from psi* through the stream equation; its radial factor
/// Q = 3S' + r S'' - kappa^2 r S is again a polynomial.
struct ManufacturedSolution {
    std::string name;
    double a = 1.0;
    double nu = 1.0;
    Polynomial U;
    double swirl_amp = 0.0, swirl_rate = 0.0;
    int swirl_mode = 0;
    Polynomial S;
    double stream_amp = 0.0, stream_rate = 0.0;
    int stream_mode = 0;

    double u(double t, double r, double z) const;
    double psi(double t, double r, double z) const;
    double chi(double t, double r, double z) const;
    double v_r(double t, double r, double z) const;
    double v_z(double t, double r, double z) const;
    /// Residuals of the two evolution equations for the exact fields (the added sources).
    double forcing_u(double t, double r, double z) const;
    double forcing_chi(double t, double r, double z) const;

    ScalarField sample_u(const GridPtr& g, double t) const;
    ScalarField sample_chi(const GridPtr& g, double t) const;
    ScalarField sample_psi(const GridPtr& g, double t) const;

    /// Throws ConfigError naming the first wall condition the exact fields violate on `g`.
    void check_compatible(const Grid& g) const;

    /// u* = e^{-t} r^2 (r-eps)^2 (R-r)^2 cos(pi z/a) scaled to O(1), psi* = 0.
    static ManufacturedSolution swirl_case(const Grid& g, double nu);
    /// u* = 0, psi* = e^{-t} r^2 (r-eps)^3 (R-r)^3 cos(pi z/a) scaled to O(1).
    static ManufacturedSolution vorticity_case(const Grid& g, double nu);
    /// Both of the above at once.
    static ManufacturedSolution coupled_case(const Grid& g, double nu);
    /// u* = omega r^2 (axis mode), steady, psi* = 0.
    static ManufacturedSolution rigid_rotation(const Grid& g, double nu, double omega);

private:
    Polynomial Q() const;
};

}  // namespace axisym
