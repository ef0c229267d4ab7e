#include "axisym/grid.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "axisym/errors.hpp"

namespace axisym {

double Grid::weight(int i) const {
    double w = r_nodes[i] * dr * dz;
    if (i == 0 || i == Nr) w *= 0.5;
    return w;
}

GridPtr build_grid(double eps, double R, double a, int Nr, int Nz) {
    if (!(eps >= 0.0)) throw ConfigError(fmt::format("grid: eps must be >= 0 (got {})", eps));
    if (!(eps < R)) throw ConfigError(fmt::format("grid: degenerate annulus (eps={} >= R={})", eps, R));
    if (!(a > 0.0)) throw ConfigError(fmt::format("grid: half-height a must be > 0 (got {})", a));
    if (Nr < 8) throw ConfigError(fmt::format("grid: Nr must be >= 8 (got {})", Nr));
    if (Nz < 8 || Nz % 2 != 0) throw ConfigError(fmt::format("grid: Nz must be even and >= 8 (got {})", Nz));

    auto g = std::make_shared<Grid>();
    g->eps = eps;
    g->R = R;
    g->a = a;
    g->Nr = Nr;
    g->Nz = Nz;
    g->dr = (R - eps) / Nr;
    g->dz = 2.0 * a / Nz;
    g->r_nodes.resize(Nr + 1);
    for (int i = 0; i <= Nr; ++i) g->r_nodes[i] = eps + i * g->dr;
    g->r_nodes[0] = eps;
    g->r_nodes[Nr] = R;
    g->z_nodes.resize(Nz);
    for (int j = 0; j < Nz; ++j) g->z_nodes[j] = -a + j * g->dz;
    return g;
}

GridPtr radial_prefix(const GridPtr& g, int n) {
    if (n < 2 || n > g->Nr) throw DomainError(fmt::format("radial_prefix: index {} out of range", n));
    auto s = std::make_shared<Grid>(*g);
    s->Nr = n;
    s->R = g->r_nodes[n];
    s->r_nodes.resize(n + 1);
    return s;
}

ScalarField::ScalarField(GridPtr g, double fill) : grid_(std::move(g)), nz_(grid_->Nz), v_(grid_->size(), fill) {}

ScalarField ScalarField::sample(GridPtr g, const std::function<double(double, double)>& f) {
    ScalarField out(std::move(g));
    const Grid& gr = out.grid();
    for (int i = 0; i < gr.nr(); ++i)
        for (int j = 0; j < gr.Nz; ++j) out(i, j) = f(gr.r(i), gr.z(j));
    return out;
}

void require_same_grid(const ScalarField& a, const ScalarField& b) {
    if (a.empty() || b.empty()) throw DomainError("field operation on an empty field");
    if (a.grid_ptr() == b.grid_ptr()) return;
    const Grid& x = a.grid();
    const Grid& y = b.grid();
    if (x.eps != y.eps || x.R != y.R || x.a != y.a || x.Nr != y.Nr || x.Nz != y.Nz)
        throw DomainError("field operation on mismatched grids");
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    require_same_grid(*this, o);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    require_same_grid(*this, o);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(const ScalarField& o) {
    require_same_grid(*this, o);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] *= o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

bool ScalarField::all_finite() const {
    return std::all_of(v_.begin(), v_.end(), [](double x) { return std::isfinite(x); });
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }
ScalarField operator*(ScalarField a, double s) { return a *= s; }

ScalarField map(const ScalarField& f, const std::function<double(double)>& op) {
    ScalarField out = f;
    for (double& x : out.values()) x = op(x);
    return out;
}

double integrate(const ScalarField& f) {
    if (f.empty()) throw DomainError("integrate: empty field");
    const Grid& g = f.grid();
    double total = 0.0;
    for (int i = 0; i < g.nr(); ++i) {
        double w = g.weight(i);
        if (w == 0.0) continue;
        const double* row = f.row(i);
        double s = 0.0;
        for (int j = 0; j < g.Nz; ++j) s += row[j];
        total += w * s;
    }
    return total;
}

double integrate_ring(const ScalarField& f, int i) {
    const Grid& g = f.grid();
    const double* row = f.row(i);
    double s = 0.0;
    for (int j = 0; j < g.Nz; ++j) s += row[j];
    return s * g.dz;
}

}  // namespace axisym
