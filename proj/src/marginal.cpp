#include "epur/marginal.hpp"

#include "epur/hermite.hpp"
#include "epur/kernels.hpp"

#include <cmath>

namespace epur {

namespace {

constexpr double kNegClamp = -1e-12;
constexpr double kNormGate = 1e-4;

std::vector<double> clamp_and_normalize(const Grid1D& grid,
                                        std::vector<double> v) {
    for (double& x : v) {
        if (x < 0.0) {
            if (x < kNegClamp)
                throw grid_error("Density1D: negative value below clamp threshold",
                                 grid.hi);
            x = 0.0;
        }
    }
    const auto w = grid.trapezoid_weights();
    double integral = 0.0;
    for (int i = 0; i < grid.npts; ++i) integral += w[i] * v[i];
    if (std::abs(integral - 1.0) > kNormGate)
        throw grid_error("Density1D: trapezoid integral " + std::to_string(integral) +
                             " differs from 1 beyond " + std::to_string(kNormGate) +
                             "; grid inadequate for this state",
                         grid.hi);
    for (double& x : v) x /= integral;
    return v;
}

/// (-i)^m rho_mn (+i)^n — conjugation by the Fourier-eigenfunction phases.
Eigen::MatrixXcd momentum_phase_conjugate(const Eigen::MatrixXcd& rho) {
    const auto dim = rho.rows();
    Eigen::MatrixXcd out(dim, dim);
    static const Complex phase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}}; // (-i)^k
    for (Eigen::Index m = 0; m < dim; ++m)
        for (Eigen::Index n = 0; n < dim; ++n)
            out(m, n) = phase[m % 4] * rho(m, n) * std::conj(phase[n % 4]);
    return out;
}

Eigen::VectorXcd momentum_phase_apply(const Eigen::VectorXcd& c) {
    static const Complex phase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    Eigen::VectorXcd out(c.size());
    for (Eigen::Index n = 0; n < c.size(); ++n) out(n) = phase[n % 4] * c(n);
    return out;
}

/// Point-major basis block: row k holds (phi_0(x_k), ..., phi_neff(x_k)).
RowMatrixXd point_major_basis(const Grid1D& grid, int neff, double hbar) {
    const RowMatrixXd basis = hermite_basis(grid, neff, hbar);
    RowMatrixXd pm(grid.npts, neff + 1);
    for (int i = 0; i < grid.npts; ++i)
        for (int n = 0; n <= neff; ++n) pm(i, n) = basis(n, i);
    return pm;
}

Density1D density_marginal(const Eigen::MatrixXcd& rho, double hbar,
                           const Grid1D& grid, int neff) {
    const auto& k = kernels::active();
    const RowMatrixXd pm = point_major_basis(grid, neff, hbar);
    // Imaginary parts cancel pairwise for Hermitian rho.
    RowMatrixXd re(neff + 1, neff + 1);
    for (int m = 0; m <= neff; ++m)
        for (int n = 0; n <= neff; ++n) re(m, n) = rho(m, n).real();
    std::vector<double> vals(grid.npts);
    const std::size_t dim = neff + 1;
    for (int i = 0; i < grid.npts; ++i)
        vals[i] = k.quad_form(re.data(), pm.row(i).data(), dim, dim);
    return Density1D(grid, std::move(vals));
}

Density1D pure_marginal(const Eigen::VectorXcd& c, double hbar,
                        const Grid1D& grid, int neff) {
    const auto& k = kernels::active();
    const RowMatrixXd pm = point_major_basis(grid, neff, hbar);
    std::vector<double> cre(neff + 1), cim(neff + 1);
    for (int n = 0; n <= neff; ++n) {
        cre[n] = c(n).real();
        cim[n] = c(n).imag();
    }
    const int npts = grid.npts;
    std::vector<double> yre(npts), yim(npts), vals(npts);
    const std::size_t dim = neff + 1;
    for (int i = 0; i < npts; ++i) {
        yre[i] = k.dot(pm.row(i).data(), cre.data(), dim);
        yim[i] = k.dot(pm.row(i).data(), cim.data(), dim);
    }
    k.abs2(vals.data(), yre.data(), yim.data(), npts);
    return Density1D(grid, std::move(vals));
}

} // namespace

Density1D::Density1D(Grid1D g, std::vector<double> v) : grid(g) {
    if (static_cast<int>(v.size()) != g.npts)
        throw std::invalid_argument("Density1D: value count does not match grid");
    values = clamp_and_normalize(grid, std::move(v));
}

double Density1D::integral() const {
    const auto w = grid.trapezoid_weights();
    double acc = 0.0;
    for (int i = 0; i < grid.npts; ++i) acc += w[i] * values[i];
    return acc;
}

double Density1D::mean() const {
    const auto w = grid.trapezoid_weights();
    double acc = 0.0;
    for (int i = 0; i < grid.npts; ++i) acc += w[i] * values[i] * grid.point(i);
    return acc;
}

double Density1D::variance() const {
    const double mu = mean();
    const auto w = grid.trapezoid_weights();
    double acc = 0.0;
    for (int i = 0; i < grid.npts; ++i) {
        const double d = grid.point(i) - mu;
        acc += w[i] * values[i] * d * d;
    }
    return acc;
}

Density1D marginal_x(const FockDensity& rho, const Grid1D& grid) {
    return density_marginal(rho.matrix, rho.hbar, grid, rho.top_occupied(0.0));
}

Density1D marginal_x(const FockVector& psi, const Grid1D& grid) {
    return pure_marginal(psi.amplitudes, psi.hbar, grid, psi.top_occupied(0.0));
}

Density1D marginal_p(const FockDensity& rho, const Grid1D& grid) {
    return density_marginal(momentum_phase_conjugate(rho.matrix), rho.hbar, grid,
                            rho.top_occupied(0.0));
}

Density1D marginal_p(const FockVector& psi, const Grid1D& grid) {
    return pure_marginal(momentum_phase_apply(psi.amplitudes), psi.hbar, grid,
                         psi.top_occupied(0.0));
}

} // namespace epur
