#include "epur/hermite.hpp"

#include "epur/kernels.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace epur {

RowMatrixXd hermite_basis(const Grid1D& grid, int nmax, double hbar) {
    if (nmax < 0) throw std::invalid_argument("hermite_basis: nmax must be >= 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("hermite_basis: hbar must be positive");
    const double turning = std::sqrt(hbar * (2.0 * nmax + 1.0));
    const double margin = 2.0 * std::sqrt(hbar);
    if (-grid.lo < turning + margin || grid.hi < turning + margin) {
        const double recommended = default_extent(nmax, hbar);
        throw grid_error(
            "hermite_basis: grid does not reach the classical turning point of |" +
                std::to_string(nmax) + ">; recommended half-extent " +
                std::to_string(recommended),
            recommended);
    }

    const auto& k = kernels::active();
    const int npts = grid.npts;
    RowMatrixXd basis(nmax + 1, npts);
    const double sqih = 1.0 / std::sqrt(hbar);
    const double pref = std::pow(M_PI * hbar, -0.25);
    std::vector<double> u(npts);
    for (int i = 0; i < npts; ++i) u[i] = grid.point(i) * sqih;
    for (int i = 0; i < npts; ++i)
        basis(0, i) = pref * std::exp(-0.5 * u[i] * u[i]);
    if (nmax >= 1)
        k.recurrence_step(basis.row(1).data(), u.data(), basis.row(0).data(),
                          basis.row(0).data(), std::sqrt(2.0), 0.0, npts);
    for (int n = 1; n < nmax; ++n) {
        const double alpha = std::sqrt(2.0 / (n + 1.0));
        const double beta = std::sqrt(n / (n + 1.0));
        k.recurrence_step(basis.row(n + 1).data(), u.data(),
                          basis.row(n).data(), basis.row(n - 1).data(), alpha,
                          beta, npts);
    }
    return basis;
}

void hermite_point(double x, int nmax, double hbar, double* out) {
    const double u = x / std::sqrt(hbar);
    out[0] = std::pow(M_PI * hbar, -0.25) * std::exp(-0.5 * u * u);
    if (nmax >= 1) out[1] = std::sqrt(2.0) * u * out[0];
    for (int n = 1; n < nmax; ++n)
        out[n + 1] = std::sqrt(2.0 / (n + 1.0)) * u * out[n] -
                     std::sqrt(n / (n + 1.0)) * out[n - 1];
}

} // namespace epur
