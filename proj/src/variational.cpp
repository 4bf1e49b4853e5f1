#include "epur/variational.hpp"

#include <cmath>

namespace epur {

Eigen::MatrixXcd a_operator(const CovarianceMatrix& g, int nmax) {
    const double det = g.determinant();
    if (!(det > 0.0))
        throw std::invalid_argument("a_operator: degenerate covariance");
    const auto [x, p] = quadrature_operators(nmax, g.hbar);
    const Eigen::MatrixXcd x2 = x.matrix * x.matrix;
    const Eigen::MatrixXcd p2 = p.matrix * p.matrix;
    const Eigen::MatrixXcd anti = x.matrix * p.matrix + p.matrix * x.matrix;
    return (x2 * g.spp + p2 * g.sxx - anti * g.sxp) / (2.0 * det);
}

EigencheckReport eigencheck(const GaussianUnitarySpec& spec, int nmax,
                            double hbar, bool enforce_adequacy) {
    FockVector psi = [&] {
        if (enforce_adequacy) return squeezed_vacuum(spec, nmax, hbar);
        // Diagnostics path: same construction with the adequacy gate lifted.
        const int safe = std::max(nmax, squeezed_vacuum_required_nmax(spec.r));
        FockVector full = squeezed_vacuum(spec, safe, hbar);
        Eigen::VectorXcd kept = full.amplitudes.head(nmax + 1);
        return FockVector(kept, hbar);
    }();
    const CovarianceMatrix measured = covariance(psi, enforce_adequacy);
    const CovarianceMatrix closed = squeezed_covariance(spec, hbar);
    const Eigen::MatrixXcd a = a_operator(measured, nmax);
    const Eigen::VectorXcd residual_vec = a * psi.amplitudes - psi.amplitudes;
    EigencheckReport rep;
    rep.residual = residual_vec.norm();
    rep.gamma_discrepancy = std::max(
        {std::abs(measured.sxx - closed.sxx), std::abs(measured.spp - closed.spp),
         std::abs(measured.sxp - closed.sxp)});
    rep.nmax = nmax;
    return rep;
}

} // namespace epur
