#pragma once

#include "epur/moments.hpp"

#include <Eigen/Dense>

namespace epur {

/// A = (X^2 spp + P^2 sxx - {X,P} sxp) / (2 |gamma|) built from the
/// truncated quadrature operators; Hermitian and PSD for physical gamma.
/// For gamma matching a squeezed vacuum, that state is an eigenvector with
/// eigenvalue 1.
Eigen::MatrixXcd a_operator(const CovarianceMatrix& g, int nmax);

struct EigencheckReport {
    double residual = 0.0;          // || A psi - psi ||_2
    double gamma_discrepancy = 0.0; // max |measured - closed-form| covariance entry
    int nmax = 0;
};

/// Builds the squeezed vacuum for `spec`, the A operator from its measured
/// covariance, and reports the eigenvector residual. With enforce_adequacy
/// off, runs below the truncation-adequacy cutoff for diagnostics instead
/// of throwing.
EigencheckReport eigencheck(const GaussianUnitarySpec& spec, int nmax,
                            double hbar = 1.0, bool enforce_adequacy = true);

} // namespace epur
