#pragma once

#include "epur/fock.hpp"

#include <Eigen/Dense>

namespace epur {

/// First moments plus the 2x2 covariance block (sigma_xp is the
/// symmetrized central cross moment).
struct CovarianceMatrix {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double sxx = 0.0;
    double spp = 0.0;
    double sxp = 0.0;
    double hbar = 1.0;

    double determinant() const { return sxx * spp - sxp * sxp; }

    Eigen::Matrix2d matrix() const {
        Eigen::Matrix2d g;
        g << sxx, sxp, sxp, spp;
        return g;
    }

    /// Schrodinger-Robertson physicality: |gamma| >= (hbar/2)^2 - tol.
    bool physical(double tol = 1e-9) const {
        return sxx > 0.0 && spp > 0.0 &&
               determinant() >= 0.25 * hbar * hbar - tol;
    }
};

/// Central moments from the exact ladder-operator matrix elements. With
/// check_truncation set, requires the top two stored levels to carry less
/// than 1e-10 occupation (throws truncation_error otherwise).
CovarianceMatrix covariance(const FockDensity& rho, bool check_truncation = true);
CovarianceMatrix covariance(const FockVector& psi, bool check_truncation = true);

/// Covariance of (x_theta, p_theta) = R(-theta) (x, p); determinant invariant.
CovarianceMatrix rotate_covariance(const CovarianceMatrix& g, double theta);

/// Angle whose rotation zeroes sigma_xp (principal axes).
double principal_angle(const CovarianceMatrix& g);

/// rho = sigma_xp / (sigma_x sigma_p), inside (-1, 1).
double correlation_coefficient(const CovarianceMatrix& g);

/// I_G = (1/2) ln(sxx spp / |gamma|) = -(1/2) ln(1 - rho^2) >= 0.
double gaussian_mutual_information(const CovarianceMatrix& g);

/// mu_G = (hbar/2) / sqrt(|gamma|) for one mode; throws on unphysical input.
double gaussian_purity(const CovarianceMatrix& g);

/// Closed-form covariance of the squeezed vacuum: M gamma_vac M^T with
/// M = R(theta) diag(e^-r, e^r) R(-theta), phi = 2 theta.
CovarianceMatrix squeezed_covariance(const GaussianUnitarySpec& spec,
                                     double hbar = 1.0);

} // namespace epur
