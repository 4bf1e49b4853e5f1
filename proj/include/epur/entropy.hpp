#pragma once

#include "epur/marginal.hpp"
#include "epur/wigner.hpp"

namespace epur {

/// -Int d ln d (nats) by trapezoid; entries below the p*ln(p) floor
/// contribute zero. Throws on densities whose integral drifted from 1.
double differential_entropy(const Density1D& d);

struct JointEntropyResult {
    double value = 0.0;        // nats
    double clipped_mass = 0.0; // integral over skipped (<= floor) cells
    double min_value = 0.0;    // most negative sampled W
};

/// -Int W ln W over the grid. Requires min W >= -neg_tol, else throws
/// wigner_negative_error; sub-floor cells (including small negatives inside
/// the gate) contribute zero and their mass is reported.
JointEntropyResult joint_entropy_detailed(const WignerGrid& w,
                                          double neg_tol = 1e-9);
double joint_entropy(const WignerGrid& w, double neg_tol = 1e-9);

/// Entropy power N = e^{2h} / (2 pi e), the variance of the Gaussian with
/// the same entropy.
double entropy_power(double h);

/// h of a Gaussian with the given variance: (1/2) ln(2 pi e v).
double gaussian_entropy_1d(double variance);

/// Relative-entropy non-Gaussianity D = h_G - h = (1/2) ln(variance / N(h)).
/// Nonnegative up to numerical noise; reported value is clamped at -1e-9.
double nongaussianity(double h, double variance);

/// I(x:p) = h(x) + h(p) - h(x,p).
double mutual_information(double hx, double hp, double hxp);

} // namespace epur
