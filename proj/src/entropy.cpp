#include "epur/entropy.hpp"

#include "epur/kernels.hpp"

#include <cmath>

namespace epur {

double differential_entropy(const Density1D& d) {
    if (std::abs(d.integral() - 1.0) > 1e-6)
        throw std::invalid_argument("differential_entropy: density not normalized");
    const auto w = d.grid.trapezoid_weights();
    return -kernels::active().weighted_plogp(w.data(), d.values.data(),
                                             d.values.size());
}

JointEntropyResult joint_entropy_detailed(const WignerGrid& w, double neg_tol) {
    const double minv = w.min_value();
    if (minv < -neg_tol)
        throw wigner_negative_error(
            "joint_entropy: Wigner function reaches " + std::to_string(minv) +
                ", below the negativity gate " + std::to_string(-neg_tol) +
                "; joint-entropy relations do not apply to this state",
            minv);
    const auto& k = kernels::active();
    const auto wx = w.xgrid.trapezoid_weights();
    const auto wp = w.pgrid.trapezoid_weights();
    const int np = w.pgrid.npts;
    double plogp = 0.0;
    double clipped = 0.0;
    for (int i = 0; i < w.xgrid.npts; ++i) {
        const double* row = w.values.data() + static_cast<std::size_t>(i) * np;
        plogp += wx[i] * k.weighted_plogp(wp.data(), row, np);
        double row_clip = 0.0;
        for (int j = 0; j < np; ++j)
            if (row[j] <= kernels::kPlogpFloor) row_clip += wp[j] * row[j];
        clipped += wx[i] * row_clip;
    }
    return {-plogp, clipped, minv};
}

double joint_entropy(const WignerGrid& w, double neg_tol) {
    return joint_entropy_detailed(w, neg_tol).value;
}

double entropy_power(double h) { return std::exp(2.0 * h) / (2.0 * M_PI * M_E); }

double gaussian_entropy_1d(double variance) {
    if (!(variance > 0.0))
        throw std::invalid_argument("gaussian_entropy_1d: variance must be positive");
    return 0.5 * std::log(2.0 * M_PI * M_E * variance);
}

double nongaussianity(double h, double variance) {
    if (!(variance > 0.0))
        throw std::invalid_argument("nongaussianity: variance must be positive");
    const double d = 0.5 * std::log(variance / entropy_power(h));
    return std::max(d, -1e-9);
}

double mutual_information(double hx, double hp, double hxp) {
    return hx + hp - hxp;
}

} // namespace epur
