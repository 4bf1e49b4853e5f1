#include "epur/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace epur {

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
    nodes.resize(order);
    weights.resize(order);
    const int half = (order + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Chebyshev-style initial guess for the k-th root of P_order
        double t = std::cos(M_PI * (k + 0.75) / (order + 0.5));
        double deriv = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Bonnet recurrence for P_order(t) and P'_order(t)
            double p0 = 1.0, p1 = t;
            for (int n = 2; n <= order; ++n) {
                const double p2 = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            deriv = order * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / deriv;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - t * t) * deriv * deriv);
        nodes[k] = -t;
        nodes[order - 1 - k] = t;
        weights[k] = w;
        weights[order - 1 - k] = w;
    }
    if (order % 2 == 1) nodes[order / 2] = 0.0;
}

GaussLegendre GaussLegendre::scaled(double half_range) const {
    GaussLegendre out = *this;
    for (auto& x : out.nodes) x *= half_range;
    for (auto& w : out.weights) w *= half_range;
    return out;
}

} // namespace epur
