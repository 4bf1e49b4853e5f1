#pragma once

#include <cstddef>
#include <vector>

namespace epur {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton-refined from the
/// Chebyshev initial guess. Nodes come out symmetric and ascending.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int order);

    /// Rescale to [-half_range, half_range].
    GaussLegendre scaled(double half_range) const;
};

} // namespace epur
