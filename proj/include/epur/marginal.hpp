#pragma once

#include "epur/fock.hpp"
#include "epur/grid.hpp"

#include <vector>

namespace epur {

/// Sampled probability density on a uniform grid. Construction clamps
/// rounding-level negatives (>= -1e-12) to zero, rejects anything more
/// negative, and renormalizes provided the raw trapezoid integral is
/// within 1e-4 of one.
struct Density1D {
    Grid1D grid;
    std::vector<double> values;

    Density1D(Grid1D g, std::vector<double> v);

    double integral() const;
    double mean() const;
    double variance() const;
};

/// Position marginal W_x(x) = sum_mn rho_mn phi_m(x) phi_n(x).
Density1D marginal_x(const FockDensity& rho, const Grid1D& grid);
Density1D marginal_x(const FockVector& psi, const Grid1D& grid);

/// Momentum marginal, via the Fourier-eigenfunction phase (-i)^n per Fock
/// index (no numerical transform involved).
Density1D marginal_p(const FockDensity& rho, const Grid1D& grid);
Density1D marginal_p(const FockVector& psi, const Grid1D& grid);

} // namespace epur
