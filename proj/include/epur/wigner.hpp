#pragma once

#include "epur/fock.hpp"
#include "epur/grid.hpp"

#include <vector>

namespace epur {

/// Sampled Wigner function, x-major storage: value(ix, jp) = values[ix*np+jp].
/// May be negative. Normalized to unit double integral on construction
/// (rejected if the raw integral misses 1 by more than 1e-5).
struct WignerGrid {
    Grid1D xgrid;
    Grid1D pgrid;
    std::vector<double> values;

    double value(int ix, int jp) const { return values[ix * pgrid.npts + jp]; }
    double integral() const;
    double min_value() const;

    /// Trapezoid-marginalized slice over p (length xgrid.npts, unnormalized).
    std::vector<double> marginalize_over_p() const;
    std::vector<double> marginalize_over_x() const;
};

/// W(x,p) = (2 pi hbar)^-1 Int e^{-ipy/hbar} <x+y/2|rho|x-y/2> dy, the
/// y-integral done with one fixed-order Gauss-Legendre rule over the grid
/// support shared by every (x,p) point. gl_order = 0 picks an order that
/// resolves the fastest phase on the grid.
WignerGrid wigner(const FockDensity& rho, const Grid1D& xgrid,
                  const Grid1D& pgrid, int gl_order = 0);
WignerGrid wigner(const FockVector& psi, const Grid1D& xgrid,
                  const Grid1D& pgrid, int gl_order = 0);

/// Minimum sampled value; gates joint-entropy evaluation.
double min_wigner(const WignerGrid& w);

} // namespace epur
