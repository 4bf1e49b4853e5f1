#pragma once

#include "epur/errors.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace epur {

/// Uniform 1D grid. Symmetric grids (lo == -hi) produce bitwise-symmetric
/// points: point(i) == -point(npts-1-i) exactly.
struct Grid1D {
    double lo = 0.0;
    double hi = 0.0;
    int npts = 0;

    Grid1D() = default;
    Grid1D(double lo_, double hi_, int npts_) : lo(lo_), hi(hi_), npts(npts_) {
        if (!(lo < hi)) throw grid_error("Grid1D: lo must be < hi", hi);
        if (npts < 64) throw grid_error("Grid1D: npts must be >= 64", hi);
    }

    double spacing() const { return (hi - lo) / (npts - 1); }

    double point(int i) const {
        return (lo * (npts - 1 - i) + hi * i) / (npts - 1);
    }

    std::vector<double> points() const {
        std::vector<double> p(npts);
        for (int i = 0; i < npts; ++i) p[i] = point(i);
        return p;
    }

    /// Trapezoid weights including the spacing factor.
    std::vector<double> trapezoid_weights() const {
        std::vector<double> w(npts, spacing());
        w.front() *= 0.5;
        w.back() *= 0.5;
        return w;
    }
};

/// Half-extent covering the classical turning point of Fock level `ntop`
/// plus a Gaussian-tail margin.
inline double default_extent(int ntop, double hbar) {
    return std::sqrt(2.0 * hbar * (ntop + 1)) + 5.0 * std::sqrt(hbar);
}

inline Grid1D default_grid(int ntop, double hbar, int npts = 2048,
                           double extent_multiplier = 1.0) {
    const double ext = default_extent(ntop, hbar) * extent_multiplier;
    return Grid1D(-ext, ext, npts);
}

} // namespace epur
