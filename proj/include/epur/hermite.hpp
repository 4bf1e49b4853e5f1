#pragma once

#include "epur/grid.hpp"

#include <Eigen/Dense>

namespace epur {

using RowMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Oscillator eigenfunctions phi_n(x) = (pi hbar)^{-1/4} (2^n n!)^{-1/2}
/// H_n(x/sqrt(hbar)) e^{-x^2/(2 hbar)} for n = 0..nmax, one function per
/// row, evaluated on the grid. Uses the normalized three-term recurrence,
/// which stays bounded far beyond n ~ 30 where raw H_n overflows.
///
/// Throws grid_error when the grid misses the classical turning point of
/// |nmax> plus margin; the exception carries the recommended half-extent.
RowMatrixXd hermite_basis(const Grid1D& grid, int nmax, double hbar);

/// phi_0..phi_nmax at a single point, written to out[0..nmax].
void hermite_point(double x, int nmax, double hbar, double* out);

} // namespace epur
