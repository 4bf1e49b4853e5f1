#pragma once

#include "epur/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace epur {

using Complex = std::complex<double>;

/// Pure state in a truncated Fock basis, indices 0..nmax. Normalized on
/// construction.
struct FockVector {
    Eigen::VectorXcd amplitudes;
    double hbar = 1.0;

    FockVector(Eigen::VectorXcd amps, double hbar_value);

    int nmax() const { return static_cast<int>(amplitudes.size()) - 1; }

    /// Highest index whose occupation exceeds weight_tol (>= 0).
    int top_occupied(double weight_tol = 1e-14) const;

    /// Total occupation at indices >= from.
    double tail_weight(int from) const;
};

/// Mixed state in a truncated Fock basis. Hermitized, trace-normalized and
/// PSD-checked on construction.
struct FockDensity {
    Eigen::MatrixXcd matrix;
    double hbar = 1.0;

    FockDensity(Eigen::MatrixXcd m, double hbar_value);

    static FockDensity from_pure(const FockVector& psi);

    int nmax() const { return static_cast<int>(matrix.rows()) - 1; }
    int top_occupied(double weight_tol = 1e-14) const;
    double tail_weight(int from) const;
};

struct QuadOperator {
    enum class Label { X, P };
    Eigen::MatrixXcd matrix;
    Label label;
};

/// Parameters of a Gaussian unitary: squeeze z = r e^{i phi} (phi = 2 theta)
/// followed by a displacement alpha.
struct GaussianUnitarySpec {
    double r = 0.0;
    double phi = 0.0;
    Complex alpha{0.0, 0.0};
};

/// X = sqrt(hbar/2)(a + a†), P = i sqrt(hbar/2)(a† - a), truncated at nmax.
/// The commutator equals i*hbar*I on rows/cols 0..nmax-1; the last
/// row/col carries the truncation artifact.
std::pair<QuadOperator, QuadOperator> quadrature_operators(int nmax, double hbar);

/// exp{(z* a^2 - z a†^2)/2} |0>, then displaced by alpha when nonzero.
/// Throws truncation_error (with the required cutoff) when nmax leaves
/// more than 1e-10 of the squeezed series above nmax-2.
FockVector squeezed_vacuum(const GaussianUnitarySpec& spec, int nmax,
                           double hbar = 1.0);

/// Closed-form amplitudes of the same state (even levels only); used as an
/// independent route to the matrix-exponential construction.
Eigen::VectorXcd squeezed_vacuum_series(double r, double phi, int nmax);

/// Smallest adequate cutoff for squeeze modulus r under the 1e-10 tail rule.
int squeezed_vacuum_required_nmax(double r);

/// exp{alpha a† - alpha* a} applied to psi.
FockVector displace(const FockVector& psi, Complex alpha);

/// First column of a Haar-distributed dim x dim unitary (complex Ginibre
/// matrix, QR, R-diagonal phase fix), embedded in Fock span {|0>..|dim-1>}.
/// Deterministic per seed.
FockVector haar_random_state(int dim, int nmax, std::uint64_t seed,
                             double hbar = 1.0);

/// Equal weights 1/(N+1) on |0>..|N>, zero above.
FockDensity extremal_passive_state(int N, int nmax, double hbar = 1.0);

/// Convex combination. Weights must sum to 1 within 1e-12 and dimensions
/// must match.
FockDensity mix(const std::vector<FockDensity>& states,
                const std::vector<double>& weights);

/// Zero-pad into a larger Fock space (no-op when nmax is not larger).
FockVector embed(const FockVector& psi, int nmax);
FockDensity embed(const FockDensity& rho, int nmax);

} // namespace epur
