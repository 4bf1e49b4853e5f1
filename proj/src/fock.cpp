#include "epur/fock.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <random>

namespace epur {

namespace {

constexpr double kTailRule = 1e-10;

void require_hbar(double hbar) {
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
}

Eigen::MatrixXcd annihilation(int nmax) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
    for (int n = 1; n <= nmax; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

/// exp(G) e0 for anti-Hermitian G, via the Hermitian eigendecomposition of
/// iG. Exactly unitary up to roundoff, so the result needs no rescue
/// normalization beyond 1 + O(eps).
Eigen::VectorXcd expm_antihermitian_apply(const Eigen::MatrixXcd& g,
                                          const Eigen::VectorXcd& v) {
    const Eigen::MatrixXcd h = Complex(0.0, 1.0) * g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto& lambda = es.eigenvalues();
    const auto& vec = es.eigenvectors();
    Eigen::VectorXcd coeff = vec.adjoint() * v;
    for (int k = 0; k < lambda.size(); ++k)
        coeff(k) *= std::exp(Complex(0.0, -lambda(k)));
    return vec * coeff;
}

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

FockVector::FockVector(Eigen::VectorXcd amps, double hbar_value)
    : amplitudes(std::move(amps)), hbar(hbar_value) {
    require_hbar(hbar);
    if (amplitudes.size() < 2)
        throw std::invalid_argument("FockVector: nmax must be >= 1");
    const double norm = amplitudes.norm();
    if (!(norm > 0.0))
        throw std::invalid_argument("FockVector: zero amplitude vector");
    amplitudes /= norm;
}

int FockVector::top_occupied(double weight_tol) const {
    for (int n = nmax(); n > 0; --n)
        if (std::norm(amplitudes(n)) > weight_tol) return n;
    return 0;
}

double FockVector::tail_weight(int from) const {
    double w = 0.0;
    for (int n = std::max(from, 0); n <= nmax(); ++n)
        w += std::norm(amplitudes(n));
    return w;
}

FockDensity::FockDensity(Eigen::MatrixXcd m, double hbar_value)
    : matrix(std::move(m)), hbar(hbar_value) {
    require_hbar(hbar);
    if (matrix.rows() < 2 || matrix.rows() != matrix.cols())
        throw std::invalid_argument("FockDensity: matrix must be square with nmax >= 1");
    const double herm_defect = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-12)
        throw std::invalid_argument("FockDensity: matrix not Hermitian within 1e-12");
    matrix = 0.5 * (matrix + matrix.adjoint()).eval();
    const double tr = matrix.trace().real();
    if (std::abs(tr - 1.0) > 1e-12)
        throw std::invalid_argument("FockDensity: trace differs from 1 beyond 1e-12");
    matrix /= tr;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix,
                                                       Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("FockDensity: matrix has eigenvalue below -1e-10");
}

FockDensity FockDensity::from_pure(const FockVector& psi) {
    return FockDensity(psi.amplitudes * psi.amplitudes.adjoint(), psi.hbar);
}

int FockDensity::top_occupied(double weight_tol) const {
    for (int n = nmax(); n > 0; --n)
        if (matrix(n, n).real() > weight_tol) return n;
    return 0;
}

double FockDensity::tail_weight(int from) const {
    double w = 0.0;
    for (int n = std::max(from, 0); n <= nmax(); ++n) w += matrix(n, n).real();
    return w;
}

std::pair<QuadOperator, QuadOperator> quadrature_operators(int nmax, double hbar) {
    require_hbar(hbar);
    if (nmax < 1) throw std::invalid_argument("quadrature_operators: nmax must be >= 1");
    const Eigen::MatrixXcd a = annihilation(nmax);
    const double scale = std::sqrt(hbar / 2.0);
    Eigen::MatrixXcd x = scale * (a + a.adjoint());
    Eigen::MatrixXcd p = Complex(0.0, scale) * (a.adjoint() - a);
    return {QuadOperator{std::move(x), QuadOperator::Label::X},
            QuadOperator{std::move(p), QuadOperator::Label::P}};
}

Eigen::VectorXcd squeezed_vacuum_series(double r, double phi, int nmax) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(nmax + 1);
    const double th = std::tanh(r);
    const Complex factor = -std::polar(th, phi);
    Complex amp = std::sqrt(1.0 / std::cosh(r));
    c(0) = amp;
    for (int k = 1; 2 * k <= nmax; ++k) {
        const double m = 2.0 * k;
        amp *= factor * std::sqrt((m - 1.0) * m) / m;
        c(2 * k) = amp;
    }
    return c;
}

int squeezed_vacuum_required_nmax(double r) {
    if (r == 0.0) return 1;
    // Walk the even-level series until the remaining weight drops under the
    // tail rule; overall normalization keeps the estimate conservative.
    const double th2 = std::tanh(r) * std::tanh(r);
    double w = 1.0 / std::cosh(r); // |c_0|^2
    double total_above = 1.0 - w;
    int m = 0;
    while (total_above > kTailRule && m < 100000) {
        m += 2;
        w *= th2 * (m - 1.0) / m;
        total_above -= w;
    }
    // Require weight above level (nmax - 2) to satisfy the rule.
    return m + 2;
}

FockVector squeezed_vacuum(const GaussianUnitarySpec& spec, int nmax,
                           double hbar) {
    require_hbar(hbar);
    if (spec.r < 0.0) throw std::invalid_argument("squeezed_vacuum: r must be >= 0");
    if (nmax < 1) throw std::invalid_argument("squeezed_vacuum: nmax must be >= 1");
    const int required = squeezed_vacuum_required_nmax(spec.r);
    if (nmax < required)
        throw truncation_error("squeezed_vacuum: nmax " + std::to_string(nmax) +
                                   " too small for r = " + std::to_string(spec.r) +
                                   ", need nmax >= " + std::to_string(required),
                               required);
    const Eigen::MatrixXcd a = annihilation(nmax);
    const Complex z = std::polar(spec.r, spec.phi);
    const Eigen::MatrixXcd a2 = a * a;
    const Eigen::MatrixXcd gen =
        0.5 * (std::conj(z) * a2 - z * a2.adjoint());
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(nmax + 1);
    e0(0) = 1.0;
    FockVector psi(expm_antihermitian_apply(gen, e0), hbar);
    if (spec.alpha != Complex(0.0, 0.0)) psi = displace(psi, spec.alpha);
    return psi;
}

FockVector displace(const FockVector& psi, Complex alpha) {
    const int nmax = psi.nmax();
    const Eigen::MatrixXcd a = annihilation(nmax);
    const Eigen::MatrixXcd gen = alpha * a.adjoint() - std::conj(alpha) * a;
    return FockVector(expm_antihermitian_apply(gen, psi.amplitudes), psi.hbar);
}

FockVector haar_random_state(int dim, int nmax, std::uint64_t seed,
                             double hbar) {
    if (dim < 1 || dim > nmax + 1)
        throw std::invalid_argument("haar_random_state: need 1 <= dim <= nmax+1");
    std::uint64_t s = seed;
    std::mt19937_64 rng(splitmix64(s));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd ginibre(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            ginibre(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the R-diagonal phases so Q follows the Haar measure.
    for (int j = 0; j < dim; ++j) {
        const Complex d = rmat(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(nmax + 1);
    amps.head(dim) = q.col(0);
    return FockVector(std::move(amps), hbar);
}

FockDensity extremal_passive_state(int N, int nmax, double hbar) {
    if (N < 0) throw std::invalid_argument("extremal_passive_state: N must be >= 0");
    if (N > nmax)
        throw std::invalid_argument("extremal_passive_state: N exceeds nmax");
    if (nmax < 1) throw std::invalid_argument("extremal_passive_state: nmax must be >= 1");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
    for (int n = 0; n <= N; ++n) m(n, n) = 1.0 / (N + 1.0);
    return FockDensity(std::move(m), hbar);
}

FockVector embed(const FockVector& psi, int nmax) {
    if (nmax <= psi.nmax()) return psi;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(nmax + 1);
    amps.head(psi.amplitudes.size()) = psi.amplitudes;
    return FockVector(std::move(amps), psi.hbar);
}

FockDensity embed(const FockDensity& rho, int nmax) {
    if (nmax <= rho.nmax()) return rho;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
    m.topLeftCorner(rho.matrix.rows(), rho.matrix.cols()) = rho.matrix;
    return FockDensity(std::move(m), rho.hbar);
}

FockDensity mix(const std::vector<FockDensity>& states,
                const std::vector<double>& weights) {
    if (states.empty() || states.size() != weights.size())
        throw std::invalid_argument("mix: states and weights must be non-empty and equal-sized");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("mix: weights must be nonnegative");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("mix: weights must sum to 1 within 1e-12");
    const auto rows = states.front().matrix.rows();
    const double hbar = states.front().hbar;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, rows);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].matrix.rows() != rows)
            throw std::invalid_argument("mix: dimension mismatch");
        if (states[i].hbar != hbar)
            throw std::invalid_argument("mix: hbar mismatch");
        m += weights[i] * states[i].matrix;
    }
    return FockDensity(std::move(m), hbar);
}

} // namespace epur
