#include "epur/moments.hpp"

#include <cmath>

namespace epur {

namespace {

constexpr double kTailRule = 1e-10;

struct LadderMoments {
    Complex a;  // <a>
    Complex a2; // <a^2>
    double n;   // <a† a>
};

CovarianceMatrix from_ladder(const LadderMoments& m, double hbar) {
    CovarianceMatrix g;
    g.hbar = hbar;
    g.mean_x = std::sqrt(2.0 * hbar) * m.a.real();
    g.mean_p = std::sqrt(2.0 * hbar) * m.a.imag();
    const double xx = 0.5 * hbar * (2.0 * m.a2.real() + 2.0 * m.n + 1.0);
    const double pp = 0.5 * hbar * (-2.0 * m.a2.real() + 2.0 * m.n + 1.0);
    const double xp = hbar * m.a2.imag();
    g.sxx = xx - g.mean_x * g.mean_x;
    g.spp = pp - g.mean_p * g.mean_p;
    g.sxp = xp - g.mean_x * g.mean_p;
    return g;
}

void require_adequate(double tail, int nmax) {
    if (tail >= kTailRule)
        throw truncation_error(
            "covariance: occupation " + std::to_string(tail) +
                " in the top two Fock levels exceeds the 1e-10 adequacy rule",
            nmax + 16);
}

} // namespace

CovarianceMatrix covariance(const FockDensity& rho, bool check_truncation) {
    const int nmax = rho.nmax();
    if (check_truncation) require_adequate(rho.tail_weight(nmax - 1), nmax);
    LadderMoments m{};
    for (int k = 1; k <= nmax; ++k) m.a += std::sqrt(double(k)) * rho.matrix(k, k - 1);
    for (int k = 2; k <= nmax; ++k)
        m.a2 += std::sqrt(double(k) * (k - 1.0)) * rho.matrix(k, k - 2);
    for (int k = 1; k <= nmax; ++k) m.n += k * rho.matrix(k, k).real();
    return from_ladder(m, rho.hbar);
}

CovarianceMatrix covariance(const FockVector& psi, bool check_truncation) {
    const int nmax = psi.nmax();
    if (check_truncation) require_adequate(psi.tail_weight(nmax - 1), nmax);
    const auto& c = psi.amplitudes;
    LadderMoments m{};
    for (int k = 1; k <= nmax; ++k)
        m.a += std::sqrt(double(k)) * std::conj(c(k - 1)) * c(k);
    for (int k = 2; k <= nmax; ++k)
        m.a2 += std::sqrt(double(k) * (k - 1.0)) * std::conj(c(k - 2)) * c(k);
    for (int k = 1; k <= nmax; ++k) m.n += k * std::norm(c(k));
    return from_ladder(m, psi.hbar);
}

CovarianceMatrix rotate_covariance(const CovarianceMatrix& g, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    CovarianceMatrix out = g;
    out.mean_x = c * g.mean_x + s * g.mean_p;
    out.mean_p = -s * g.mean_x + c * g.mean_p;
    out.sxx = c * c * g.sxx + 2.0 * c * s * g.sxp + s * s * g.spp;
    out.spp = s * s * g.sxx - 2.0 * c * s * g.sxp + c * c * g.spp;
    out.sxp = g.sxp * (c * c - s * s) - c * s * (g.sxx - g.spp);
    return out;
}

double principal_angle(const CovarianceMatrix& g) {
    return 0.5 * std::atan2(2.0 * g.sxp, g.sxx - g.spp);
}

double correlation_coefficient(const CovarianceMatrix& g) {
    return g.sxp / std::sqrt(g.sxx * g.spp);
}

double gaussian_mutual_information(const CovarianceMatrix& g) {
    const double det = g.determinant();
    if (!(det > 0.0))
        throw std::invalid_argument("gaussian_mutual_information: degenerate covariance");
    return 0.5 * std::log(g.sxx * g.spp / det);
}

double gaussian_purity(const CovarianceMatrix& g) {
    const double det = g.determinant();
    const double bound = 0.25 * g.hbar * g.hbar;
    if (det < bound - 1e-9)
        throw std::invalid_argument(
            "gaussian_purity: covariance violates |gamma| >= (hbar/2)^2");
    return 0.5 * g.hbar / std::sqrt(det);
}

CovarianceMatrix squeezed_covariance(const GaussianUnitarySpec& spec,
                                     double hbar) {
    const double c2 = std::cosh(2.0 * spec.r);
    const double s2 = std::sinh(2.0 * spec.r);
    CovarianceMatrix g;
    g.hbar = hbar;
    g.sxx = 0.5 * hbar * (c2 - std::cos(spec.phi) * s2);
    g.spp = 0.5 * hbar * (c2 + std::cos(spec.phi) * s2);
    g.sxp = -0.5 * hbar * std::sin(spec.phi) * s2;
    g.mean_x = std::sqrt(2.0 * hbar) * spec.alpha.real();
    g.mean_p = std::sqrt(2.0 * hbar) * spec.alpha.imag();
    return g;
}

} // namespace epur
