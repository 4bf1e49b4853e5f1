#include "epur/multimode.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

namespace epur {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RelationVerdict make(std::string name, double lhs, double rhs, double sat_tol) {
    RelationVerdict v;
    v.name = std::move(name);
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = lhs - rhs;
    v.saturated = std::abs(v.slack) < sat_tol;
    return v;
}

} // namespace

Eigen::MatrixXd symplectic_form(int n) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

Symplectic::Symplectic(Eigen::MatrixXd m) : matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0)
        throw std::invalid_argument("Symplectic: matrix must be square and even-sized");
    const Eigen::MatrixXd omega = symplectic_form(modes());
    const double defect =
        (matrix * omega * matrix.transpose() - omega).cwiseAbs().maxCoeff();
    if (defect > 1e-10)
        throw std::invalid_argument("Symplectic: S Omega S^T deviates from Omega by " +
                                    std::to_string(defect));
}

GaussianState::GaussianState(Eigen::VectorXd mean_vec, Eigen::MatrixXd gamma_mat,
                             double hbar_value)
    : mean(std::move(mean_vec)), gamma(std::move(gamma_mat)), hbar(hbar_value) {
    if (!(hbar > 0.0)) throw std::invalid_argument("GaussianState: hbar must be positive");
    if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0 || gamma.rows() < 2)
        throw std::invalid_argument("GaussianState: gamma must be square 2n x 2n");
    if (mean.size() != gamma.rows())
        throw std::invalid_argument("GaussianState: mean length must be 2n");
    n = static_cast<int>(gamma.rows()) / 2;
    if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("GaussianState: gamma not symmetric within 1e-12");
    gamma = (0.5 * (gamma + gamma.transpose())).eval();
}

bool GaussianState::physical(double tol) const {
    const Eigen::MatrixXcd m =
        gamma.cast<Complex>() +
        Complex(0.0, 0.5 * hbar) * symplectic_form(n).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

GaussianState GaussianState::transformed(const Symplectic& s) const {
    if (s.modes() != n)
        throw std::invalid_argument("GaussianState::transformed: mode count mismatch");
    return GaussianState(s.matrix * mean,
                         s.matrix * gamma * s.matrix.transpose(), hbar);
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> reduced_blocks(const GaussianState& g) {
    Eigen::MatrixXd gx(g.n, g.n), gp(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            gx(i, j) = g.gamma(2 * i, 2 * j);
            gp(i, j) = g.gamma(2 * i + 1, 2 * j + 1);
        }
    return {gx, gp};
}

std::pair<double, double> gaussian_joint_entropies(const GaussianState& g) {
    const auto [gx, gp] = reduced_blocks(g);
    const double c = g.n * std::log(2.0 * M_PI * M_E);
    return {0.5 * (c + std::log(gx.determinant())),
            0.5 * (c + std::log(gp.determinant()))};
}

RelationVerdict nmode_bbm(const GaussianState& g, double sat_tol) {
    const auto [hx, hp] = gaussian_joint_entropies(g);
    return make("nmode_bbm", hx + hp, g.n * std::log(M_PI * M_E * g.hbar),
                sat_tol);
}

RelationVerdict nmode_tight(const GaussianState& g, double sat_tol) {
    const auto [gx, gp] = reduced_blocks(g);
    const auto [hx, hp] = gaussian_joint_entropies(g);
    const double correction =
        0.5 * std::log(gx.determinant() * gp.determinant() / g.det_gamma());
    RelationVerdict v = make("nmode_tight", hx + hp - correction,
                             g.n * std::log(M_PI * M_E * g.hbar), sat_tol);
    v.alt_lhs = correction;
    v.alt_form = "gaussian_mutual_information";
    return v;
}

NModePowers nmode_entropy_powers(double hx, double hp, int n, double det_gx,
                                 double det_gp, double det_g, double hbar,
                                 double sat_tol) {
    NModePowers out;
    out.power_x = std::exp(2.0 * hx / n) / (2.0 * M_PI * M_E);
    out.power_p = std::exp(2.0 * hp / n) / (2.0 * M_PI * M_E);
    const double hbar2 = 0.25 * hbar * hbar;
    out.basic = make("nmode_epur", out.power_x * out.power_p, hbar2, sat_tol);
    out.tight = make("nmode_tight_epur", out.power_x * out.power_p,
                     std::pow(det_gx * det_gp / det_g, 1.0 / n) * hbar2,
                     sat_tol);
    return out;
}

NModePowers nmode_entropy_powers(const GaussianState& g, double sat_tol) {
    const auto [gx, gp] = reduced_blocks(g);
    const auto [hx, hp] = gaussian_joint_entropies(g);
    return nmode_entropy_powers(hx, hp, g.n, gx.determinant(), gp.determinant(),
                                g.det_gamma(), g.hbar, sat_tol);
}

GaussianState vacuum_state(int n, double hbar) {
    return GaussianState(Eigen::VectorXd::Zero(2 * n),
                         0.5 * hbar * Eigen::MatrixXd::Identity(2 * n, 2 * n),
                         hbar);
}

GaussianState single_mode_squeezed(double r, double theta, double hbar) {
    if (r < 0.0) throw std::invalid_argument("single_mode_squeezed: r must be >= 0");
    const double c2 = std::cosh(2.0 * r);
    const double s2 = std::sinh(2.0 * r);
    const double phi = 2.0 * theta;
    Eigen::MatrixXd g(2, 2);
    g << c2 - std::cos(phi) * s2, -std::sin(phi) * s2, -std::sin(phi) * s2,
        c2 + std::cos(phi) * s2;
    return GaussianState(Eigen::VectorXd::Zero(2), 0.5 * hbar * g, hbar);
}

Symplectic beamsplitter() {
    Eigen::MatrixXd s(4, 4);
    const double q = 1.0 / std::sqrt(2.0);
    s << q, 0, q, 0, //
        0, q, 0, q,  //
        -q, 0, q, 0, //
        0, -q, 0, q;
    return Symplectic(std::move(s));
}

namespace {

GaussianState two_input_bs(const GaussianState& m1, const GaussianState& m2) {
    Eigen::MatrixXd gin = Eigen::MatrixXd::Zero(4, 4);
    gin.block<2, 2>(0, 0) = m1.gamma;
    gin.block<2, 2>(2, 2) = m2.gamma;
    GaussianState in(Eigen::VectorXd::Zero(4), std::move(gin), m1.hbar);
    return in.transformed(beamsplitter());
}

} // namespace

GaussianState two_mode_squeezed(double r, double hbar) {
    if (r < 0.0) throw std::invalid_argument("two_mode_squeezed: r must be >= 0");
    return two_input_bs(single_mode_squeezed(r, 0.0, hbar),
                        single_mode_squeezed(r, M_PI / 2.0, hbar));
}

GaussianState rotated_pair(double r, double hbar) {
    if (r < 0.0) throw std::invalid_argument("rotated_pair: r must be >= 0");
    return two_input_bs(single_mode_squeezed(r, -M_PI / 4.0, hbar),
                        single_mode_squeezed(r, M_PI / 4.0, hbar));
}

Symplectic random_symplectic(int n, std::uint64_t seed) {
    std::uint64_t s = seed ^ 0x5ca1ab1e00000000ULL;
    std::mt19937_64 rng(splitmix64(s));
    std::normal_distribution<double> gauss(0.0, 0.35);
    Eigen::MatrixXd h(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i; j < 2 * n; ++j) {
            h(i, j) = gauss(rng);
            h(j, i) = h(i, j);
        }
    const Eigen::MatrixXd x = symplectic_form(n) * h;
    return Symplectic(x.exp());
}

GaussianState random_physical_gamma(int n, std::uint64_t seed, double hbar) {
    std::uint64_t s = seed;
    std::mt19937_64 rng(splitmix64(s));
    std::uniform_real_distribution<double> unif(0.0, 1.5);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        const double nu = 0.5 * hbar * (1.0 + unif(rng));
        d(2 * k, 2 * k) = nu;
        d(2 * k + 1, 2 * k + 1) = nu;
    }
    const Symplectic sp = random_symplectic(n, seed);
    return GaussianState(Eigen::VectorXd::Zero(2 * n),
                         sp.matrix * d * sp.matrix.transpose(), hbar);
}

} // namespace epur
