#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epur/fock.hpp"
#include "epur/hermite.hpp"
#include "epur/marginal.hpp"
#include "epur/moments.hpp"
#include "epur/wigner.hpp"
#include "oracle_helpers.hpp"

#include <cmath>

using namespace epur;

namespace {

FockDensity fock_projector(int n, int nmax) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nmax + 1, nmax + 1);
    m(n, n) = 1.0;
    return FockDensity(m, 1.0);
}

/// Brute-force oracle for W(0,0): Simpson quadrature of
/// (2 pi)^-1 Int phi_n(y/2) phi_n(-y/2) dy with its own basis evaluation.
double wigner_origin_fock(int n) {
    std::vector<double> buf(n + 1);
    return oracle::simpson(
               [&](double y) {
                   hermite_point(0.5 * y, n, 1.0, buf.data());
                   const double a = buf[n];
                   hermite_point(-0.5 * y, n, 1.0, buf.data());
                   return a * buf[n];
               },
               -20.0, 20.0, 4000) /
           (2.0 * M_PI);
}

} // namespace

TEST_CASE("vacuum Wigner peak is 1/pi") {
    const Grid1D g = default_grid(0, 1.0, 257);
    const WignerGrid w = wigner(fock_projector(0, 4), g, g);
    CHECK(w.value(128, 128) == doctest::Approx(1.0 / M_PI).epsilon(1e-9));
    CHECK(w.min_value() > -1e-9);
    CHECK(w.integral() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("first Fock state dips to -1/pi at the origin") {
    const Grid1D g = default_grid(1, 1.0, 257);
    const WignerGrid w = wigner(fock_projector(1, 5), g, g);
    CHECK(w.value(128, 128) == doctest::Approx(-1.0 / M_PI).epsilon(1e-9));
    CHECK(wigner_origin_fock(1) == doctest::Approx(-1.0 / M_PI).epsilon(1e-9));
    CHECK(min_wigner(w) == doctest::Approx(-1.0 / M_PI).epsilon(1e-6));
}

TEST_CASE("passive states stay nonnegative on the grid") {
    const Grid1D g = default_grid(3, 1.0, 513);
    const WignerGrid w = wigner(extremal_passive_state(3, 7), g, g);
    CHECK(min_wigner(w) >= -1e-6);
}

TEST_CASE("marginalizing the Wigner grid reproduces the marginals") {
    const auto check_state = [](const FockDensity& rho, int neff) {
        const Grid1D g = default_grid(neff, 1.0, 1024);
        const WignerGrid w = wigner(rho, g, g);
        const Density1D mx = marginal_x(rho, g);
        const Density1D mp = marginal_p(rho, g);
        const auto over_p = w.marginalize_over_p();
        const auto over_x = w.marginalize_over_x();
        double dsup_x = 0.0, dsup_p = 0.0;
        for (int i = 0; i < g.npts; ++i) {
            dsup_x = std::max(dsup_x, std::abs(over_p[i] - mx.values[i]));
            dsup_p = std::max(dsup_p, std::abs(over_x[i] - mp.values[i]));
        }
        CHECK(dsup_x < 1e-5);
        CHECK(dsup_p < 1e-5);
    };
    check_state(extremal_passive_state(3, 7), 3);
    check_state(FockDensity::from_pure(haar_random_state(4, 6, 11)), 3);
}

TEST_CASE("Fock-diagonal Wigner functions have exact point symmetry") {
    const Grid1D g = default_grid(2, 1.0, 256);
    const WignerGrid w = wigner(extremal_passive_state(2, 6), g, g);
    for (int i = 0; i < g.npts; i += 7)
        for (int j = 0; j < g.npts; j += 11)
            CHECK(w.value(i, j) == w.value(g.npts - 1 - i, g.npts - 1 - j));
}

TEST_CASE("squeezed vacuum Wigner matches the Gaussian closed form") {
    for (double theta : {0.0, 0.6}) {
        const double r = 0.4;
        const FockVector psi = squeezed_vacuum({r, 2 * theta, {0, 0}}, 48);
        const Grid1D g = default_grid(psi.top_occupied(0.0), 1.0, 257);
        const WignerGrid w = wigner(psi, g, g);
        const CovarianceMatrix cov = squeezed_covariance({r, 2 * theta, {0, 0}});
        const Eigen::Matrix2d gamma = cov.matrix();
        const Eigen::Matrix2d inv = gamma.inverse();
        const double norm = 1.0 / (2.0 * M_PI * std::sqrt(gamma.determinant()));
        double sup = 0.0;
        for (int i = 0; i < g.npts; i += 5)
            for (int j = 0; j < g.npts; j += 5) {
                const double x = g.point(i), p = g.point(j);
                const double quad =
                    inv(0, 0) * x * x + 2 * inv(0, 1) * x * p + inv(1, 1) * p * p;
                sup = std::max(sup,
                               std::abs(w.value(i, j) - norm * std::exp(-0.5 * quad)));
            }
        CHECK(sup < 1e-6);
    }
}

TEST_CASE("auto quadrature order is converged") {
    const FockDensity rho = extremal_passive_state(4, 8);
    const Grid1D g = default_grid(4, 1.0, 256);
    const double ext = g.hi - g.lo;
    const int generous = 2 * (static_cast<int>(ext * ext) / 2 + 128);
    const WignerGrid a = wigner(rho, g, g);
    const WignerGrid b = wigner(rho, g, g, generous);
    double sup = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        sup = std::max(sup, std::abs(a.values[k] - b.values[k]));
    CHECK(sup < 1e-9);
}

TEST_CASE("grid that misses the state is rejected") {
    // Large-r squeezed state needs more extent than the vacuum-sized grid has.
    const FockVector psi = squeezed_vacuum({0.9, 0.0, {0, 0}}, 80);
    const Grid1D tiny(-4.0, 4.0, 128);
    CHECK_THROWS_AS(wigner(psi, tiny, tiny), grid_error);
}
