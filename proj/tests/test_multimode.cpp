#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epur/multimode.hpp"

#include <cmath>

using namespace epur;

TEST_CASE("symplectic form and validation") {
    const Eigen::MatrixXd omega = symplectic_form(2);
    CHECK(omega(0, 1) == 1.0);
    CHECK(omega(1, 0) == -1.0);
    CHECK(omega(2, 3) == 1.0);
    CHECK_NOTHROW(beamsplitter());
    CHECK_THROWS_AS(Symplectic(2.0 * Eigen::MatrixXd::Identity(4, 4)),
                    std::invalid_argument);
}

TEST_CASE("two-mode squeezed matrix entries match the closed form") {
    const double r = 0.37, hbar = 1.0;
    const GaussianState g = two_mode_squeezed(r, hbar);
    const double c = 0.5 * hbar * std::cosh(2 * r);
    const double s = 0.5 * hbar * std::sinh(2 * r);
    Eigen::MatrixXd expected(4, 4);
    expected << c / (0.5 * hbar), 0, s / (0.5 * hbar), 0, //
        0, c / (0.5 * hbar), 0, -s / (0.5 * hbar),        //
        s / (0.5 * hbar), 0, c / (0.5 * hbar), 0,         //
        0, -s / (0.5 * hbar), 0, c / (0.5 * hbar);
    expected *= 0.5 * hbar;
    CHECK((g.gamma - expected).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(g.physical());
    CHECK(g.det_gamma() == doctest::Approx(std::pow(0.5 * hbar, 4)).epsilon(1e-12));

    const GaussianState id = two_mode_squeezed(0.0, hbar);
    CHECK((id.gamma - 0.5 * hbar * Eigen::MatrixXd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
}

TEST_CASE("rotated pair matrix entries match the closed form") {
    const double r = 0.52;
    const GaussianState g = rotated_pair(r);
    const double c = 0.5 * std::cosh(2 * r);
    const double s = 0.5 * std::sinh(2 * r);
    CHECK(g.gamma(0, 0) == doctest::Approx(c).epsilon(1e-14));
    CHECK(g.gamma(0, 3) == doctest::Approx(-s).epsilon(1e-13));
    CHECK(g.gamma(1, 2) == doctest::Approx(-s).epsilon(1e-13));
    CHECK(g.gamma(2, 1) == doctest::Approx(-s).epsilon(1e-13));
    CHECK(std::abs(g.gamma(0, 1)) < 1e-15);
    CHECK(std::abs(g.gamma(0, 2)) < 1e-15);
    CHECK(std::abs(g.gamma(1, 3)) < 1e-15);
    CHECK(g.physical());
}

TEST_CASE("reduced blocks and their determinants") {
    const double r = 0.45;
    const auto [gx1, gp1] = reduced_blocks(rotated_pair(r));
    const double cosh2 = std::cosh(2 * r);
    CHECK(gx1.determinant() ==
          doctest::Approx(0.25 * cosh2 * cosh2).epsilon(1e-12));
    CHECK(gp1.determinant() ==
          doctest::Approx(0.25 * cosh2 * cosh2).epsilon(1e-12));

    const auto [gx2, gp2] = reduced_blocks(two_mode_squeezed(r));
    CHECK(gx2.determinant() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(gp2.determinant() == doctest::Approx(0.25).epsilon(1e-12));

    const auto [gx3, gp3] = reduced_blocks(single_mode_squeezed(r, 0.3));
    CHECK(gx3.rows() == 1);
    CHECK(gx3(0, 0) == doctest::Approx(single_mode_squeezed(r, 0.3).gamma(0, 0)));
    CHECK(gp3(0, 0) == doctest::Approx(single_mode_squeezed(r, 0.3).gamma(1, 1)));
}

TEST_CASE("gaussian joint entropies") {
    const GaussianState vac1 = vacuum_state(1);
    const auto [hx1, hp1] = gaussian_joint_entropies(vac1);
    CHECK(hx1 == doctest::Approx(0.5 * std::log(M_PI * M_E)).epsilon(1e-14));
    CHECK(hp1 == doctest::Approx(hx1).epsilon(1e-14));

    const double r = 0.61;
    const auto [hx2, hp2] = gaussian_joint_entropies(rotated_pair(r));
    CHECK(hx2 + hp2 ==
          doctest::Approx(2 * std::log(M_PI * M_E * std::cosh(2 * r)))
              .epsilon(1e-12));

    const GaussianState vac3 = vacuum_state(3);
    const auto [hx3, hp3] = gaussian_joint_entropies(vac3);
    CHECK(hx3 == doctest::Approx(3 * 0.5 * std::log(M_PI * M_E)).epsilon(1e-14));
    CHECK(hp3 == doctest::Approx(hx3).epsilon(1e-14));
}

TEST_CASE("n-mode entropic relations on the reference states") {
    const double r = 0.8;
    CHECK(std::abs(nmode_bbm(two_mode_squeezed(r)).slack) < 1e-12);
    CHECK(nmode_bbm(rotated_pair(r)).slack ==
          doctest::Approx(2 * std::log(std::cosh(2 * r))).epsilon(1e-12));
    CHECK(std::abs(nmode_bbm(vacuum_state(4)).slack) < 1e-12);

    CHECK(std::abs(nmode_tight(rotated_pair(r)).slack) < 1e-12);
    CHECK(std::abs(nmode_tight(two_mode_squeezed(r)).slack) < 1e-9);
    CHECK(std::abs(nmode_tight(single_mode_squeezed(r, 0.77)).slack) < 1e-9);

    // Thermal state nu I: slack n ln(2 nu / hbar).
    const double nu = 0.8;
    const GaussianState thermal(Eigen::VectorXd::Zero(6),
                                nu * Eigen::MatrixXd::Identity(6, 6), 1.0);
    CHECK(nmode_tight(thermal).slack ==
          doctest::Approx(3 * std::log(2 * nu)).epsilon(1e-12));
}

TEST_CASE("n-mode entropy powers and their verdicts") {
    const double r = 0.33;
    const NModePowers pure2 = nmode_entropy_powers(two_mode_squeezed(r));
    CHECK(std::abs(pure2.tight.slack) < 1e-12);
    const NModePowers rot = nmode_entropy_powers(rotated_pair(r));
    CHECK(std::abs(rot.tight.slack) < 1e-12);
    CHECK(rot.basic.slack > 0.0);

    // Sign equivalence between the power product and the entropic form.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const GaussianState g = random_physical_gamma(3, seed);
        const NModePowers p = nmode_entropy_powers(g);
        const RelationVerdict b = nmode_bbm(g);
        CHECK((p.basic.slack >= -1e-12) == (b.slack >= -1e-12));
    }
}

TEST_CASE("bound chain on random physical covariance matrices") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const GaussianState g = random_physical_gamma(n, seed * 101 + n);
            CHECK(g.physical());
            const auto [gx, gp] = reduced_blocks(g);
            const NModePowers p = nmode_entropy_powers(g);
            const double middle = std::pow(p.power_x * p.power_p, n) /
                                  (gx.determinant() * gp.determinant()) *
                                  g.det_gamma();
            CHECK(g.det_gamma() >= middle - 1e-9);
            CHECK(middle >= std::pow(0.25, n) - 1e-9);
        }
}

TEST_CASE("pure builders have pure determinants and physicality") {
    for (double r : {0.0, 0.4, 1.1}) {
        for (const GaussianState& g :
             {two_mode_squeezed(r), rotated_pair(r), single_mode_squeezed(r, 0.9)}) {
            CHECK(g.physical());
            CHECK(g.det_gamma() ==
                  doctest::Approx(std::pow(0.25, g.n)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(two_mode_squeezed(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(rotated_pair(-1.0), std::invalid_argument);
}

TEST_CASE("determinant is symplectic invariant; block rotations keep verdicts") {
    const GaussianState g = random_physical_gamma(2, 77);
    const Symplectic s = random_symplectic(2, 13);
    const GaussianState h = g.transformed(s);
    CHECK(h.det_gamma() == doctest::Approx(g.det_gamma()).epsilon(1e-8));

    // The balanced beam splitter acts identically on the x and p blocks, so
    // every determinant entering the verdicts is preserved.
    const GaussianState b = g.transformed(beamsplitter());
    CHECK(nmode_tight(b).slack ==
          doctest::Approx(nmode_tight(g).slack).epsilon(1e-8).scale(1.0));
    CHECK(nmode_bbm(b).slack ==
          doctest::Approx(nmode_bbm(g).slack).epsilon(1e-8).scale(1.0));
}

TEST_CASE("closed-form Gaussian entropies match the numeric grid route") {
    // n = 1 single-mode squeezed states: gaussian_joint_entropies (pure
    // covariance algebra) against the Fock-basis marginal quadrature.
    for (double theta : {0.0, 0.5, M_PI / 4}) {
        const double r = 0.55;
        const GaussianState closed = single_mode_squeezed(r, theta);
        const auto [hx_cf, hp_cf] = gaussian_joint_entropies(closed);
        const FockVector psi = squeezed_vacuum({r, 2 * theta, {0, 0}}, 64);
        const StateAnalysis a = analyze(psi, EvalConfig{});
        CHECK(a.hx == doctest::Approx(hx_cf).epsilon(1e-7));
        CHECK(a.hp == doctest::Approx(hp_cf).epsilon(1e-7));
    }
}

TEST_CASE("random physical states are deterministic per seed") {
    const GaussianState a = random_physical_gamma(3, 5);
    const GaussianState b = random_physical_gamma(3, 5);
    CHECK((a.gamma - b.gamma).cwiseAbs().maxCoeff() == 0.0);
    const GaussianState c = random_physical_gamma(3, 6);
    CHECK((a.gamma - c.gamma).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("gaussian state validation") {
    Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(4, 4);
    asym(0, 1) = 0.2;
    CHECK_THROWS_AS(GaussianState(Eigen::VectorXd::Zero(4), asym, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(GaussianState(Eigen::VectorXd::Zero(3),
                                  Eigen::MatrixXd::Identity(4, 4), 1.0),
                    std::invalid_argument);
    // An unphysical covariance is constructible but flagged.
    const GaussianState tiny(Eigen::VectorXd::Zero(2),
                             0.1 * Eigen::MatrixXd::Identity(2, 2), 1.0);
    CHECK(!tiny.physical());
}
