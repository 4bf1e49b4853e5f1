#pragma once

#include "epur/entropy.hpp"
#include "epur/moments.hpp"

#include <limits>
#include <string>

namespace epur {

/// Knobs shared by every grid-backed evaluation.
struct EvalConfig {
    int grid_points = 2048;
    int wigner_points = 0; // 0 -> grid_points
    double extent_multiplier = 1.0;
    double sat_tol = 1e-4; // |slack| below this counts as saturated
    double neg_tol = 1e-9; // Wigner negativity gate
    int gl_order = 0;      // 0 -> auto from the grid phase budget

    int wigner_npts() const { return wigner_points > 0 ? wigner_points : grid_points; }
};

/// One uncertainty relation evaluated on one state: lhs >= rhs, slack =
/// lhs - rhs. Most relations exist in two algebraically equivalent forms
/// (entropic and entropy-power/variance); the secondary form rides along
/// in alt_lhs/alt_rhs.
struct RelationVerdict {
    std::string name;
    double lhs = std::numeric_limits<double>::quiet_NaN();
    double rhs = std::numeric_limits<double>::quiet_NaN();
    double slack = std::numeric_limits<double>::quiet_NaN();
    bool saturated = false;
    bool applicable = true;
    double alt_lhs = std::numeric_limits<double>::quiet_NaN();
    double alt_rhs = std::numeric_limits<double>::quiet_NaN();
    std::string alt_form;
};

/// Grid-derived profile of a single state: covariance, marginal entropies,
/// entropy powers, non-Gaussianities.
struct StateAnalysis {
    CovarianceMatrix cov;
    double hx = 0.0;
    double hp = 0.0;
    double power_x = 0.0;
    double power_p = 0.0;
    double dx = 0.0;
    double dp = 0.0;
    double hbar = 1.0;
};

StateAnalysis analyze(const FockDensity& rho, const EvalConfig& cfg = {});
StateAnalysis analyze(const FockVector& psi, const EvalConfig& cfg = {});

RelationVerdict heisenberg(const CovarianceMatrix& g, double sat_tol = 1e-4);
RelationVerdict schrodinger_robertson(const CovarianceMatrix& g,
                                      double sat_tol = 1e-4);

/// h(x) + h(p) >= ln(pi e hbar); secondary form Nx Np >= (hbar/2)^2.
RelationVerdict bbm(double hx, double hp, double hbar, double sat_tol = 1e-4);

/// Nx Np >= (hbar/2)^2; secondary form is the entropic one.
RelationVerdict epur_relation(double power_x, double power_p, double hbar,
                     double sat_tol = 1e-4);

/// h(x)+h(p) - I_G >= ln(pi e hbar) with I_G from the covariance matrix;
/// secondary form Nx Np >= (sxx spp / |gamma|) (hbar/2)^2.
RelationVerdict tight_epur(const StateAnalysis& a, double sat_tol = 1e-4);
RelationVerdict tight_epur(const FockDensity& rho, const EvalConfig& cfg = {});
RelationVerdict tight_epur(const FockVector& psi, const EvalConfig& cfg = {});

/// h(x,p) >= ln(pi e hbar) for states whose Wigner function clears the
/// negativity gate; otherwise returned with applicable = false.
RelationVerdict joint_conjecture(const FockDensity& rho, const EvalConfig& cfg = {});
RelationVerdict joint_conjecture(const FockVector& psi, const EvalConfig& cfg = {});

/// Value of the uncertainty functional F = h(x) + h(p) - I_G (the tight
/// relation's left-hand side).
double uncertainty_functional(const StateAnalysis& a);
double uncertainty_functional(const FockDensity& rho, const EvalConfig& cfg = {});

/// The full one-mode implication chain evaluated on one state.
struct ChainReport {
    StateAnalysis analysis;
    RelationVerdict variance_vs_power; // sxx spp >= Nx Np
    RelationVerdict power_product;     // Nx Np >= (hbar/2)^2
    RelationVerdict tight;             // tight relation, entropy-power form
    RelationVerdict sr_middle;         // |g| >= (Nx Np / sxx spp) |g| >= (hbar/2)^2
    RelationVerdict sr;                // |g| >= (hbar/2)^2
    RelationVerdict nongauss;          // sqrt|g| >= (hbar/2) e^{Dx+Dp}
    double min_slack() const;
};

ChainReport implication_chain(const FockDensity& rho, const EvalConfig& cfg = {});
ChainReport implication_chain(const FockVector& psi, const EvalConfig& cfg = {});

} // namespace epur
