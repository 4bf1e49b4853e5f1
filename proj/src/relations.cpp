#include "epur/relations.hpp"

#include <cmath>

namespace epur {

namespace {

RelationVerdict make(std::string name, double lhs, double rhs, double sat_tol) {
    RelationVerdict v;
    v.name = std::move(name);
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = lhs - rhs;
    v.saturated = std::abs(v.slack) < sat_tol;
    return v;
}

template <typename State>
StateAnalysis analyze_impl(const State& state, const EvalConfig& cfg) {
    const int neff = state.top_occupied(0.0);
    const Grid1D grid = default_grid(neff, state.hbar, cfg.grid_points,
                                     cfg.extent_multiplier);
    StateAnalysis a;
    a.hbar = state.hbar;
    a.cov = covariance(state);
    a.hx = differential_entropy(marginal_x(state, grid));
    a.hp = differential_entropy(marginal_p(state, grid));
    a.power_x = entropy_power(a.hx);
    a.power_p = entropy_power(a.hp);
    a.dx = nongaussianity(a.hx, a.cov.sxx);
    a.dp = nongaussianity(a.hp, a.cov.spp);
    return a;
}

template <typename State>
RelationVerdict joint_conjecture_impl(const State& state, const EvalConfig& cfg) {
    const int neff = state.top_occupied(0.0);
    const Grid1D grid = default_grid(neff, state.hbar, cfg.wigner_npts(),
                                     cfg.extent_multiplier);
    const WignerGrid w = wigner(state, grid, grid, cfg.gl_order);
    RelationVerdict v;
    v.name = "joint_conjecture";
    v.rhs = std::log(M_PI * M_E * state.hbar);
    try {
        const JointEntropyResult je = joint_entropy_detailed(w, cfg.neg_tol);
        v.lhs = je.value;
        v.slack = v.lhs - v.rhs;
        v.saturated = std::abs(v.slack) < cfg.sat_tol;
    } catch (const wigner_negative_error& e) {
        v.applicable = false;
        v.alt_lhs = e.min_value;
        v.alt_form = "min_wigner";
    }
    return v;
}

} // namespace

StateAnalysis analyze(const FockDensity& rho, const EvalConfig& cfg) {
    return analyze_impl(rho, cfg);
}

StateAnalysis analyze(const FockVector& psi, const EvalConfig& cfg) {
    return analyze_impl(psi, cfg);
}

RelationVerdict heisenberg(const CovarianceMatrix& g, double sat_tol) {
    return make("heisenberg", g.sxx * g.spp, 0.25 * g.hbar * g.hbar, sat_tol);
}

RelationVerdict schrodinger_robertson(const CovarianceMatrix& g, double sat_tol) {
    return make("schrodinger_robertson", g.determinant(),
                0.25 * g.hbar * g.hbar, sat_tol);
}

RelationVerdict bbm(double hx, double hp, double hbar, double sat_tol) {
    RelationVerdict v =
        make("bbm", hx + hp, std::log(M_PI * M_E * hbar), sat_tol);
    v.alt_lhs = entropy_power(hx) * entropy_power(hp);
    v.alt_rhs = 0.25 * hbar * hbar;
    v.alt_form = "entropy_power";
    return v;
}

RelationVerdict epur_relation(double power_x, double power_p, double hbar,
                     double sat_tol) {
    RelationVerdict v = make("epur", power_x * power_p, 0.25 * hbar * hbar,
                             sat_tol);
    v.alt_lhs = gaussian_entropy_1d(power_x) + gaussian_entropy_1d(power_p);
    v.alt_rhs = std::log(M_PI * M_E * hbar);
    v.alt_form = "entropic";
    return v;
}

RelationVerdict tight_epur(const StateAnalysis& a, double sat_tol) {
    const double ig = gaussian_mutual_information(a.cov);
    RelationVerdict v = make("tight_epur", a.hx + a.hp - ig,
                             std::log(M_PI * M_E * a.hbar), sat_tol);
    v.alt_lhs = a.power_x * a.power_p;
    v.alt_rhs = (a.cov.sxx * a.cov.spp / a.cov.determinant()) * 0.25 * a.hbar *
                a.hbar;
    v.alt_form = "entropy_power";
    return v;
}

RelationVerdict tight_epur(const FockDensity& rho, const EvalConfig& cfg) {
    return tight_epur(analyze(rho, cfg), cfg.sat_tol);
}

RelationVerdict tight_epur(const FockVector& psi, const EvalConfig& cfg) {
    return tight_epur(analyze(psi, cfg), cfg.sat_tol);
}

RelationVerdict joint_conjecture(const FockDensity& rho, const EvalConfig& cfg) {
    return joint_conjecture_impl(rho, cfg);
}

RelationVerdict joint_conjecture(const FockVector& psi, const EvalConfig& cfg) {
    return joint_conjecture_impl(psi, cfg);
}

double uncertainty_functional(const StateAnalysis& a) {
    return a.hx + a.hp - gaussian_mutual_information(a.cov);
}

double uncertainty_functional(const FockDensity& rho, const EvalConfig& cfg) {
    return uncertainty_functional(analyze(rho, cfg));
}

namespace {

ChainReport chain_from_analysis(StateAnalysis a, double sat_tol) {
    ChainReport r;
    const double hbar2 = 0.25 * a.hbar * a.hbar;
    const double var_prod = a.cov.sxx * a.cov.spp;
    const double pow_prod = a.power_x * a.power_p;
    const double det = a.cov.determinant();
    r.variance_vs_power = make("variance_vs_power", var_prod, pow_prod, sat_tol);
    r.power_product = epur_relation(a.power_x, a.power_p, a.hbar, sat_tol);
    r.tight = make("tight_epur_power", pow_prod, (var_prod / det) * hbar2, sat_tol);
    r.sr_middle = make("sr_middle", (pow_prod / var_prod) * det, hbar2, sat_tol);
    r.sr = make("schrodinger_robertson", det, hbar2, sat_tol);
    r.nongauss = make("nongaussianity_form", std::sqrt(det),
                      0.5 * a.hbar * std::exp(a.dx + a.dp), sat_tol);
    r.analysis = std::move(a);
    return r;
}

} // namespace

ChainReport implication_chain(const FockDensity& rho, const EvalConfig& cfg) {
    return chain_from_analysis(analyze(rho, cfg), cfg.sat_tol);
}

ChainReport implication_chain(const FockVector& psi, const EvalConfig& cfg) {
    return chain_from_analysis(analyze(psi, cfg), cfg.sat_tol);
}

double ChainReport::min_slack() const {
    double m = variance_vs_power.slack;
    m = std::min(m, power_product.slack);
    m = std::min(m, tight.slack);
    m = std::min(m, sr_middle.slack);
    m = std::min(m, sr.slack);
    m = std::min(m, nongauss.slack);
    return m;
}

} // namespace epur
