#include "epur/experiments.hpp"

#include "epur/entropy.hpp"
#include "epur/kernels.hpp"
#include "epur/variational.hpp"
#include "epur/version.hpp"
#include "epur/wigner.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>

namespace epur {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

nlohmann::json base_manifest(const std::string& command, const RunConfig& cfg) {
    return {
        {"command", command},
        {"version", kVersion},
        {"kernel_backend", kernels::active().name},
        {"hbar", cfg.hbar},
        {"nmax", cfg.nmax},
        {"seed", cfg.seed},
        {"tolerance", cfg.tol},
        {"sat_tol", cfg.eval.sat_tol},
        {"neg_tol", cfg.eval.neg_tol},
        {"grid",
         {{"points", cfg.eval.grid_points},
          {"wigner_points", cfg.eval.wigner_npts()},
          {"extent_multiplier", cfg.eval.extent_multiplier},
          {"gl_order", cfg.eval.gl_order}}},
    };
}

double log_pi_e_hbar(double hbar) { return std::log(M_PI * M_E * hbar); }

/// Nelder-Mead with standard coefficients; returns best point and value.
struct SimplexResult {
    std::vector<double> x;
    double f = 0.0;
    int iterations = 0;
    int evaluations = 0;
    std::vector<double> trace; // best value per iteration
};

template <typename F>
SimplexResult nelder_mead(F&& fn, std::vector<double> x0, double step,
                          int max_iter) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> pts(d + 1, x0);
    for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
    std::vector<double> fv(d + 1);
    SimplexResult res;
    for (std::size_t i = 0; i <= d; ++i) {
        fv[i] = fn(pts[i]);
        ++res.evaluations;
    }
    std::vector<std::size_t> order(d + 1);
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i <= d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0], worst = order[d], second = order[d - 1];
        res.trace.push_back(fv[best]);
        res.iterations = it + 1;
        if (std::abs(fv[worst] - fv[best]) < 1e-12) break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k];
        }
        for (double& c : centroid) c /= double(d);

        auto blend = [&](double t) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k)
                p[k] = centroid[k] + t * (centroid[k] - pts[worst][k]);
            return p;
        };

        std::vector<double> refl = blend(1.0);
        const double fr = fn(refl);
        ++res.evaluations;
        if (fr < fv[order[0]]) {
            std::vector<double> exp_pt = blend(2.0);
            const double fe = fn(exp_pt);
            ++res.evaluations;
            if (fe < fr) { pts[worst] = std::move(exp_pt); fv[worst] = fe; }
            else { pts[worst] = std::move(refl); fv[worst] = fr; }
        } else if (fr < fv[second]) {
            pts[worst] = std::move(refl);
            fv[worst] = fr;
        } else {
            std::vector<double> contr = blend(fr < fv[worst] ? 0.5 : -0.5);
            const double fc = fn(contr);
            ++res.evaluations;
            if (fc < std::min(fr, fv[worst])) {
                pts[worst] = std::move(contr);
                fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= d; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < d; ++k)
                        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                    fv[i] = fn(pts[i]);
                    ++res.evaluations;
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= d; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.f = fv[best];
    return res;
}

} // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

double bbm_gap_closed_form(double r, double theta) {
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    const double cp = std::cos(2.0 * theta);
    return 0.5 * std::log(c * c - cp * cp * s * s);
}

std::vector<std::string> write_outputs(const CommandResult& r,
                                       const RunConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    std::vector<std::string> paths;
    const std::string base = (fs::path(cfg.out_dir) / r.name).string();

    r.table.write(base, cfg.format);
    paths.push_back(base + (cfg.format == "json" ? ".json" : ".csv"));

    {
        const std::string mpath = base + "_manifest.json";
        std::ofstream out(mpath);
        out << r.manifest.dump(2) << "\n";
        paths.push_back(mpath);
    }
    for (std::size_t i = 0; i < r.offenders.size(); ++i) {
        const std::string opath =
            base + "_violation_" + std::to_string(i) + ".json";
        save_state_file(opath, r.offenders[i]);
        paths.push_back(opath);
    }
    if (r.svg && cfg.plot) {
        const std::string spath = base + ".svg";
        std::ofstream out(spath);
        out << *r.svg;
        paths.push_back(spath);
    }
    return paths;
}

CommandResult cmd_passive_scan(int n_top, const RunConfig& cfg) {
    CommandResult res;
    res.name = "passive_scan";
    res.table = Table({"N", "h_sum", "h_joint", "bound", "mutual_information",
                       "min_wigner", "clipped_mass"});
    const double bound = log_pi_e_hbar(cfg.hbar);

    struct Row {
        double h_sum, h_joint, minw, clipped;
    };
    std::vector<Row> rows(n_top + 1);
    detail::parallel_for(n_top + 1, [&](int n) {
        const FockDensity rho = extremal_passive_state(n, n + 4, cfg.hbar);
        const StateAnalysis a = analyze(rho, cfg.eval);
        const Grid1D wgrid = default_grid(n, cfg.hbar, cfg.eval.wigner_npts(),
                                          cfg.eval.extent_multiplier);
        const WignerGrid w = wigner(rho, wgrid, wgrid, cfg.eval.gl_order);
        const JointEntropyResult je = joint_entropy_detailed(w, cfg.eval.neg_tol);
        rows[n] = {a.hx + a.hp, je.value, je.min_value, je.clipped_mass};
    });

    bool monotone_sum = true, monotone_joint = true;
    for (int n = 0; n <= n_top; ++n) {
        const Row& r = rows[n];
        res.table.add_numeric_row({double(n), r.h_sum, r.h_joint, bound,
                                   r.h_sum - r.h_joint, r.minw, r.clipped});
        if (n > 0) {
            monotone_sum = monotone_sum && rows[n].h_sum >= rows[n - 1].h_sum - 1e-9;
            monotone_joint =
                monotone_joint && rows[n].h_joint >= rows[n - 1].h_joint - 1e-9;
        }
        const bool bad_bound = r.h_joint - bound < -cfg.tol;
        const bool bad_mi = r.h_joint > r.h_sum + cfg.tol;
        if (bad_bound || bad_mi) {
            ++res.violations;
            res.offenders.push_back(
                state_to_json(extremal_passive_state(n, n + 4, cfg.hbar)));
        }
    }

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["n_top"] = n_top;
    res.manifest["monotone_h_sum"] = monotone_sum;
    res.manifest["monotone_h_joint"] = monotone_joint;
    res.manifest["violations"] = res.violations;

    SvgPlot plot(640, 480, "Joint entropy of extremal passive states");
    plot.set_labels("N", "entropy (nats)");
    std::vector<std::pair<double, double>> sum_pts, joint_pts, bound_pts;
    for (int n = 0; n <= n_top; ++n) {
        sum_pts.emplace_back(n, rows[n].h_sum);
        joint_pts.emplace_back(n, rows[n].h_joint);
    }
    bound_pts.emplace_back(0, bound);
    bound_pts.emplace_back(n_top, bound);
    plot.add_line(bound_pts, "#555555", 1.5, true);
    plot.add_points(sum_pts, "#1f77b4");
    plot.add_points(joint_pts, "#d62728");
    res.svg = plot.render();

    res.summary = "passive-scan: N=0.." + std::to_string(n_top) + ", " +
                  std::to_string(res.violations) + " violation(s)";
    return res;
}

CommandResult cmd_random_scan(int trials, int dim, const RunConfig& cfg) {
    CommandResult res;
    res.name = "random_scan";
    res.table = Table({"trial", "rho", "h_sum", "bound", "slack"});
    const int nmax_state = std::max(cfg.nmax, dim + 2);

    struct Row {
        int trial;
        double rho, h_sum, bound, slack;
    };
    std::vector<Row> rows(trials);
    std::vector<char> bad(trials, 0);
    detail::parallel_for(trials, [&](int t) {
        const FockVector psi = haar_random_state(
            dim, nmax_state, trial_seed(cfg.seed, t), cfg.hbar);
        const StateAnalysis a = analyze(psi, cfg.eval);
        const RelationVerdict v = tight_epur(a, cfg.eval.sat_tol);
        const double rho_corr = correlation_coefficient(a.cov);
        rows[t] = {t, rho_corr, a.hx + a.hp,
                   v.rhs + gaussian_mutual_information(a.cov), v.slack};
        if (v.slack < -cfg.tol) bad[t] = 1;
    });

    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.rho < b.rho; });
    double min_slack = std::numeric_limits<double>::infinity();
    for (const Row& r : rows) {
        res.table.add_numeric_row(
            {double(r.trial), r.rho, r.h_sum, r.bound, r.slack});
        min_slack = std::min(min_slack, r.slack);
    }
    for (int t = 0; t < trials; ++t)
        if (bad[t]) {
            ++res.violations;
            res.offenders.push_back(state_to_json(haar_random_state(
                dim, nmax_state, trial_seed(cfg.seed, t), cfg.hbar)));
        }

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["trials"] = trials;
    res.manifest["dim"] = dim;
    res.manifest["violations"] = res.violations;
    res.manifest["min_slack"] = min_slack;

    SvgPlot plot(640, 480, "Random pure states vs covariance-corrected bound");
    plot.set_labels("correlation coefficient rho", "h(x)+h(p) (nats)");
    std::vector<std::pair<double, double>> pts, curve;
    for (const Row& r : rows) pts.emplace_back(r.rho, r.h_sum);
    const double rmax =
        std::max(std::abs(rows.front().rho), std::abs(rows.back().rho)) + 0.02;
    for (int i = 0; i <= 200; ++i) {
        const double x = -rmax + 2.0 * rmax * i / 200.0;
        curve.emplace_back(
            x, log_pi_e_hbar(cfg.hbar) - 0.5 * std::log(1.0 - x * x));
    }
    plot.add_line(curve, "#d62728", 2.0);
    plot.add_points(pts, "#1f77b4", 2.0);
    res.svg = plot.render();

    res.summary = "random-scan: " + std::to_string(trials) + " trials, dim " +
                  std::to_string(dim) + ", min slack " +
                  format_double(min_slack) + ", " +
                  std::to_string(res.violations) + " violation(s)";
    return res;
}

CommandResult cmd_neighborhood(double s, double theta, double eps, int trials,
                               int dim, const RunConfig& cfg) {
    if (!(s > 0.0)) throw std::invalid_argument("neighborhood: s must be positive");
    CommandResult res;
    res.name = "neighborhood";
    res.table = Table({"trial", "rho", "h_sum", "bound", "slack"});
    const double r = std::log(s);
    const GaussianUnitarySpec base_spec{r, 2.0 * theta, Complex(0, 0)};
    const FockVector base = squeezed_vacuum(base_spec, cfg.nmax, cfg.hbar);

    struct Row {
        int trial;
        double rho, h_sum, bound, slack;
    };
    std::vector<Row> rows(trials);
    std::vector<char> bad(trials, 0);
    auto make_state = [&](int t) {
        const FockVector admix = haar_random_state(
            dim, cfg.nmax, trial_seed(cfg.seed, t), cfg.hbar);
        Eigen::VectorXcd amps = base.amplitudes + eps * admix.amplitudes;
        return FockVector(std::move(amps), cfg.hbar);
    };
    detail::parallel_for(trials, [&](int t) {
        const FockVector psi = make_state(t);
        const StateAnalysis a = analyze(psi, cfg.eval);
        const RelationVerdict v = tight_epur(a, cfg.eval.sat_tol);
        rows[t] = {t, correlation_coefficient(a.cov), a.hx + a.hp,
                   v.rhs + gaussian_mutual_information(a.cov), v.slack};
        if (v.slack < -cfg.tol) bad[t] = 1;
    });

    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.rho < b.rho; });
    double min_slack = std::numeric_limits<double>::infinity();
    for (const Row& row : rows) {
        res.table.add_numeric_row(
            {double(row.trial), row.rho, row.h_sum, row.bound, row.slack});
        min_slack = std::min(min_slack, row.slack);
    }
    for (int t = 0; t < trials; ++t)
        if (bad[t]) {
            ++res.violations;
            res.offenders.push_back(state_to_json(make_state(t)));
        }

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["s"] = s;
    res.manifest["theta"] = theta;
    res.manifest["epsilon"] = eps;
    res.manifest["trials"] = trials;
    res.manifest["dim"] = dim;
    res.manifest["violations"] = res.violations;
    res.manifest["min_slack"] = min_slack;

    SvgPlot plot(640, 480, "Slightly non-Gaussian neighborhood states");
    plot.set_labels("correlation coefficient rho", "h(x)+h(p) (nats)");
    std::vector<std::pair<double, double>> pts, curve;
    for (const Row& row : rows) pts.emplace_back(row.rho, row.h_sum);
    const double lo = rows.front().rho - 0.005, hi = rows.back().rho + 0.005;
    for (int i = 0; i <= 200; ++i) {
        const double x = lo + (hi - lo) * i / 200.0;
        curve.emplace_back(
            x, log_pi_e_hbar(cfg.hbar) - 0.5 * std::log(1.0 - x * x));
    }
    plot.add_line(curve, "#d62728", 2.0);
    plot.add_points(pts, "#1f77b4", 2.0);
    res.svg = plot.render();

    res.summary = "neighborhood: " + std::to_string(trials) +
                  " trials, min slack " + format_double(min_slack) + ", " +
                  std::to_string(res.violations) + " violation(s)";
    return res;
}

std::vector<StatePair> default_concavity_pairs(double hbar) {
    const int nmax = 7;
    auto fock_proj = [&](int n) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(nmax + 1);
        c(n) = 1.0;
        return FockDensity::from_pure(FockVector(std::move(c), hbar));
    };
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(nmax + 1);
    psi(0) = Complex(0, 7);
    psi(2) = Complex(1, 0);
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(nmax + 1);
    phi(0) = Complex(1, 3);
    phi(1) = Complex(2, 5);
    phi(2) = Complex(1, 3);
    phi(3) = Complex(6, 8);
    return {
        {"fock0_fock1", fock_proj(0), fock_proj(1)},
        {"fock2_fock0", fock_proj(2), fock_proj(0)},
        {"psi_phi", FockDensity::from_pure(FockVector(std::move(psi), hbar)),
         FockDensity::from_pure(FockVector(std::move(phi), hbar))},
    };
}

CommandResult cmd_concavity(const std::vector<StatePair>& pairs,
                            int lambda_points, const RunConfig& cfg) {
    if (lambda_points < 2)
        throw std::invalid_argument("concavity: need at least 2 lambda points");
    CommandResult res;
    res.name = "concavity";
    res.table = Table({"pair", "lambda", "F_mixture", "F_chord", "defect"});

    double min_defect = std::numeric_limits<double>::infinity();
    std::vector<std::vector<std::pair<double, double>>> curves, chords;
    for (const StatePair& pr : pairs) {
        const double fa = uncertainty_functional(pr.a, cfg.eval);
        const double fb = uncertainty_functional(pr.b, cfg.eval);
        std::vector<double> fmix(lambda_points);
        detail::parallel_for(lambda_points, [&](int k) {
            const double lam = double(k) / (lambda_points - 1);
            const FockDensity mixed = mix({pr.a, pr.b}, {lam, 1.0 - lam});
            fmix[k] = uncertainty_functional(mixed, cfg.eval);
        });
        std::vector<std::pair<double, double>> curve, chord;
        for (int k = 0; k < lambda_points; ++k) {
            const double lam = double(k) / (lambda_points - 1);
            const double combo = lam * fa + (1.0 - lam) * fb;
            const double defect = fmix[k] - combo;
            min_defect = std::min(min_defect, defect);
            res.table.add_row({pr.label, format_double(lam),
                               format_double(fmix[k]), format_double(combo),
                               format_double(defect)});
            curve.emplace_back(lam, fmix[k]);
            chord.emplace_back(lam, combo);
            if (defect < -cfg.tol) {
                ++res.violations;
                res.offenders.push_back(
                    state_to_json(mix({pr.a, pr.b}, {lam, 1.0 - lam})));
            }
        }
        curves.push_back(std::move(curve));
        chords.push_back(std::move(chord));
    }

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["lambda_points"] = lambda_points;
    res.manifest["pairs"] = [&] {
        nlohmann::json names = nlohmann::json::array();
        for (const auto& p : pairs) names.push_back(p.label);
        return names;
    }();
    res.manifest["min_defect"] = min_defect;
    res.manifest["violations"] = res.violations;

    SvgPlot plot(640, 480, "Concavity of the uncertainty functional");
    plot.set_labels("lambda", "F (nats)");
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    for (std::size_t i = 0; i < curves.size(); ++i) {
        plot.add_line(curves[i], colors[i % 4], 2.0);
        plot.add_line(chords[i], colors[i % 4], 1.0, true);
    }
    res.svg = plot.render();

    res.summary = "concavity: min defect " + format_double(min_defect) + ", " +
                  std::to_string(res.violations) + " violation(s)";
    return res;
}

CommandResult cmd_counterexample(int dim, int restarts, const RunConfig& cfg) {
    if (dim < 2) throw std::invalid_argument("counterexample: dim must be >= 2");
    CommandResult res;
    res.name = "counterexample";
    res.table = Table({"restart", "best_slack", "iterations", "evaluations"});
    const int nmax_state = dim + 2;

    auto params_to_state = [&](const std::vector<double>& x) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(nmax_state + 1);
        double norm2 = 0.0;
        for (int n = 0; n < dim; ++n) {
            c(n) = Complex(x[2 * n], x[2 * n + 1]);
            norm2 += std::norm(c(n));
        }
        if (norm2 < 1e-20) c(0) = 1.0;
        return FockVector(std::move(c), cfg.hbar);
    };
    auto objective = [&](const std::vector<double>& x) {
        const FockVector psi = params_to_state(x);
        return tight_epur(analyze(psi, cfg.eval), cfg.eval.sat_tol).slack;
    };

    struct RestartOutcome {
        SimplexResult sim;
    };
    std::vector<RestartOutcome> outcomes(restarts);
    detail::parallel_for(restarts, [&](int rs) {
        std::mt19937_64 rng(trial_seed(cfg.seed, rs));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> x0(2 * dim);
        double norm2 = 0.0;
        for (double& xi : x0) {
            xi = gauss(rng);
            norm2 += xi * xi;
        }
        for (double& xi : x0) xi /= std::sqrt(norm2);
        outcomes[rs].sim = nelder_mead(objective, std::move(x0), 0.15, 400);
    });

    int best_restart = 0;
    for (int rs = 0; rs < restarts; ++rs) {
        const auto& sim = outcomes[rs].sim;
        res.table.add_numeric_row({double(rs), sim.f, double(sim.iterations),
                                   double(sim.evaluations)});
        if (sim.f < outcomes[best_restart].sim.f) best_restart = rs;
    }
    const SimplexResult& best = outcomes[best_restart].sim;
    const FockVector best_state = params_to_state(best.x);
    const CovarianceMatrix best_cov = covariance(best_state);

    // Scale-nearest pure-Gaussian covariance (same shape, |gamma| = (hbar/2)^2).
    const double scale =
        0.5 * cfg.hbar / std::sqrt(best_cov.determinant());
    const double gauss_distance = std::max(
        {std::abs(best_cov.sxx * scale - best_cov.sxx),
         std::abs(best_cov.spp * scale - best_cov.spp),
         std::abs(best_cov.sxp * scale - best_cov.sxp)});

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["dim"] = dim;
    res.manifest["restarts"] = restarts;
    res.manifest["best_slack"] = best.f;
    res.manifest["best_restart"] = best_restart;
    res.manifest["best_state"] = state_to_json(best_state);
    res.manifest["nearest_gaussian_covariance_distance"] = gauss_distance;
    res.manifest["convergence_trace"] = best.trace;
    res.manifest["violations"] = 0;

    SvgPlot plot(640, 480, "Counterexample search convergence (best restart)");
    plot.set_labels("iteration", "best slack (nats)");
    std::vector<std::pair<double, double>> trace_pts;
    for (std::size_t i = 0; i < best.trace.size(); ++i)
        trace_pts.emplace_back(double(i), best.trace[i]);
    plot.add_line(trace_pts, "#1f77b4", 2.0);
    res.svg = plot.render();

    res.summary = "counterexample: dim " + std::to_string(dim) + ", " +
                  std::to_string(restarts) + " restarts, best slack " +
                  format_double(best.f);
    return res;
}

CommandResult cmd_gaussian_saturation(const std::vector<double>& r_grid,
                                      const std::vector<double>& theta_grid,
                                      const RunConfig& cfg) {
    CommandResult res;
    res.name = "gaussian_saturation";
    res.table = Table({"r", "theta", "sxx", "spp", "sxp", "sr_slack",
                       "bbm_slack", "bbm_gap_closed_form", "tight_slack",
                       "eigencheck_residual"});

    struct Cell {
        double r, theta, sxx, spp, sxp, sr, bbm_slack, gap, tight, residual;
        bool bad;
    };
    const int total = static_cast<int>(r_grid.size() * theta_grid.size());
    std::vector<Cell> cells(total);
    detail::parallel_for(total, [&](int idx) {
        const double r = r_grid[idx / theta_grid.size()];
        const double theta = theta_grid[idx % theta_grid.size()];
        const GaussianUnitarySpec spec{r, 2.0 * theta, Complex(0, 0)};
        const FockVector psi = squeezed_vacuum(spec, cfg.nmax, cfg.hbar);
        const StateAnalysis a = analyze(psi, cfg.eval);
        const RelationVerdict sr = schrodinger_robertson(a.cov, cfg.eval.sat_tol);
        const RelationVerdict b = bbm(a.hx, a.hp, a.hbar, cfg.eval.sat_tol);
        const RelationVerdict t = tight_epur(a, cfg.eval.sat_tol);
        const double gap = bbm_gap_closed_form(r, theta);
        const double residual =
            eigencheck(spec, cfg.nmax, cfg.hbar).residual;
        const bool bad = std::abs(t.slack) >= cfg.tol ||
                         std::abs(sr.slack) >= 1e-8 ||
                         std::abs(b.slack - gap) >= 2.0 * cfg.tol;
        cells[idx] = {r,   theta,       a.cov.sxx, a.cov.spp, a.cov.sxp,
                      sr.slack, b.slack, gap,       t.slack,   residual,
                      bad};
    });

    for (const Cell& c : cells) {
        res.table.add_numeric_row({c.r, c.theta, c.sxx, c.spp, c.sxp, c.sr,
                                   c.bbm_slack, c.gap, c.tight, c.residual});
        if (c.bad) {
            ++res.violations;
            const GaussianUnitarySpec spec{c.r, 2.0 * c.theta, Complex(0, 0)};
            res.offenders.push_back(
                state_to_json(squeezed_vacuum(spec, cfg.nmax, cfg.hbar)));
        }
    }

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["r_grid"] = r_grid;
    res.manifest["theta_grid"] = theta_grid;
    res.manifest["violations"] = res.violations;

    SvgPlot plot(640, 480, "Saturation sweep over rotated squeezed vacua");
    plot.set_labels("r", "slack (nats)");
    std::vector<std::pair<double, double>> bbm_pts, tight_pts;
    for (const Cell& c : cells) {
        bbm_pts.emplace_back(c.r, c.bbm_slack);
        tight_pts.emplace_back(c.r, c.tight);
    }
    plot.add_points(bbm_pts, "#d62728", 2.5);
    plot.add_points(tight_pts, "#1f77b4", 2.5);
    res.svg = plot.render();

    res.summary = "gaussian-saturation: " + std::to_string(total) +
                  " states, " + std::to_string(res.violations) +
                  " violation(s)";
    return res;
}

CommandResult cmd_check(const LoadedState& state, const RunConfig& cfg) {
    CommandResult res;
    res.name = "check";
    res.table = Table({"relation", "lhs", "rhs", "slack", "saturated",
                       "applicable", "alt_lhs", "alt_rhs", "alt_form"});

    // Re-embed with headroom so minimal state files (amplitudes only up to
    // the last occupied level) satisfy the truncation-adequacy rule.
    LoadedState st = state;
    const int pad = std::max(cfg.nmax,
                             (st.pure ? st.pure->nmax() : st.density->nmax()) + 4);
    if (st.pure) st.pure = embed(*st.pure, pad);
    if (st.density) st.density = embed(*st.density, pad);

    const StateAnalysis a = st.pure ? analyze(*st.pure, cfg.eval)
                                    : analyze(*st.density, cfg.eval);
    std::vector<RelationVerdict> verdicts;
    verdicts.push_back(heisenberg(a.cov, cfg.eval.sat_tol));
    verdicts.push_back(schrodinger_robertson(a.cov, cfg.eval.sat_tol));
    verdicts.push_back(bbm(a.hx, a.hp, a.hbar, cfg.eval.sat_tol));
    verdicts.push_back(epur_relation(a.power_x, a.power_p, a.hbar, cfg.eval.sat_tol));
    verdicts.push_back(tight_epur(a, cfg.eval.sat_tol));
    verdicts.push_back(st.pure ? joint_conjecture(*st.pure, cfg.eval)
                               : joint_conjecture(*st.density, cfg.eval));
    const ChainReport chain = st.pure ? implication_chain(*st.pure, cfg.eval)
                                      : implication_chain(*st.density, cfg.eval);
    verdicts.push_back(chain.variance_vs_power);
    verdicts.push_back(chain.sr_middle);
    verdicts.push_back(chain.nongauss);

    for (const RelationVerdict& v : verdicts)
        res.table.add_row({v.name, format_double(v.lhs), format_double(v.rhs),
                           format_double(v.slack), v.saturated ? "true" : "false",
                           v.applicable ? "true" : "false",
                           format_double(v.alt_lhs), format_double(v.alt_rhs),
                           v.alt_form});

    res.manifest = base_manifest(res.name, cfg);
    res.manifest["analysis"] = {
        {"mean_x", a.cov.mean_x},
        {"mean_p", a.cov.mean_p},
        {"sxx", a.cov.sxx},
        {"spp", a.cov.spp},
        {"sxp", a.cov.sxp},
        {"det_gamma", a.cov.determinant()},
        {"hx", a.hx},
        {"hp", a.hp},
        {"entropy_power_x", a.power_x},
        {"entropy_power_p", a.power_p},
        {"nongaussianity_x", a.dx},
        {"nongaussianity_p", a.dp},
        {"correlation", correlation_coefficient(a.cov)},
        {"gaussian_mutual_information", gaussian_mutual_information(a.cov)},
        {"gaussian_purity",
         a.cov.physical() ? gaussian_purity(a.cov)
                          : std::numeric_limits<double>::quiet_NaN()},
    };
    res.manifest["violations"] = 0;

    res.summary = "check: tight slack " +
                  format_double(verdicts[4].slack) + ", SR slack " +
                  format_double(verdicts[1].slack);
    return res;
}

} // namespace epur
