// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Tolerances are pinned here, not configurable.

#include "epur/entropy.hpp"
#include "epur/experiments.hpp"
#include "epur/kernels.hpp"
#include "epur/multimode.hpp"
#include "epur/relations.hpp"
#include "epur/variational.hpp"
#include "epur/wigner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

using namespace epur;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    std::string what;
    std::vector<std::string> notes;
    bool ok = true;
    double seconds = 0.0;

    void require(bool cond, const std::string& detail) {
        if (!cond) {
            ok = false;
            notes.push_back(detail);
        }
    }
    void note(const std::string& detail) { notes.push_back(detail); }
};

void run(int id, const std::string& what,
         const std::function<void(Criterion&)>& body) {
    Criterion c{id, what, {}, true, 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", id,
                what.c_str(), c.seconds);
    for (const auto& n : c.notes) std::printf("        - %s\n", n.c_str());
    if (!c.ok) ++g_failures;
    std::fflush(stdout);
}

RunConfig acceptance_config() {
    RunConfig cfg;
    cfg.seed = 42;
    cfg.tol = 1e-4;
    cfg.plot = true;
    cfg.out_dir =
        (std::filesystem::temp_directory_path() / "epur_acceptance").string();
    return cfg;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
}

struct SweepCell {
    double r, theta, sr_slack, bbm_slack, tight_slack;
};

std::vector<SweepCell> gaussian_sweep_25(const RunConfig& cfg) {
    std::vector<SweepCell> cells;
    const auto r_grid = linspace(0.16, 0.8, 5);
    const auto theta_grid = linspace(0.0, M_PI / 2, 5);
    for (double r : r_grid)
        for (double theta : theta_grid) {
            const FockVector psi =
                squeezed_vacuum({r, 2 * theta, {0, 0}}, cfg.nmax, cfg.hbar);
            const StateAnalysis a = analyze(psi, cfg.eval);
            cells.push_back({r, theta, schrodinger_robertson(a.cov).slack,
                             bbm(a.hx, a.hp, cfg.hbar).slack,
                             tight_epur(a, cfg.eval.sat_tol).slack});
        }
    return cells;
}

} // namespace

int main() {
    const RunConfig cfg = acceptance_config();
    std::printf("acceptance suite (kernel backend: %s)\n",
                kernels::active().name);

    std::vector<SweepCell> sweep;

    run(1, "Gaussian saturation: 25 (r, theta) pairs, r <= 0.8", [&](Criterion& c) {
        const auto t0 = std::chrono::steady_clock::now();
        sweep = gaussian_sweep_25(cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        double max_tight = 0.0, max_sr = 0.0;
        for (const SweepCell& s : sweep) {
            max_tight = std::max(max_tight, std::abs(s.tight_slack));
            max_sr = std::max(max_sr, std::abs(s.sr_slack));
        }
        c.require(sweep.size() == 25, "expected 25 sweep cells");
        c.require(max_tight < 1e-4,
                  "max |tight slack| = " + format_double(max_tight));
        c.require(max_sr < 1e-8, "max |SR slack| = " + format_double(max_sr));
        c.require(secs < 120.0,
                  "sweep took " + format_double(secs) + "s, budget 120s");
        c.note("max |tight slack| " + format_double(max_tight) +
               ", max |SR slack| " + format_double(max_sr) + ", runtime " +
               format_double(secs) + "s");
    });

    run(2, "BBM gap equals the closed-form correction (2e-4)", [&](Criterion& c) {
        if (sweep.empty()) sweep = gaussian_sweep_25(cfg);
        double worst = 0.0, worst_diag = 0.0;
        for (const SweepCell& s : sweep) {
            const double gap = bbm_gap_closed_form(s.r, s.theta);
            worst = std::max(worst, std::abs(s.bbm_slack - gap));
            if (std::abs(s.theta - M_PI / 4) < 1e-12)
                worst_diag = std::max(
                    worst_diag,
                    std::abs(s.bbm_slack - std::log(std::cosh(2 * s.r))));
        }
        c.require(worst < 2e-4, "max |bbm slack - gap| = " + format_double(worst));
        c.require(worst_diag < 2e-4,
                  "max |bbm slack - ln cosh 2r| at theta=pi/4 = " +
                      format_double(worst_diag));
        c.note("sweep-wide gap error " + format_double(worst) +
               "; theta=pi/4 ln cosh 2r error " + format_double(worst_diag));
    });

    run(3, "Passive states N=0..20: joint-entropy bound", [&](Criterion& c) {
        const auto t0 = std::chrono::steady_clock::now();
        const CommandResult r = cmd_passive_scan(20, cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        c.require(r.violations == 0,
                  std::to_string(r.violations) + " bound violations");
        const double bound = std::log(M_PI * M_E * cfg.hbar);
        for (const auto& row : r.table.rows) {
            const double h_sum = std::stod(row[1]);
            const double h_joint = std::stod(row[2]);
            c.require(h_joint >= bound - 1e-4,
                      "N=" + row[0] + ": h(x,p) under the bound");
            c.require(h_sum >= h_joint - 1e-4,
                      "N=" + row[0] + ": h(x)+h(p) under h(x,p)");
        }
        c.require(secs < 300.0,
                  "scan took " + format_double(secs) + "s, budget 300s");
        c.note(std::string("monotone h_sum: ") +
               (r.manifest.at("monotone_h_sum").get<bool>() ? "yes" : "no") +
               ", monotone h_joint: " +
               (r.manifest.at("monotone_h_joint").get<bool>() ? "yes" : "no"));
    });

    run(4, "1000 Haar dim-4 states: no tight-relation violation", [&](Criterion& c) {
        const auto t0 = std::chrono::steady_clock::now();
        const CommandResult r = cmd_random_scan(1000, 4, cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        c.require(r.violations == 0,
                  std::to_string(r.violations) + " violations at -1e-4");
        c.require(r.table.rows.size() == 1000, "expected 1000 rows");
        const auto paths = write_outputs(r, cfg); // scatter + bound curve data
        c.note("min slack " + format_double(r.manifest.at("min_slack").get<double>()) +
               "; scatter written to " + paths.front());
        c.require(secs < 600.0, "runtime " + format_double(secs) + "s, budget 600s");
    });

    run(5, "500 neighborhood states (s=1.5, theta=pi/4, eps=0.01)", [&](Criterion& c) {
        const CommandResult r = cmd_neighborhood(1.5, M_PI / 4, 0.01, 500, 4, cfg);
        c.require(r.violations == 0,
                  std::to_string(r.violations) + " violations at -1e-4");
        write_outputs(r, cfg);
        c.note("min slack " + format_double(r.manifest.at("min_slack").get<double>()));
    });

    run(6, "Concavity: three reference mixtures over 21 lambdas", [&](Criterion& c) {
        const CommandResult r =
            cmd_concavity(default_concavity_pairs(cfg.hbar), 21, cfg);
        c.require(r.violations == 0,
                  std::to_string(r.violations) + " concavity defects below -1e-4");
        c.note("min defect " + format_double(r.manifest.at("min_defect").get<double>()));
    });

    run(7, "A-operator eigencheck residual < 1e-7 (r <= 0.8, all phi, nmax 80)",
        [&](Criterion& c) {
            double worst = 0.0;
            double worst_r = 0.0;
            for (double r : {0.2, 0.5, 0.8})
                for (double phi : {0.0, M_PI / 4, M_PI / 2, M_PI}) {
                    const double res = eigencheck({r, phi, {0, 0}}, 80).residual;
                    if (res > worst) {
                        worst = res;
                        worst_r = r;
                    }
                }
            c.require(worst < 1e-7, "max residual " + format_double(worst) +
                                        " at r = " + format_double(worst_r));
            c.note("max residual " + format_double(worst));
        });

    run(8, "Two-mode closed forms saturate exactly", [&](Criterion& c) {
        for (double r : {0.25, 0.6, 1.0}) {
            const double bbm_rot = nmode_bbm(rotated_pair(r)).slack;
            c.require(std::abs(bbm_rot - 2 * std::log(std::cosh(2 * r))) < 1e-12,
                      "rotated-pair bbm slack mismatch at r=" + format_double(r));
            c.require(std::abs(nmode_tight(rotated_pair(r)).slack) < 1e-12,
                      "rotated-pair tight slack not zero at r=" + format_double(r));
            c.require(std::abs(nmode_bbm(two_mode_squeezed(r)).slack) < 1e-12,
                      "two-mode-squeezed bbm slack not zero at r=" + format_double(r));
        }
    });

    run(9, "Chain inequalities: 200 Fock states and 200 random gammas",
        [&](Criterion& c) {
            double min_fock = 1e9;
            for (int t = 0; t < 200; ++t) {
                const int dim = 2 + static_cast<int>(trial_seed(7, t) % 5); // 2..6
                const FockVector psi =
                    haar_random_state(dim, dim + 2, trial_seed(cfg.seed, t));
                min_fock = std::min(min_fock,
                                    implication_chain(psi, cfg.eval).min_slack());
            }
            c.require(min_fock >= -1e-4,
                      "Fock chain min slack " + format_double(min_fock));
            c.note("Fock chain min slack " + format_double(min_fock));

            double min_mm = 1e9;
            for (int t = 0; t < 200; ++t) {
                const int n = 1 + static_cast<int>(trial_seed(11, t) % 4); // 1..4
                const GaussianState g =
                    random_physical_gamma(n, trial_seed(cfg.seed, 1000 + t));
                const auto [gx, gp] = reduced_blocks(g);
                const NModePowers p = nmode_entropy_powers(g);
                const double middle = std::pow(p.power_x * p.power_p, n) /
                                      (gx.determinant() * gp.determinant()) *
                                      g.det_gamma();
                min_mm = std::min(min_mm, g.det_gamma() - middle);
                min_mm = std::min(min_mm, middle - std::pow(0.25, n));
                min_mm = std::min(min_mm, nmode_tight(g).slack);
            }
            c.require(min_mm >= -1e-9,
                      "multimode chain min slack " + format_double(min_mm));
            c.note("multimode chain min slack " + format_double(min_mm));
        });

    run(10, "Counterexample search: dim 6, 50 restarts", [&](Criterion& c) {
        const CommandResult r = cmd_counterexample(6, 50, cfg);
        const double best = r.manifest.at("best_slack").get<double>();
        c.require(best >= -1e-4, "best slack " + format_double(best));
        c.note("best slack " + format_double(best));
    });

    run(11, "Numerical hygiene: grid doubling and nmax+16 stability",
        [&](Criterion& c) {
            EvalConfig base = cfg.eval;
            EvalConfig fine = base;
            fine.grid_points = 2 * base.grid_points;
            fine.wigner_points = 2 * base.wigner_npts();

            // Rotated squeezed vacuum: marginal entropies.
            const GaussianUnitarySpec spec{std::log(1.5), M_PI / 2, {0, 0}};
            const FockVector sq64 = squeezed_vacuum(spec, cfg.nmax, cfg.hbar);
            const StateAnalysis s_base = analyze(sq64, base);
            const StateAnalysis s_fine = analyze(sq64, fine);
            c.require(std::abs(s_base.hx - s_fine.hx) < 1e-6 &&
                          std::abs(s_base.hp - s_fine.hp) < 1e-6,
                      "squeezed marginal entropies move under grid doubling: " +
                          format_double(std::abs(s_base.hx - s_fine.hx)));

            const FockVector sq80 = squeezed_vacuum(spec, cfg.nmax + 16, cfg.hbar);
            const StateAnalysis s_deep = analyze(sq80, base);
            c.require(std::abs(s_base.hx - s_deep.hx) < 1e-5 &&
                          std::abs(s_base.hp - s_deep.hp) < 1e-5,
                      "squeezed marginal entropies move under nmax+16: " +
                          format_double(std::abs(s_base.hx - s_deep.hx)));

            // Haar state: marginal entropies.
            const FockVector haar64 =
                haar_random_state(4, cfg.nmax, trial_seed(cfg.seed, 0), cfg.hbar);
            const FockVector haar80 = haar_random_state(
                4, cfg.nmax + 16, trial_seed(cfg.seed, 0), cfg.hbar);
            const StateAnalysis h_base = analyze(haar64, base);
            const StateAnalysis h_fine = analyze(haar64, fine);
            const StateAnalysis h_deep = analyze(haar80, base);
            c.require(std::abs(h_base.hx - h_fine.hx) < 1e-6,
                      "haar h(x) moves under grid doubling");
            c.require(std::abs(h_base.hx - h_deep.hx) < 1e-5,
                      "haar h(x) moves under nmax+16");

            // Passive state: joint entropy under Wigner-grid doubling.
            const FockDensity pas5 = extremal_passive_state(5, 9, cfg.hbar);
            const FockDensity pas5_deep =
                extremal_passive_state(5, 9 + 16, cfg.hbar);
            const auto joint_at = [&](const FockDensity& rho, int npts) {
                const Grid1D g = default_grid(rho.top_occupied(0.0), cfg.hbar,
                                              npts);
                return joint_entropy(wigner(rho, g, g), base.neg_tol);
            };
            const double j_base = joint_at(pas5, base.wigner_npts());
            const double j_fine = joint_at(pas5, 2 * base.wigner_npts());
            const double j_deep = joint_at(pas5_deep, base.wigner_npts());
            c.require(std::abs(j_base - j_fine) < 1e-6,
                      "joint entropy moves under grid doubling: " +
                          format_double(std::abs(j_base - j_fine)));
            c.require(std::abs(j_base - j_deep) < 1e-5,
                      "joint entropy moves under nmax+16: " +
                          format_double(std::abs(j_base - j_deep)));
            c.note("dh(grid x2) = " + format_double(std::abs(j_base - j_fine)) +
                   ", dh(nmax+16) = " + format_double(std::abs(j_base - j_deep)));
        });

    std::printf("%d criterion failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
