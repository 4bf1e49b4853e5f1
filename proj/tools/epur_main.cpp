#include "epur/experiments.hpp"
#include "epur/kernels.hpp"
#include "epur/version.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

namespace {

struct CliOptions {
    epur::RunConfig cfg;
    std::string kernels = "";
};

void add_shared_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--nmax", opt.cfg.nmax, "Fock-space cutoff")
        ->capture_default_str();
    cmd->add_option("--grid-points", opt.cfg.eval.grid_points,
                    "quadrature grid points per axis")
        ->capture_default_str();
    cmd->add_option("--grid-extent", opt.cfg.eval.extent_multiplier,
                    "multiplier on the default grid half-extent")
        ->capture_default_str();
    cmd->add_option("--hbar", opt.cfg.hbar, "value of hbar")
        ->capture_default_str();
    cmd->add_option("--seed", opt.cfg.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", opt.cfg.out_dir, "output directory")
        ->capture_default_str();
    cmd->add_option("--format", opt.cfg.format, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--plot", opt.cfg.plot, "emit an SVG plot");
    cmd->add_option("--tol", opt.cfg.tol,
                    "slack tolerance (nats) for assertions")
        ->capture_default_str();
    cmd->add_option("--wigner-points", opt.cfg.eval.wigner_points,
                    "Wigner grid points per axis (0 = same as --grid-points)")
        ->capture_default_str();
    cmd->add_option("--gl-order", opt.cfg.eval.gl_order,
                    "Gauss-Legendre order for the Wigner transform (0 = auto)")
        ->capture_default_str();
    cmd->add_option("--neg-tol", opt.cfg.eval.neg_tol,
                    "Wigner negativity gate for joint-entropy evaluation")
        ->capture_default_str();
    cmd->add_option("--kernels", opt.kernels,
                    "kernel backend: auto, scalar, avx2, neon");
}

int finish(const epur::CommandResult& result, const epur::RunConfig& cfg) {
    const auto paths = epur::write_outputs(result, cfg);
    std::cout << result.summary << "\n";
    for (const auto& p : paths) std::cout << "  wrote " << p << "\n";
    if (result.violations > 0) {
        std::cerr << result.name << ": " << result.violations
                  << " assertion violation(s); offending states serialized for replay"
                  << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic and entropy-power uncertainty-relation laboratory "
                 "for truncated-Fock-basis states"};
    app.set_version_flag("--version", epur::kVersion);
    app.require_subcommand(1);

    CliOptions opt;
    opt.cfg.eval.sat_tol = 1e-4;

    int n_top = 20;
    auto* passive = app.add_subcommand(
        "passive-scan", "joint entropies of extremal passive states");
    passive->add_option("--n-top", n_top, "largest photon number")
        ->capture_default_str();
    add_shared_flags(passive, opt);

    int trials_random = 1000, dim_random = 4;
    auto* random_scan = app.add_subcommand(
        "random-scan", "Haar-random states vs the covariance-corrected bound");
    random_scan->add_option("--trials", trials_random, "number of states")
        ->capture_default_str();
    random_scan->add_option("--dim", dim_random, "Haar unitary dimension")
        ->capture_default_str();
    add_shared_flags(random_scan, opt);

    double nb_s = 1.5, nb_theta = M_PI / 4.0, nb_eps = 0.01;
    int nb_trials = 500, nb_dim = 4;
    auto* neighborhood = app.add_subcommand(
        "neighborhood", "slightly non-Gaussian states around a squeezed state");
    neighborhood->add_option("--s", nb_s, "squeeze factor s = e^r")
        ->capture_default_str();
    neighborhood->add_option("--theta", nb_theta, "squeeze axis angle")
        ->capture_default_str();
    neighborhood->add_option("--eps", nb_eps, "admixture amplitude")
        ->capture_default_str();
    neighborhood->add_option("--trials", nb_trials, "number of states")
        ->capture_default_str();
    neighborhood->add_option("--dim", nb_dim, "Haar admixture dimension")
        ->capture_default_str();
    add_shared_flags(neighborhood, opt);

    int lambda_points = 21;
    std::vector<std::string> pair_files;
    auto* concavity = app.add_subcommand(
        "concavity", "concavity defect of the uncertainty functional");
    concavity->add_option("--lambda-points", lambda_points, "mixing grid size")
        ->capture_default_str();
    concavity
        ->add_option("--pair", pair_files,
                     "extra state-file pair (two JSON paths per use)")
        ->expected(2)
        ->allow_extra_args(false);
    add_shared_flags(concavity, opt);

    int ce_dim = 6, ce_restarts = 50;
    auto* counter = app.add_subcommand(
        "counterexample", "minimize the tight-relation slack over pure states");
    counter->add_option("--dim", ce_dim, "state dimension")->capture_default_str();
    counter->add_option("--restarts", ce_restarts, "random restarts")
        ->capture_default_str();
    add_shared_flags(counter, opt);

    double r_max = 0.8;
    int r_points = 5, theta_points = 5;
    auto* saturation = app.add_subcommand(
        "gaussian-saturation", "saturation sweep over rotated squeezed vacua");
    saturation->add_option("--r-max", r_max, "largest squeeze modulus")
        ->capture_default_str();
    saturation->add_option("--r-points", r_points, "r grid size")
        ->capture_default_str();
    saturation->add_option("--theta-points", theta_points, "theta grid size")
        ->capture_default_str();
    add_shared_flags(saturation, opt);

    std::string state_path;
    auto* check = app.add_subcommand(
        "check", "full relation report for a state JSON file");
    check->add_option("state", state_path, "path to a state JSON file")
        ->required();
    add_shared_flags(check, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!opt.kernels.empty()) epur::kernels::select(opt.kernels);

        if (passive->parsed())
            return finish(epur::cmd_passive_scan(n_top, opt.cfg), opt.cfg);
        if (random_scan->parsed())
            return finish(epur::cmd_random_scan(trials_random, dim_random, opt.cfg),
                          opt.cfg);
        if (neighborhood->parsed())
            return finish(epur::cmd_neighborhood(nb_s, nb_theta, nb_eps,
                                                 nb_trials, nb_dim, opt.cfg),
                          opt.cfg);
        if (concavity->parsed()) {
            auto pairs = epur::default_concavity_pairs(opt.cfg.hbar);
            for (std::size_t i = 0; i + 1 < pair_files.size(); i += 2) {
                const epur::FockDensity a =
                    epur::load_state_file(pair_files[i]).as_density();
                const epur::FockDensity b =
                    epur::load_state_file(pair_files[i + 1]).as_density();
                const int pad = std::max(a.nmax(), b.nmax()) + 4;
                pairs.push_back({"file_pair_" + std::to_string(i / 2),
                                 epur::embed(a, pad), epur::embed(b, pad)});
            }
            return finish(epur::cmd_concavity(pairs, lambda_points, opt.cfg),
                          opt.cfg);
        }
        if (counter->parsed())
            return finish(epur::cmd_counterexample(ce_dim, ce_restarts, opt.cfg),
                          opt.cfg);
        if (saturation->parsed()) {
            std::vector<double> r_grid, theta_grid;
            for (int i = 1; i <= r_points; ++i)
                r_grid.push_back(r_max * i / r_points);
            if (theta_points <= 1) theta_grid.push_back(M_PI / 4);
            else
                for (int i = 0; i < theta_points; ++i)
                    theta_grid.push_back(0.5 * M_PI * i / (theta_points - 1));
            return finish(
                epur::cmd_gaussian_saturation(r_grid, theta_grid, opt.cfg),
                opt.cfg);
        }
        if (check->parsed()) {
            const epur::LoadedState state = epur::load_state_file(state_path);
            return finish(epur::cmd_check(state, opt.cfg), opt.cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
