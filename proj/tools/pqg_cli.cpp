#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pqg/decoherence.hpp"
#include "pqg/gravatom.hpp"
#include "pqg/lensing.hpp"
#include "pqg/qstate.hpp"
#include "pqg/svg.hpp"
#include "pqg/units.hpp"
#include "pqg/wavepacket.hpp"

namespace {

constexpr double kSecondsPerGyr = 3.15576e16;  // Julian

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

int thread_cap() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PRIMORDIAL_QG_THREADS")) {
        const int requested = std::atoi(env);
        if (requested >= 1) return std::min<int>(requested, hw);
    }
    return static_cast<int>(hw);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw pqg::IoError("cannot open output file " + path);
    return out;
}

/// Writes to a file when path is nonempty, otherwise to stdout.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    auto out = open_output(path);
    out << content;
    if (!out.good()) throw pqg::IoError("write failure for " + path);
}

struct GammaOptions {
    double mass_kg = 0.0;
    double temp_k = 0.0;
    std::string species = "photon";
    std::string method = "closed";
    double fermion_mass_kg = 0.0;
    double spread_d = 1.0;  // natural length^2
    double purity_drop = 0.01;
    double rel_tol = 1e-10;
    std::string out;
};

void run_gamma(const GammaOptions& opt) {
    pqg::DecoherenceSummary summary;
    if (opt.species == "fermion") {
        summary = pqg::gamma0_fermion(opt.mass_kg, opt.fermion_mass_kg, opt.temp_k,
                                      pqg::SpreadBound(opt.spread_d), opt.rel_tol,
                                      opt.purity_drop);
    } else if (opt.method == "quadrature") {
        summary =
            pqg::gamma0_photon_quadrature(opt.mass_kg, opt.temp_k, opt.rel_tol, opt.purity_drop);
    } else {
        summary = pqg::gamma0_photon_closed(opt.mass_kg, opt.temp_k, opt.purity_drop);
    }
    std::ostringstream s;
    s.precision(17);
    s << "gamma0_per_s,t001_s\n" << summary.gamma0_si << ',' << summary.t_fraction << '\n';
    emit(opt.out, s.str());
}

struct SweepOptions {
    double mass_kg = 1.0;
    double t_min_k = 2.7;
    double t_max_k = 3000.0;
    int points = 50;
    std::string out;
    std::string svg;
};

void run_sweep(const SweepOptions& opt) {
    if (!(opt.t_min_k > 0.0 && opt.t_min_k < opt.t_max_k) || opt.points < 2) {
        throw CLI::ValidationError("sweep", "require 0 < tmin < tmax and points >= 2");
    }
    // Rows are independent; compute in parallel, emit in temperature order.
    std::vector<pqg::SweepRow> rows(opt.points);
    const int threads = std::min(thread_cap(), opt.points);
    std::vector<std::future<void>> work;
    std::atomic<int> next{0};
    const double log_min = std::log(opt.t_min_k);
    const double log_max = std::log(opt.t_max_k);
    for (int t = 0; t < threads; ++t) {
        work.push_back(std::async(std::launch::async, [&] {
            for (int i = next.fetch_add(1); i < opt.points; i = next.fetch_add(1)) {
                const double T =
                    std::exp(log_min + (log_max - log_min) * i / (opt.points - 1));
                const auto summary = pqg::gamma0_photon_closed(opt.mass_kg, T, 0.01);
                rows[i] = {T, summary.gamma0_si, summary.t_fraction};
            }
        }));
    }
    for (auto& w : work) w.get();

    std::ostringstream s;
    pqg::write_sweep_csv(rows, s);
    emit(opt.out, s.str());

    if (!opt.svg.empty()) {
        pqg::PlotSeries gamma{"gamma0 [1/s]", {}, {}};
        pqg::PlotSeries t001{"t_0.01 [s]", {}, {}};
        for (const auto& row : rows) {
            gamma.x.push_back(row.temperature_K);
            gamma.y.push_back(row.gamma0_per_s);
            t001.x.push_back(row.temperature_K);
            t001.y.push_back(row.t001_s);
        }
        auto out = open_output(opt.svg);
        pqg::write_svg_plot(out, {gamma, t001}, "temperature [K]", "rate / time", true, true);
    }
}

struct EvolveOptions {
    int n = 64;
    double dk = 0.25;
    double k_center = 0.0;
    double mass_natural = 1.0;
    double beta = 1.0;
    double sigma_k = 1.0;
    int steps = 200;
    double dt = 0.0;  // 0 = auto from the discrete bound
    std::string init = "gaussian";
    std::uint64_t seed = 0;
    std::string dump;
    std::string out;
};

void run_evolve(const EvolveOptions& opt) {
    const pqg::MomentumGrid grid(opt.n, opt.k_center, opt.dk);
    const auto env = pqg::ThermalEnvironment::photon(opt.beta);
    const pqg::CouplingKernel kernel(opt.mass_natural);
    pqg::DensityMatrixGrid state =
        opt.init == "random"
            ? pqg::random_mixed_state(grid, std::max(2, opt.n / 8), opt.seed)
            : pqg::gaussian_state(grid, opt.k_center, opt.sigma_k);

    const double gamma_d = pqg::discrete_gamma0(env, kernel, grid);
    const double dt = opt.dt > 0.0 ? opt.dt : 0.02 / gamma_d;

    std::vector<pqg::PuritySample> trajectory;
    trajectory.push_back({0.0, pqg::purity(state)});
    for (int step = 1; step <= opt.steps; ++step) {
        state = pqg::evolve_step(state, env, kernel, dt);
        trajectory.push_back({step * dt, pqg::purity(state)});
    }

    std::ostringstream s;
    s.precision(17);
    s << "t,purity\n";
    for (const auto& sample : trajectory) s << sample.t << ',' << sample.purity << '\n';
    s << "# measured_decay_rate=" << pqg::measured_decay_rate(trajectory)
      << " discrete_gamma0=" << gamma_d << '\n';
    emit(opt.out, s.str());

    if (!opt.dump.empty()) pqg::save_snapshot(state, opt.dump);
}

struct SpreadOptions {
    double mass_kg = 0.0;
    double mass_gev = 0.0;
    double time_s = 0.0;
    double time_gyr = 0.0;
    double s0_m = 0.0;
    std::string out;
};

void run_spread(const SpreadOptions& opt) {
    const double mass =
        opt.mass_kg > 0.0 ? opt.mass_kg : pqg::mass_kg_from_gev(opt.mass_gev);
    const double elapsed = opt.time_s > 0.0 ? opt.time_s : opt.time_gyr * kSecondsPerGyr;
    std::ostringstream s;
    s.precision(17);
    if (opt.s0_m > 0.0) {
        s << "s_m\n" << pqg::spread_at({mass, opt.s0_m, elapsed}) << '\n';
    } else {
        s << "s_min_m\n" << pqg::minimal_spread(mass, elapsed) << '\n';
    }
    emit(opt.out, s.str());
}

struct SpectrumOptions {
    double mass_gev = 0.0;
    int n_max = 5;
    bool cycles = false;
    std::string out;
    std::string lines_out;
};

void run_spectrum(const SpectrumOptions& opt) {
    const auto spec = pqg::spectrum(opt.mass_gev, opt.n_max, opt.cycles);
    std::ostringstream levels;
    pqg::write_levels_csv(spec, levels);
    emit(opt.out, levels.str());
    std::string lines_path = opt.lines_out;
    if (lines_path.empty() && !opt.out.empty()) lines_path = opt.out + ".lines.csv";
    std::ostringstream lines;
    pqg::write_lines_csv(spec, lines);
    emit(lines_path, lines.str());
}

struct LensingOptions {
    double lens_mass = 0.5;
    double omega = 20.0;
    std::vector<double> centers{-0.6, 0.6};
    std::vector<double> weights;
    double sigma = 0.002;
    int theta_points = 801;
    double theta_halfwidth = 1.5;
    std::string out;
    std::string svg;
};

void run_lensing(const LensingOptions& opt) {
    std::vector<double> weights = opt.weights;
    if (weights.empty()) weights.assign(opt.centers.size(), 1.0);
    const auto scene = pqg::make_scene(opt.lens_mass, opt.omega, opt.centers, weights,
                                       opt.sigma, opt.theta_points, opt.theta_halfwidth);
    const auto classical = pqg::intensity_classical(scene);
    const auto quantum = pqg::intensity_quantum(scene);
    std::ostringstream s;
    pqg::write_lensing_csv(classical, quantum, s);
    emit(opt.out, s.str());

    if (!opt.svg.empty()) {
        pqg::PlotSeries cl{"I_cl", {}, {}};
        pqg::PlotSeries qg{"I_qg", {}, {}};
        for (int i = 0; i < classical.theta_grid.size(); ++i) {
            cl.x.push_back(classical.theta_grid(i));
            cl.y.push_back(classical.values(i));
            qg.x.push_back(quantum.theta_grid(i));
            qg.y.push_back(quantum.values(i));
        }
        auto out = open_output(opt.svg);
        pqg::write_svg_plot(out, {cl, qg}, "theta", "intensity", false, false);
    }
}

struct WitnessOptions {
    int n = 32;
    double dk = 0.4;
    double k_center = 0.0;
    double sigma_k = 1.0;
    double corr = 0.0;
    std::string out;
};

void run_witness(const WitnessOptions& opt) {
    const pqg::MomentumGrid grid(opt.n, opt.k_center, opt.dk);
    const auto state = pqg::correlated_gaussian(grid, opt.k_center, opt.sigma_k, opt.corr);
    std::ostringstream s;
    s.precision(17);
    s << "corr,tr_rho1_sq\n" << opt.corr << ',' << pqg::reduced_purity(state) << '\n';
    emit(opt.out, s.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gravitational decoherence of primordial massive particles: rates, "
                 "master-equation evolution, and observational signatures"};
    app.set_config("--config", "", "TOML config file; explicit flags take precedence");
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for randomized initial states");

    GammaOptions gamma;
    auto* cmd_gamma = app.add_subcommand("gamma", "Purity-decay bound Gamma0 and t_0.01");
    cmd_gamma->add_option("--mass-kg", gamma.mass_kg, "System mass [kg]")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gamma->add_option("--temp-k", gamma.temp_k, "Bath temperature [K]")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gamma->add_option("--species", gamma.species, "Bath species: photon|fermion")
        ->check(CLI::IsMember({"photon", "fermion"}));
    cmd_gamma->add_option("--method", gamma.method, "photon evaluation: closed|quadrature")
        ->check(CLI::IsMember({"closed", "quadrature"}));
    cmd_gamma->add_option("--fermion-mass-kg", gamma.fermion_mass_kg,
                          "Bath fermion mass [kg] (fermion species only)");
    cmd_gamma->add_option("--spread-d", gamma.spread_d,
                          "Spread bound D = <x^2> tr rho^2 [natural length^2]");
    cmd_gamma->add_option("--drop", gamma.purity_drop, "Purity drop fraction in (0,1)");
    cmd_gamma->add_option("--rel-tol", gamma.rel_tol, "Quadrature relative tolerance");
    cmd_gamma->add_option("--out", gamma.out, "Output CSV path (default: stdout)");

    SweepOptions sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Temperature sweep of Gamma0 and t_0.01");
    cmd_sweep->add_option("--mass-kg", sweep.mass_kg, "System mass [kg]")
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--tmin-k", sweep.t_min_k, "Lowest temperature [K]");
    cmd_sweep->add_option("--tmax-k", sweep.t_max_k, "Highest temperature [K]");
    cmd_sweep->add_option("--points", sweep.points, "Number of log-spaced rows");
    cmd_sweep->add_option("--out", sweep.out, "Output CSV path (default: stdout)");
    cmd_sweep->add_option("--svg", sweep.svg, "Optional SVG plot path");

    EvolveOptions evolve;
    auto* cmd_evolve =
        app.add_subcommand("evolve", "Evolve a density matrix under the master equation");
    cmd_evolve->add_option("--n", evolve.n, "Grid size");
    cmd_evolve->add_option("--dk", evolve.dk, "Grid spacing [natural momentum]");
    cmd_evolve->add_option("--k-center", evolve.k_center, "Grid center [natural momentum]");
    cmd_evolve->add_option("--mass-natural", evolve.mass_natural, "System mass [Planck units]");
    cmd_evolve->add_option("--beta", evolve.beta, "Inverse temperature [natural]");
    cmd_evolve->add_option("--sigma-k", evolve.sigma_k,
                           "Gaussian momentum width [natural] (gaussian init)");
    cmd_evolve->add_option("--steps", evolve.steps, "Number of explicit steps");
    cmd_evolve->add_option("--dt", evolve.dt, "Step [natural time]; 0 = auto");
    cmd_evolve->add_option("--init", evolve.init, "Initial state: gaussian|random")
        ->check(CLI::IsMember({"gaussian", "random"}));
    cmd_evolve->add_option("--dump", evolve.dump, "Final-state snapshot CSV path");
    cmd_evolve->add_option("--out", evolve.out, "Trajectory CSV path (default: stdout)");

    SpreadOptions spread;
    auto* cmd_spread = app.add_subcommand("spread", "Free Gaussian wavepacket spread");
    cmd_spread->add_option("--mass-kg", spread.mass_kg, "Particle mass [kg]");
    cmd_spread->add_option("--mass-gev", spread.mass_gev, "Particle mass [GeV/c^2]");
    cmd_spread->add_option("--time-s", spread.time_s, "Elapsed time [s]");
    cmd_spread->add_option("--time-gyr", spread.time_gyr, "Elapsed time [Gyr]");
    cmd_spread->add_option("--s0-m", spread.s0_m,
                           "Initial spread [m]; omit for the minimal spread");
    cmd_spread->add_option("--out", spread.out, "Output CSV path (default: stdout)");

    SpectrumOptions spectrum;
    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "Gravitational-atom levels and transition lines");
    cmd_spectrum->add_option("--mass-gev", spectrum.mass_gev, "Particle mass [GeV/c^2]")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--nmax", spectrum.n_max, "Highest principal quantum number");
    cmd_spectrum->add_flag("--cycles", spectrum.cycles,
                           "Report line frequencies divided by 2 pi");
    cmd_spectrum->add_option("--out", spectrum.out, "Levels CSV path (default: stdout)");
    cmd_spectrum->add_option("--lines-out", spectrum.lines_out,
                             "Lines CSV path (default: <out>.lines.csv)");

    LensingOptions lensing;
    auto* cmd_lensing =
        app.add_subcommand("lensing", "Semiclassical vs coherent lensing intensities");
    cmd_lensing->add_option("--lens-mass", lensing.lens_mass, "Lens mass [natural]");
    cmd_lensing->add_option("--omega", lensing.omega, "Source angular frequency [natural]");
    cmd_lensing->add_option("--centers", lensing.centers,
                            "Branch centers [Einstein-angle units]");
    cmd_lensing->add_option("--weights", lensing.weights, "Branch weights");
    cmd_lensing->add_option("--sigma", lensing.sigma, "Branch width [Einstein-angle units]");
    cmd_lensing->add_option("--theta-points", lensing.theta_points, "Observation angles");
    cmd_lensing->add_option("--theta-halfwidth", lensing.theta_halfwidth,
                            "Observation half-range [Einstein-angle units]");
    cmd_lensing->add_option("--out", lensing.out, "Output CSV path (default: stdout)");
    cmd_lensing->add_option("--svg", lensing.svg, "Optional SVG plot path");

    WitnessOptions witness;
    auto* cmd_witness =
        app.add_subcommand("witness", "Entanglement-purity witness tr rho_1^2");
    cmd_witness->add_option("--n", witness.n, "Grid size per particle");
    cmd_witness->add_option("--dk", witness.dk, "Grid spacing [natural momentum]");
    cmd_witness->add_option("--sigma-k", witness.sigma_k, "Gaussian width [natural momentum]");
    cmd_witness->add_option("--corr", witness.corr, "Momentum correlation in (-1, 1)");
    cmd_witness->add_option("--out", witness.out, "Output CSV path (default: stdout)");

    // Let global options (--seed) appear after the subcommand name.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
        evolve.seed = seed;
        if (cmd_gamma->parsed()) {
            if (gamma.species == "fermion" && !(gamma.fermion_mass_kg > 0.0)) {
                std::cerr << "gamma: --fermion-mass-kg is required for a fermion bath\n";
                return kExitUsage;
            }
            run_gamma(gamma);
        } else if (cmd_sweep->parsed()) {
            run_sweep(sweep);
        } else if (cmd_evolve->parsed()) {
            run_evolve(evolve);
        } else if (cmd_spread->parsed()) {
            if (!(spread.mass_kg > 0.0 || spread.mass_gev > 0.0) ||
                !(spread.time_s > 0.0 || spread.time_gyr > 0.0)) {
                std::cerr << "spread: need a mass (--mass-kg/--mass-gev) and a time "
                             "(--time-s/--time-gyr)\n";
                return kExitUsage;
            }
            run_spread(spread);
        } else if (cmd_spectrum->parsed()) {
            run_spectrum(spectrum);
        } else if (cmd_lensing->parsed()) {
            run_lensing(lensing);
        } else if (cmd_witness->parsed()) {
            run_witness(witness);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const pqg::NonConvergent& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const pqg::StabilityError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const pqg::IoError& e) {
        std::cerr << "i/o failure: " << e.what() << '\n';
        return kExitIo;
    } catch (const pqg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
