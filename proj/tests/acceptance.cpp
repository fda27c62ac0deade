// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "pqg/decoherence.hpp"
#include "pqg/environment.hpp"
#include "pqg/gravatom.hpp"
#include "pqg/lensing.hpp"
#include "pqg/qstate.hpp"
#include "pqg/quadrature.hpp"
#include "pqg/units.hpp"
#include "pqg/wavepacket.hpp"

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const char* what) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within(double value, double expected, double rel) {
    return std::abs(value - expected) <= rel * std::abs(expected);
}

using namespace pqg;

// 1. Closed form vs quadrature, beta in {0.1, 1, 10, 100}, M = 1, < 1 s.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const double beta : {0.1, 1.0, 10.0, 100.0}) {
        const double closed = gamma0_photon_closed_natural(1.0, beta);
        const double quad = gamma0_photon_quadrature_natural(1.0, beta, 1e-10);
        ok = ok && within(quad, closed, 1e-8);
    }
    ok = ok && seconds_since(t0) < 1.0;
    report(1, ok, "photon Gamma0 closed form vs quadrature, 1e-8 over 4 decades of beta");
}

// 2. Figure-1 sweep shape and M^-2 scaling, < 5 s.
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const double age = 13.8e9 * 3.15576e7;
    const auto rows1 = figure1_sweep(1.0, 2.7, 3000.0, 40);
    const auto rows10 = figure1_sweep(10.0, 2.7, 3000.0, 40);
    bool ok = rows1.size() == 40 && rows10.size() == 40;
    for (std::size_t i = 0; ok && i < rows1.size(); ++i) {
        ok = rows1[i].t001_s >= 1e6 * age;
        if (i > 0) {
            ok = ok && rows1[i].gamma0_per_s > rows1[i - 1].gamma0_per_s &&
                 rows1[i].t001_s < rows1[i - 1].t001_s;
        }
        ok = ok && within(rows10[i].t001_s, rows1[i].t001_s / 100.0, 1e-12);
    }
    ok = ok && seconds_since(t0) < 5.0;
    report(2, ok, "Fig. 1 sweep: monotone, t001 >= 1e6 x 13.8 Gyr, exact M^-2 scaling");
}

// 3. Lambda bounds over 1000 random states, all commensurate q, < 30 s.
void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (std::uint64_t seed = 0; ok && seed < 1000; ++seed) {
        const int n = 4 + static_cast<int>(seed % 13);
        const MomentumGrid grid(n, 0.0, 0.5);
        const auto state = random_mixed_state(grid, 1 + static_cast<int>(seed % 4), seed);
        const double p = purity(state);
        ok = lambda_of_q(state, 0.0) == 0.0;
        for (int j = 1; ok && j < n; ++j) {
            const double lam = lambda_of_q(state, j * grid.dk);
            ok = lam >= -1e-10 && lam <= p + 1e-10;
        }
    }
    ok = ok && seconds_since(t0) < 30.0;
    report(3, ok, "Lambda(q) in [0, tr rho^2] for 1000 random states, Lambda(0) = 0");
}

// 4. Master-equation decay-rate bound, 20 states x 500 steps on N = 64, < 60 s.
void criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    const MomentumGrid grid(64, 0.0, 0.25);
    const auto env = ThermalEnvironment::photon(1.0);
    const CouplingKernel kernel(1.0);
    const double gamma_d = discrete_gamma0(env, kernel, grid);
    const double dt = 0.1;
    bool ok = gamma_d > 0.0;
    for (std::uint64_t seed = 0; ok && seed < 20; ++seed) {
        auto state = random_mixed_state(grid, 2 + static_cast<int>(seed % 5), seed);
        std::vector<PuritySample> run{{0.0, purity(state)}};
        for (int step = 1; step <= 500; ++step) {
            state = evolve_step(state, env, kernel, dt);
            run.push_back({dt * step, purity(state)});
        }
        const double rate = measured_decay_rate(run);
        ok = rate >= 0.0 && rate <= gamma_d * (1.0 + 1e-6) &&
             std::abs(trace(state) - 1.0) < 1e-10 && hermiticity_defect(state) < 1e-10 &&
             min_eigenvalue(state) > -1e-8;
    }
    ok = ok && seconds_since(t0) < 60.0;
    report(4, ok, "evolved decay rate within [0, discrete Gamma0], structure preserved");
}

// 5. Yukawa radial Fourier integral vs M/(pi (k^2 + lambda^2)), 10 pairs.
void criterion5() {
    bool ok = true;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(0.2, 3.0);
    for (int i = 0; ok && i < 10; ++i) {
        const double k = dist(rng), lambda = dist(rng);
        const double mass = 1.0;
        const auto numeric = integrate_semi_infinite(
            [&](double x) { return mass / (std::numbers::pi * k) * std::sin(k * x) *
                                   std::exp(-lambda * x); },
            1e-9);
        const CouplingKernel kernel(mass, lambda);
        ok = within(numeric.value, potential_fourier(kernel, k), 1e-6);
    }
    report(5, ok, "Yukawa-damped Fourier integral matches M/(pi (k^2 + lambda^2)) to 1e-6");
}

// 6. The four quoted gravatom constants at 1e11 GeV, n = 1, each +-1%.
void criterion6() {
    const bool e_ok = within(energy_level(1e11, 1), -1.84e-32, 0.01);
    const bool r_ok = within(orbit_radius(1e11, 1), 29.1e-12, 0.01);
    const bool v_ok = within(orbit_velocity(1e11, 1), 10.1e-9, 0.01);
    const bool f_ok = within(transition_frequency(1e11, 1, 1000000), 174.0, 0.01);
    report(6, e_ok && r_ok && v_ok && f_ok,
           "gravatom constants -1.84e-32 J, 29.1 pm, 10.1 nm/s, 174 within 1%");
    if (!(e_ok && r_ok && v_ok && f_ok)) {
        std::printf("      detail: E1 %s (%.4e J), r1 %s (%.4e m), v1 %s (%.4e m/s), "
                    "prefactor %s (%.4f)\n",
                    e_ok ? "ok" : "off", energy_level(1e11, 1), r_ok ? "ok" : "off",
                    orbit_radius(1e11, 1), v_ok ? "ok" : "off", orbit_velocity(1e11, 1),
                    f_ok ? "ok" : "off", transition_frequency(1e11, 1, 1000000));
    }
}

// 7. Minimal spread 0.72 m within 2%; closed form vs numeric minimization 1e-6.
void criterion7() {
    const double mass = mass_kg_from_gev(1e11);
    const double t = 14.0e9 * 3.15576e7;
    const double closed = minimal_spread(mass, t);
    bool ok = within(closed, 0.72, 0.02);

    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 1e-6, hi = 1e3;
    for (int i = 0; i < 300; ++i) {
        const double a = hi - phi * (hi - lo);
        const double b = lo + phi * (hi - lo);
        if (spread_at({mass, a, t}) < spread_at({mass, b, t})) {
            hi = b;
        } else {
            lo = a;
        }
    }
    ok = ok && within(spread_at({mass, 0.5 * (lo + hi), t}), closed, 1e-6);
    report(7, ok, "s_min(1e11 GeV, 14 Gyr) = 0.72 m (2%); minimization matches closed form");
}

// 8. Fermion Gamma0: finite, positive, continuous at the cutoff, monotone in D.
void criterion8() {
    bool ok = true;
    for (const double mass : {0.5, 2.0}) {
        for (const double beta : {0.5, 5.0}) {
            double previous = 0.0;
            for (const double d : {0.01, 0.1, 1.0, 10.0, 100.0}) {
                const double rate =
                    gamma0_fermion_natural(mass, 1.0, beta, SpreadBound(d), 1e-8);
                ok = ok && std::isfinite(rate) && rate > 0.0 && rate >= previous;
                previous = rate;

                // Integrand continuity at q = 1/sqrt(D): below-cutoff weight
                // D w(q) q^2 equals above-cutoff weight w(q) exactly there.
                const ThermalEnvironment env = ThermalEnvironment::fermion(beta, 1.0);
                const CouplingKernel kernel(mass);
                const double qc = 1.0 / std::sqrt(d);
                const double above = radial_weight(env, kernel, qc);
                const double below = d * above * qc * qc;
                ok = ok && within(below, above, 1e-14);
            }
        }
    }
    report(8, ok, "fermion Gamma0 finite/positive/monotone over 4 decades of D, continuous cutoff");
}

// 9. Lensing coherence signature, < 20 s.
void criterion9() {
    const auto t0 = std::chrono::steady_clock::now();

    LensingScene single;
    single.lens_mass = 0.5;
    single.psi_x = Eigen::VectorXd::Constant(1, 0.3);
    single.psi = Eigen::VectorXcd::Constant(1, 10.0);  // dx = 0.01
    single.dx = 0.01;
    single.omega = 20.0;
    single.theta_grid = Eigen::VectorXd::LinSpaced(201, -1.5, 1.5);
    single.dist_source_lens = 1.0;
    single.dist_lens_observer = 1.0;
    const auto cl1 = intensity_classical(single);
    const auto qg1 = intensity_quantum(single);
    bool ok = true;
    for (int i = 0; i < cl1.values.size(); ++i) {
        ok = ok && std::abs(cl1.values[i] - qg1.values[i]) <= 1e-10 * std::abs(cl1.values[i]);
    }

    const double sep = 0.6, sigma = 0.002;
    const auto scene = make_scene(0.5, 20.0, {-sep, sep}, {1.0, 1.0}, sigma, 801, 1.5);
    const auto cl = intensity_classical(scene);
    const auto qg = intensity_quantum(scene);
    ok = ok && fringe_contrast(qg) > fringe_contrast(cl);

    // Fringe spacing, two-path oracle: the branch cross term
    // C = I_qg - (I_1 + I_2)/2 is |A_1||A_2| cos(delta); its nodes must sit
    // where the relative phase delta of the two point-lens amplitudes puts
    // cos(delta) = 0, within 5% of the fringe spacing.
    const auto one = make_scene(0.5, 20.0, {-sep}, {1.0}, sigma, 801, 1.5);
    const auto two = make_scene(0.5, 20.0, {sep}, {1.0}, sigma, 801, 1.5);
    const Eigen::VectorXd cross =
        qg.values - 0.5 * (intensity_quantum(one).values + intensity_quantum(two).values);
    Eigen::VectorXd cos_delta(qg.theta_grid.size());
    for (int i = 0; i < qg.theta_grid.size(); ++i) {
        cos_delta(i) = std::cos(std::arg(amplitude(scene, qg.theta_grid(i), -sep) *
                                         std::conj(amplitude(scene, qg.theta_grid(i), sep))));
    }
    const auto interp_crossings = [&](const Eigen::VectorXd& f, double limit) {
        std::vector<double> out;
        for (int i = 1; i < f.size(); ++i) {
            if (std::abs(qg.theta_grid(i - 1)) > limit || std::abs(qg.theta_grid(i)) > limit)
                continue;
            if (f(i) * f(i - 1) >= 0.0) continue;
            out.push_back(qg.theta_grid(i - 1) + f(i - 1) / (f(i - 1) - f(i)) *
                                                     (qg.theta_grid(i) - qg.theta_grid(i - 1)));
        }
        return out;
    };
    const auto measured = interp_crossings(cross, 0.75);
    const auto predicted = interp_crossings(cos_delta, 0.80);
    ok = ok && predicted.size() >= 2;
    std::vector<double> gaps;
    for (std::size_t k = 1; k < predicted.size(); ++k) gaps.push_back(predicted[k] - predicted[k - 1]);
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    const double spacing = gaps[gaps.size() / 2];
    const double c_max = cross.cwiseAbs().maxCoeff();
    int checked = 0;
    for (const double tc : measured) {
        if (!ok) break;
        int i0 = 0;
        while (i0 + 1 < qg.theta_grid.size() && qg.theta_grid(i0) < tc) ++i0;
        double local = 0.0;
        for (int j = std::max(0, i0 - 4); j < std::min<int>(cross.size(), i0 + 5); ++j)
            local = std::max(local, std::abs(cross(j)));
        if (local < 0.1 * c_max) continue;
        double nearest = std::numeric_limits<double>::infinity();
        for (const double p : predicted) nearest = std::min(nearest, std::abs(p - tc));
        ok = nearest < 0.05 * spacing;
        ++checked;
    }
    ok = ok && checked >= 5;
    ok = ok && seconds_since(t0) < 20.0;
    report(9, ok, "single branch I_cl = I_qg; two branches: higher contrast, two-path fringe oracle");
}

// 10. Small-q ledger: direct expansion vs finite differences; documented
// pure-state discrepancy with the eigenbasis formula.
void criterion10() {
    const MomentumGrid grid(64, 0.0, 0.25);
    const auto pure = gaussian_state(grid, 0.0, 1.0);
    const double q = grid.dk;

    const auto cmp = lambda_small_q_paper(pure, q);
    // (q^2/2) d^2Lambda/dq^2 at 0 by central second difference, Lambda(0) = 0.
    const double fd = 0.5 * (lambda_of_q(pure, q) + lambda_of_q(pure, -q));
    bool ok = within(cmp.direct_value, fd, 0.01);
    ok = ok && std::abs(cmp.paper_value) < 1e-10;              // eigenbasis sum vanishes
    ok = ok && within(cmp.direct_value, q * q * 0.25, 0.05);   // direct gives q^2 sigma_x^2

    const auto mixed = random_mixed_state(MomentumGrid(16, 0.0, 0.5), 3, 42);
    const auto cmp_mixed = lambda_small_q_paper(mixed, 0.5);
    const double fd_mixed = 0.5 * (lambda_of_q(mixed, 0.5) + lambda_of_q(mixed, -0.5));
    ok = ok && within(cmp_mixed.direct_value, fd_mixed, 0.01);
    report(10, ok, "d^2 Lambda/dq^2 matches finite differences; pure-state discrepancy documented");
}

// 11. Entanglement witness vs brute-force partial trace.
void criterion11() {
    const MomentumGrid grid(32, 0.0, 0.5);
    bool ok = std::abs(reduced_purity(correlated_gaussian(grid, 0.0, 1.0, 0.0)) - 1.0) < 1e-8;

    Eigen::MatrixXcd schmidt = Eigen::MatrixXcd::Zero(grid.n, grid.n);
    schmidt(2, 9) = schmidt(9, 2) = 1.0 / (std::sqrt(2.0) * grid.dk);
    ok = ok && std::abs(reduced_purity({grid, schmidt}) - 0.5) < 1e-8;

    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    for (int trial = 0; ok && trial < 10; ++trial) {
        Eigen::MatrixXcd psi(grid.n, grid.n);
        for (int i = 0; i < grid.n; ++i) {
            for (int j = 0; j < grid.n; ++j) psi(i, j) = {gauss(rng), gauss(rng)};
        }
        psi /= std::sqrt(psi.squaredNorm() * grid.dk * grid.dk);

        // Brute-force partial trace, element by element.
        Eigen::MatrixXcd rho1 = Eigen::MatrixXcd::Zero(grid.n, grid.n);
        for (int i = 0; i < grid.n; ++i) {
            for (int j = 0; j < grid.n; ++j) {
                std::complex<double> acc = 0.0;
                for (int s = 0; s < grid.n; ++s) acc += psi(i, s) * std::conj(psi(j, s));
                rho1(i, j) = acc * grid.dk;
            }
        }
        const double brute = (rho1.cwiseAbs2().sum()) * grid.dk * grid.dk;
        ok = std::abs(reduced_purity({grid, psi}) - brute) < 1e-10;
    }
    report(11, ok, "reduced purity: product = 1, Schmidt pair = 1/2, matches partial trace");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
