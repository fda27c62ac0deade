#include "pqg/qstate.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

namespace pqg {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

int commensurate_steps(double q, double dk) {
    const double ratio = q / dk;
    const long long steps = std::llround(ratio);
    if (std::abs(ratio - static_cast<double>(steps)) > 1e-9) {
        throw NonCommensurateShift("displacement is not an integer multiple of dk");
    }
    return static_cast<int>(steps);
}

/// Position operator conjugate to the periodic grid: Z = F diag(x) F^dagger
/// with x_m = -(2 pi / (n dk)) m~, so that exp(i dk Z) is the one-step shift.
Eigen::MatrixXcd position_operator(const MomentumGrid& grid) {
    const int n = grid.n;
    Eigen::MatrixXcd f(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m) {
            f(j, m) = std::exp(kI * (2.0 * std::numbers::pi * j * m / n)) * norm;
        }
    }
    Eigen::VectorXd x(n);
    for (int m = 0; m < n; ++m) {
        const int centered = m <= n / 2 ? m : m - n;
        x(m) = -2.0 * std::numbers::pi * centered / (n * grid.dk);
    }
    return f * x.asDiagonal() * f.adjoint();
}

}  // namespace

MomentumGrid::MomentumGrid(int n_, double k_center_, double dk_)
    : n(n_), k_center(k_center_), dk(dk_) {
    if (n < 2) throw DomainError("grid needs at least 2 points");
    if (!(dk > 0.0)) throw DomainError("grid spacing must be positive");
}

Eigen::VectorXd MomentumGrid::k_values() const {
    Eigen::VectorXd k(n);
    for (int i = 0; i < n; ++i) k(i) = k_center + (i - n / 2) * dk;
    return k;
}

DensityMatrixGrid gaussian_state(const MomentumGrid& grid, double k0, double sigma_k) {
    if (!(sigma_k > 3.0 * grid.dk && sigma_k < grid.span() / 6.0)) {
        throw GridResolutionError("sigma_k must satisfy 3 dk < sigma_k < span/6");
    }
    const Eigen::VectorXd k = grid.k_values();
    Eigen::VectorXcd psi(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double u = (k(i) - k0) / sigma_k;
        psi(i) = std::exp(-0.25 * u * u);
    }
    psi /= std::sqrt(psi.squaredNorm() * grid.dk);
    return {grid, psi * psi.adjoint()};
}

DensityMatrixGrid random_mixed_state(const MomentumGrid& grid, int rank, std::uint64_t seed) {
    if (rank < 1 || rank > grid.n) throw DomainError("rank must lie in [1, n]");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(grid.n, rank);
    for (int j = 0; j < rank; ++j) {
        for (int i = 0; i < grid.n; ++i) a(i, j) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::MatrixXcd p = a * a.adjoint();
    p /= p.trace().real() * grid.dk;
    return {grid, std::move(p)};
}

double trace(const DensityMatrixGrid& state) {
    return state.rho.trace().real() * state.dk();
}

double purity(const DensityMatrixGrid& state) {
    // Hermitian rho: tr rho^2 dk^2 = sum |rho_ij|^2 dk^2.
    return state.rho.squaredNorm() * state.dk() * state.dk();
}

double hermiticity_defect(const DensityMatrixGrid& state) {
    return (state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const DensityMatrixGrid& state) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(state.rho * state.dk(),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrixGrid displaced(const DensityMatrixGrid& state, double q) {
    const int n = state.size();
    const int s = ((commensurate_steps(q, state.dk()) % n) + n) % n;
    Eigen::MatrixXcd out(n, n);
    for (int j = 0; j < n; ++j) {
        const int src_j = (j - s + n) % n;
        for (int i = 0; i < n; ++i) {
            out(i, j) = state.rho((i - s + n) % n, src_j);
        }
    }
    return {state.grid, std::move(out)};
}

double lambda_of_q(const DensityMatrixGrid& state, double q) {
    const DensityMatrixGrid shifted = displaced(state, q);
    // A full-period (or zero) shift is the identity; Lambda vanishes exactly
    // rather than up to summation-order rounding.
    if ((state.rho - shifted.rho).isZero(0.0)) return 0.0;
    const double overlap =
        state.rho.cwiseProduct(shifted.rho.conjugate()).sum().real() * state.dk() * state.dk();
    return purity(state) - overlap;
}

double position_second_moment(const DensityMatrixGrid& state) {
    const Eigen::MatrixXcd z = position_operator(state.grid);
    return (state.rho * state.dk() * z * z).trace().real();
}

SmallQComparison lambda_small_q_paper(const DensityMatrixGrid& state, double q) {
    const Eigen::MatrixXcd z = position_operator(state.grid);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(state.rho * state.dk());
    const Eigen::VectorXd lam = solver.eigenvalues();
    const Eigen::MatrixXcd zeig = solver.eigenvectors().adjoint() * z * solver.eigenvectors();
    const int n = state.size();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            sum += lam(i) * lam(j) * std::norm(zeig(i, j));
        }
    }
    const double dk = state.dk();
    SmallQComparison cmp;
    cmp.paper_value = 0.5 * q * q * sum;
    // Lambda is even with Lambda(0) = 0, so 2 Lambda(dk)/dk^2 is the second
    // difference estimate of d^2Lambda/dq^2 at 0.
    cmp.direct_value = q * q * lambda_of_q(state, dk) / (dk * dk);
    return cmp;
}

double discrete_gamma0(const ThermalEnvironment& env, const CouplingKernel& kernel,
                       const MomentumGrid& grid) {
    double total = 0.0;
    for (int j = 1; j < grid.n; ++j) {
        total += radial_weight(env, kernel, j * grid.dk) * grid.dk;
    }
    return total;
}

DensityMatrixGrid evolve_step(const DensityMatrixGrid& state, const ThermalEnvironment& env,
                              const CouplingKernel& kernel, double dt) {
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    const int n = state.size();
    const double dk = state.dk();
    // Collision kernel per shift: c(q) dq = w(q)/2 dk.
    std::vector<double> p(n, 0.0);
    double a = 0.0;
    for (int j = 1; j < n; ++j) {
        p[j] = dt * 0.5 * radial_weight(env, kernel, j * dk) * dk;
        a += p[j];
    }
    if (a >= 0.1) {
        throw StabilityError("dt too large for the collision rate on this grid");
    }
    Eigen::MatrixXcd next = (1.0 - a) * state.rho;
    for (int j = 1; j < n; ++j) {
        if (p[j] == 0.0) continue;
        for (int col = 0; col < n; ++col) {
            const int src_col = (col - j + n) % n;
            // Circulant row shift split at the wrap point.
            next.col(col).segment(j, n - j) +=
                p[j] * state.rho.col(src_col).segment(0, n - j);
            next.col(col).segment(0, j) += p[j] * state.rho.col(src_col).segment(n - j, j);
        }
    }
    // Free unitary phases, exact per step.
    const Eigen::VectorXd k = state.grid.k_values();
    Eigen::VectorXcd phase(n);
    for (int i = 0; i < n; ++i) {
        phase(i) = std::exp(-kI * (k(i) * k(i) * dt / (2.0 * kernel.system_mass)));
    }
    next = phase.asDiagonal() * next * phase.conjugate().asDiagonal();
    return {state.grid, std::move(next)};
}

double measured_decay_rate(const std::vector<PuritySample>& trajectory) {
    if (trajectory.size() < 3) throw InsufficientData("need at least 3 purity samples");
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    const auto m = static_cast<double>(trajectory.size());
    for (const auto& sample : trajectory) {
        if (!(sample.purity > 0.0)) throw InsufficientData("purities must be positive");
        const double y = std::log(sample.purity);
        st += sample.t;
        sy += y;
        stt += sample.t * sample.t;
        sty += sample.t * y;
    }
    const double denom = m * stt - st * st;
    if (denom <= 0.0) throw InsufficientData("degenerate time samples");
    return -(m * sty - st * sy) / denom;
}

double reduced_purity(const TwoParticleState& state) {
    const double dk = state.grid.dk;
    const double norm = state.psi.squaredNorm() * dk * dk;
    if (std::abs(norm - 1.0) > 1e-8) throw DomainError("two-particle state not normalized");
    const Eigen::MatrixXcd rho1 = state.psi * state.psi.adjoint() * dk;
    return rho1.squaredNorm() * dk * dk;
}

TwoParticleState correlated_gaussian(const MomentumGrid& grid, double k0, double sigma_k,
                                     double r) {
    if (!(std::abs(r) < 1.0)) throw DomainError("correlation must satisfy |r| < 1");
    if (!(sigma_k > 0.0)) throw DomainError("sigma_k must be positive");
    const Eigen::VectorXd k = grid.k_values();
    Eigen::MatrixXcd psi(grid.n, grid.n);
    const double denom = 4.0 * sigma_k * sigma_k * (1.0 - r * r);
    for (int j = 0; j < grid.n; ++j) {
        const double uj = k(j) - k0;
        for (int i = 0; i < grid.n; ++i) {
            const double ui = k(i) - k0;
            psi(i, j) = std::exp(-(ui * ui + uj * uj - 2.0 * r * ui * uj) / denom);
        }
    }
    psi /= std::sqrt(psi.squaredNorm()) * grid.dk;
    return {grid, std::move(psi)};
}

void save_snapshot(const DensityMatrixGrid& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path);
    out << "i,j,re,im\n";
    out.precision(17);
    for (int j = 0; j < state.size(); ++j) {
        for (int i = 0; i < state.size(); ++i) {
            out << i << ',' << j << ',' << state.rho(i, j).real() << ','
                << state.rho(i, j).imag() << '\n';
        }
    }
    std::ofstream meta(path + ".meta");
    if (!meta) throw IoError("cannot open " + path + ".meta");
    meta.precision(17);
    meta << "n=" << state.size() << "\ndk=" << state.dk()
         << "\nk_center=" << state.grid.k_center << '\n';
    if (!out.good() || !meta.good()) throw IoError("write failure for " + path);
}

}  // namespace pqg
