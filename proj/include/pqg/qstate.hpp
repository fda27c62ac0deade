#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pqg/environment.hpp"

namespace pqg {

/// Uniform 1-D momentum grid: k_i = k_center + (i - n/2) dk.
struct MomentumGrid {
    int n;
    double k_center;
    double dk;

    MomentumGrid(int n_, double k_center_, double dk_);
    Eigen::VectorXd k_values() const;
    double span() const { return n * dk; }
};

/// Discretized one-particle reduced density matrix rho(k, k') with continuum
/// normalization: trace = sum_i rho_ii dk = 1.
struct DensityMatrixGrid {
    MomentumGrid grid;
    Eigen::MatrixXcd rho;

    double dk() const { return grid.dk; }
    int size() const { return grid.n; }
};

/// Bipartite momentum-space amplitudes psi(k1, k2), sum |psi|^2 dk^2 = 1.
struct TwoParticleState {
    MomentumGrid grid;
    Eigen::MatrixXcd psi;
};

/// Pure Gaussian state centered at k0 with momentum width sigma_k.
/// Requires 3 dk < sigma_k < span/6.
DensityMatrixGrid gaussian_state(const MomentumGrid& grid, double k0, double sigma_k);

/// Random rank-`rank` mixed state (Ginibre construction), deterministic in seed.
DensityMatrixGrid random_mixed_state(const MomentumGrid& grid, int rank, std::uint64_t seed);

double trace(const DensityMatrixGrid& state);

/// tr rho^2 with dk^2 weighting.
double purity(const DensityMatrixGrid& state);

double hermiticity_defect(const DensityMatrixGrid& state);
double min_eigenvalue(const DensityMatrixGrid& state);

/// Momentum displacement by q (an integer multiple of dk), periodic on the grid.
DensityMatrixGrid displaced(const DensityMatrixGrid& state, double q);

/// Lambda(q) = tr rho^2 - Re tr(rho rho~_q).
double lambda_of_q(const DensityMatrixGrid& state, double q);

struct SmallQComparison {
    double paper_value;   // (q^2/2) sum_{i != j} l_i l_j |<psi_i|Z|psi_j>|^2
    double direct_value;  // (q^2/2) d^2Lambda/dq^2 at 0, by second difference of lambda_of_q
};

/// Both readings of the small-q expansion of Lambda. They disagree for pure
/// states: the eigenbasis sum omits the i = j variance terms, so it vanishes
/// for any pure state while the direct expansion gives q^2 sigma_x^2.
SmallQComparison lambda_small_q_paper(const DensityMatrixGrid& state, double q);

/// <x^2>_rho with the position operator conjugate to the periodic momentum grid.
double position_second_moment(const DensityMatrixGrid& state);

/// Discrete analogue of the decay-rate bound: sum over grid shifts of
/// radial_weight(q_j) dk, j = 1 .. n-1.
double discrete_gamma0(const ThermalEnvironment& env, const CouplingKernel& kernel,
                       const MomentumGrid& grid);

/// One explicit step of the one-particle master equation: free phases
/// exp(-i (k^2 - k'^2) dt / 2M) plus the radial collision sum over
/// commensurate shifts. Preserves Hermiticity and trace.
DensityMatrixGrid evolve_step(const DensityMatrixGrid& state, const ThermalEnvironment& env,
                              const CouplingKernel& kernel, double dt);

struct PuritySample {
    double t;
    double purity;
};

/// Negated least-squares slope of ln(purity) against t. Needs >= 3 samples.
double measured_decay_rate(const std::vector<PuritySample>& trajectory);

/// tr rho_1^2 of the one-particle reduction of a bipartite pure state.
double reduced_purity(const TwoParticleState& state);

/// psi(k1, k2) proportional to exp(-(u1^2 + u2^2 - 2 r u1 u2) / (4 sigma^2 (1 - r^2)))
/// with u = k - k0; r = 0 gives a product state.
TwoParticleState correlated_gaussian(const MomentumGrid& grid, double k0, double sigma_k,
                                     double r);

/// Snapshot: CSV rows `i,j,re,im` into `path`, sidecar `path.meta` with n, dk, k_center.
void save_snapshot(const DensityMatrixGrid& state, const std::string& path);

}  // namespace pqg
