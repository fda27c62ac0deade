#pragma once

#include "pqg/errors.hpp"

namespace pqg {

enum class Species { Photon, Fermion };

/// Thermal bath in natural units: beta = (k_B T)^-1. For a fermion bath the
/// (non-relativistic) particle mass must be supplied.
struct ThermalEnvironment {
    Species species;
    double beta;
    double fermion_mass;

    static ThermalEnvironment photon(double beta);
    static ThermalEnvironment fermion(double beta, double mass);
};

/// Gravitational coupling of the system particle of mass M, with an optional
/// Yukawa regulator lambda. lambda is only exercised by the Fourier-transform
/// cross-check; rate calculations use the lambda -> 0 form.
struct CouplingKernel {
    double system_mass;
    double yukawa_lambda;

    explicit CouplingKernel(double mass, double lambda = 0.0);
};

/// Thermal occupation at radial momentum q > 0.
/// Photon: q^2 / (pi^2 (e^{beta q} - 1)); Fermion: (1 + e^{beta q^2 / 2m})^-1.
double occupation(const ThermalEnvironment& env, double q);

/// Fourier transform of the (Yukawa-regulated) gravitational potential:
/// M / (pi (k^2 + lambda^2)).
double potential_fourier(const CouplingKernel& kernel, double k);

/// Energy of a single bath quantum: q for photons, m for fermions.
double dispersion(const ThermalEnvironment& env, double q);

/// Radial spectral weight w(q) = (4 M^2 / pi^2) (eps_q^2 / q^2) n_q (n_q + 1).
double radial_weight(const ThermalEnvironment& env, const CouplingKernel& kernel, double q);

}  // namespace pqg
