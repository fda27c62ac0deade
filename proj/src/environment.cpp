#include "pqg/environment.hpp"

#include <cmath>
#include <numbers>

namespace pqg {

namespace {
constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

void check_q(double q) {
    if (!(q > 0.0)) throw DomainError("momentum must be positive");
}
}  // namespace

ThermalEnvironment ThermalEnvironment::photon(double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    return {Species::Photon, beta, 0.0};
}

ThermalEnvironment ThermalEnvironment::fermion(double beta, double mass) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (!(mass > 0.0)) throw DomainError("fermion mass must be positive");
    return {Species::Fermion, beta, mass};
}

CouplingKernel::CouplingKernel(double mass, double lambda)
    : system_mass(mass), yukawa_lambda(lambda) {
    if (!(mass > 0.0)) throw DomainError("system mass must be positive");
    if (lambda < 0.0) throw DomainError("yukawa lambda must be nonnegative");
}

double occupation(const ThermalEnvironment& env, double q) {
    check_q(q);
    if (env.species == Species::Photon) {
        return q * q / (kPiSq * std::expm1(env.beta * q));
    }
    return 1.0 / (1.0 + std::exp(env.beta * q * q / (2.0 * env.fermion_mass)));
}

double potential_fourier(const CouplingKernel& kernel, double k) {
    if (!(k > 0.0)) throw DomainError("wavenumber must be positive");
    const double l = kernel.yukawa_lambda;
    return kernel.system_mass / (std::numbers::pi * (k * k + l * l));
}

double dispersion(const ThermalEnvironment& env, double q) {
    check_q(q);
    return env.species == Species::Photon ? q : env.fermion_mass;
}

double radial_weight(const ThermalEnvironment& env, const CouplingKernel& kernel, double q) {
    check_q(q);
    const double n = occupation(env, q);
    const double eps = dispersion(env, q);
    const double m = kernel.system_mass;
    return 4.0 * m * m / kPiSq * (eps * eps) / (q * q) * n * (n + 1.0);
}

}  // namespace pqg
