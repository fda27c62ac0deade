#include "pqg/decoherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "pqg/quadrature.hpp"
#include "pqg/units.hpp"

namespace pqg {

namespace {

constexpr double kPi = std::numbers::pi;

void check_rate_inputs(double mass, double beta) {
    if (!(mass >= 0.0)) throw DomainError("mass must be nonnegative");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
}

double beta_natural_from_kelvin(double temperature_K) {
    if (!(temperature_K > 0.0)) throw DomainError("temperature must be positive");
    const double t_nat =
        to_natural({temperature_K, Dimension::Temperature, UnitSystem::SI}).value;
    return 1.0 / t_nat;
}

DecoherenceSummary summarize(double gamma0_natural, double purity_drop, RateMethod method) {
    DecoherenceSummary s;
    s.gamma0 = gamma0_natural;
    s.gamma0_si =
        from_natural({gamma0_natural, Dimension::Rate, UnitSystem::Natural}, Dimension::Rate)
            .value;
    s.purity_drop = purity_drop;
    s.t_fraction = s.gamma0_si > 0.0 ? decoherence_time(s.gamma0_si, purity_drop)
                                     : std::numeric_limits<double>::infinity();
    s.method = method;
    return s;
}

}  // namespace

SpreadBound::SpreadBound(double d) : D(d) {
    if (!(d > 0.0)) throw DomainError("spread bound D must be positive");
}

double gamma0_photon_closed_natural(double mass_natural, double beta) {
    check_rate_inputs(mass_natural, beta);
    const double pi2 = kPi * kPi;
    const double pi4 = pi2 * pi2;
    const double pi6 = pi4 * pi2;
    const double b3 = beta * beta * beta;
    const double b5 = b3 * beta * beta;
    const double term5 = (16.0 / (15.0 * pi2) - 96.0 * riemann_zeta(5.0) / pi6) / b5;
    const double term3 = 8.0 * riemann_zeta(3.0) / pi4 / b3;
    return (term5 + term3) * mass_natural * mass_natural;
}

double gamma0_photon_quadrature_natural(double mass_natural, double beta, double rel_tol) {
    check_rate_inputs(mass_natural, beta);
    if (mass_natural == 0.0) return 0.0;
    const auto env = ThermalEnvironment::photon(beta);
    const CouplingKernel kernel(mass_natural);
    // Integrand decays like e^{-2 beta q}; rescale so the adaptive map sees O(1) support.
    const auto result = integrate_semi_infinite(
        [&](double x) { return radial_weight(env, kernel, x / beta) / beta; }, rel_tol);
    return result.value;
}

double gamma0_fermion_natural(double mass_natural, double fermion_mass, double beta,
                              const SpreadBound& bound, double rel_tol) {
    check_rate_inputs(mass_natural, beta);
    if (mass_natural == 0.0) return 0.0;
    const auto env = ThermalEnvironment::fermion(beta, fermion_mass);
    const double prefactor =
        4.0 * mass_natural * mass_natural * fermion_mass * fermion_mass / (kPi * kPi);
    const double cutoff = 1.0 / std::sqrt(bound.D);
    auto nn1 = [&](double q) {
        const double n = occupation(env, q);
        return n * (n + 1.0);
    };
    const auto low =
        integrate_finite([&](double q) { return bound.D * nn1(q); }, 0.0, cutoff, rel_tol);
    const auto high =
        integrate_from([&](double q) { return nn1(q) / (q * q); }, cutoff, rel_tol);
    return prefactor * (low.value + high.value);
}

DecoherenceSummary gamma0_photon_closed(double mass_kg, double temperature_K,
                                        double purity_drop) {
    const double m = to_natural({mass_kg, Dimension::Mass, UnitSystem::SI}).value;
    const double beta = beta_natural_from_kelvin(temperature_K);
    return summarize(gamma0_photon_closed_natural(m, beta), purity_drop,
                     RateMethod::ClosedForm);
}

DecoherenceSummary gamma0_photon_quadrature(double mass_kg, double temperature_K,
                                            double rel_tol, double purity_drop) {
    const double m = to_natural({mass_kg, Dimension::Mass, UnitSystem::SI}).value;
    const double beta = beta_natural_from_kelvin(temperature_K);
    return summarize(gamma0_photon_quadrature_natural(m, beta, rel_tol), purity_drop,
                     RateMethod::Quadrature);
}

DecoherenceSummary gamma0_fermion(double mass_kg, double fermion_mass_kg, double temperature_K,
                                  const SpreadBound& bound, double rel_tol,
                                  double purity_drop) {
    const double m = to_natural({mass_kg, Dimension::Mass, UnitSystem::SI}).value;
    const double mf = to_natural({fermion_mass_kg, Dimension::Mass, UnitSystem::SI}).value;
    const double beta = beta_natural_from_kelvin(temperature_K);
    return summarize(gamma0_fermion_natural(m, mf, beta, bound, rel_tol), purity_drop,
                     RateMethod::FermionCutoff);
}

double decoherence_time(double rate_per_s, double purity_drop) {
    if (!(rate_per_s > 0.0)) throw DomainError("rate must be positive");
    if (!(purity_drop > 0.0 && purity_drop < 1.0)) {
        throw DomainError("purity drop must lie in (0, 1)");
    }
    return -std::log1p(-purity_drop) / rate_per_s;
}

std::vector<SweepRow> figure1_sweep(double mass_kg, double t_min_K, double t_max_K, int points) {
    if (!(t_min_K > 0.0 && t_min_K < t_max_K)) throw DomainError("require 0 < T_min < T_max");
    if (points < 2) throw DomainError("sweep needs at least 2 points");
    std::vector<SweepRow> rows(points);
    const double log_min = std::log(t_min_K);
    const double log_max = std::log(t_max_K);
    for (int i = 0; i < points; ++i) {
        const double T = std::exp(log_min + (log_max - log_min) * i / (points - 1));
        const auto summary = gamma0_photon_closed(mass_kg, T, 0.01);
        rows[i] = {T, summary.gamma0_si, summary.t_fraction};
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "temperature_K,gamma0_per_s,t001_s\n";
    out.precision(17);
    for (const auto& row : rows) {
        out << row.temperature_K << ',' << row.gamma0_per_s << ',' << row.t001_s << '\n';
    }
}

}  // namespace pqg
