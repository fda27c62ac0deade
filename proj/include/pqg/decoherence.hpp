#pragma once

#include <iosfwd>
#include <vector>

#include "pqg/environment.hpp"

namespace pqg {

enum class RateMethod { ClosedForm, Quadrature, FermionCutoff };

struct DecoherenceSummary {
    double gamma0 = 0.0;      // natural-unit rate
    double gamma0_si = 0.0;   // s^-1
    double t_fraction = 0.0;  // s, time for the given purity drop
    double purity_drop = 0.01;
    RateMethod method = RateMethod::ClosedForm;
};

/// D := <x^2>_rho tr rho^2, in natural length^2. Cures the fermion IR divergence.
struct SpreadBound {
    double D;
    explicit SpreadBound(double d);
};

/// Closed form for the photon-bath purity-decay bound, natural units:
/// Gamma0 = [(16/15pi^2 - 96 zeta(5)/pi^6)/beta^5 + 8 zeta(3)/pi^4 /beta^3] M^2.
double gamma0_photon_closed_natural(double mass_natural, double beta);

/// Same bound by numerical integration of the radial weight.
double gamma0_photon_quadrature_natural(double mass_natural, double beta, double rel_tol);

/// Fermion-bath bound with the small-q cure: the 1/q^2 kernel is replaced by
/// the constant D below the cutoff q = 1/sqrt(D).
double gamma0_fermion_natural(double mass_natural, double fermion_mass, double beta,
                              const SpreadBound& bound, double rel_tol);

/// SI-boundary wrappers (mass in kg, temperature in kelvin).
DecoherenceSummary gamma0_photon_closed(double mass_kg, double temperature_K,
                                        double purity_drop = 0.01);
DecoherenceSummary gamma0_photon_quadrature(double mass_kg, double temperature_K,
                                            double rel_tol, double purity_drop = 0.01);
DecoherenceSummary gamma0_fermion(double mass_kg, double fermion_mass_kg, double temperature_K,
                                  const SpreadBound& bound, double rel_tol,
                                  double purity_drop = 0.01);

/// t = -ln(1 - purity_drop) / rate.
double decoherence_time(double rate_per_s, double purity_drop);

struct SweepRow {
    double temperature_K;
    double gamma0_per_s;
    double t001_s;
};

/// Log-spaced temperature sweep of the closed-form photon bound with the
/// 1% decoherence time per row. Rows are ordered by temperature.
std::vector<SweepRow> figure1_sweep(double mass_kg, double t_min_K, double t_max_K, int points);

/// Header `temperature_K,gamma0_per_s,t001_s`, '.' decimal, LF line ends.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace pqg
