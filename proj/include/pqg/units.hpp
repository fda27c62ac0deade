#pragma once

#include <cmath>

#include "pqg/errors.hpp"

namespace pqg {

/// CODATA 2018 constants, SI, full published precision.
namespace constants {

inline constexpr double hbar = 1.054571817e-34;       // J s (exact-derived)
inline constexpr double c = 2.99792458e8;             // m/s (exact)
inline constexpr double G = 6.67430e-11;              // m^3 kg^-1 s^-2
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K (exact)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)

// Planck units derived from hbar, c, G.
inline const double planck_mass = std::sqrt(hbar * c / G);            // kg
inline const double planck_time = std::sqrt(hbar * G / (c * c * c * c * c));  // s
inline const double planck_length = std::sqrt(hbar * G / (c * c * c));        // m
inline const double planck_energy = planck_mass * c * c;              // J
inline const double planck_temperature = planck_energy / k_boltzmann; // K

/// kg per GeV/c^2.
inline constexpr double kg_per_gev = elementary_charge * 1e9 / (c * c);

}  // namespace constants

enum class Dimension { Mass, Energy, Temperature, Time, Length, Rate, Frequency, Velocity };
enum class UnitSystem { SI, Natural };

struct PhysicalQuantity {
    double value = 0.0;
    Dimension dimension = Dimension::Mass;
    UnitSystem system = UnitSystem::SI;
};

/// Size of the natural (Planck) unit of `dim` expressed in SI.
/// For Rate and Frequency this is the Planck rate 1/t_P, so conversion is
/// always value_natural = value_si / si_unit(dim).
double si_unit(Dimension dim);

/// SI -> natural (hbar = c = G = 1, temperatures folded through k_B).
PhysicalQuantity to_natural(const PhysicalQuantity& q);

/// Natural -> SI; exact inverse of to_natural on its image.
PhysicalQuantity from_natural(const PhysicalQuantity& q, Dimension target_dimension);

/// Convenience: particle mass quoted as Mc^2 in GeV to kg.
double mass_kg_from_gev(double mass_gev);

}  // namespace pqg
