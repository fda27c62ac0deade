#include "pqg/units.hpp"

namespace pqg {

double si_unit(Dimension dim) {
    using namespace constants;
    switch (dim) {
        case Dimension::Mass: return planck_mass;
        case Dimension::Energy: return planck_energy;
        case Dimension::Temperature: return planck_temperature;
        case Dimension::Time: return planck_time;
        case Dimension::Length: return planck_length;
        case Dimension::Rate: return 1.0 / planck_time;
        case Dimension::Frequency: return 1.0 / planck_time;
        case Dimension::Velocity: return c;
    }
    throw UnsupportedDimension("unknown dimension");
}

PhysicalQuantity to_natural(const PhysicalQuantity& q) {
    if (q.system != UnitSystem::SI) {
        throw DomainError("to_natural expects an SI quantity");
    }
    return {q.value / si_unit(q.dimension), q.dimension, UnitSystem::Natural};
}

PhysicalQuantity from_natural(const PhysicalQuantity& q, Dimension target_dimension) {
    if (q.system != UnitSystem::Natural) {
        throw DomainError("from_natural expects a natural-unit quantity");
    }
    if (q.dimension != target_dimension) {
        throw UnsupportedDimension("dimension mismatch in from_natural");
    }
    return {q.value * si_unit(target_dimension), target_dimension, UnitSystem::SI};
}

double mass_kg_from_gev(double mass_gev) {
    if (mass_gev <= 0.0) throw DomainError("mass must be positive");
    return mass_gev * constants::kg_per_gev;
}

}  // namespace pqg
