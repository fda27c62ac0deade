#include "pqg/wavepacket.hpp"

#include <cmath>

#include "pqg/units.hpp"

namespace pqg {

double spread_at(const SpreadQuery& q) {
    if (!(q.mass_kg > 0.0)) throw DomainError("mass must be positive");
    if (q.elapsed_s < 0.0) throw DomainError("elapsed time must be nonnegative");
    if (!q.initial_spread_m) throw MissingInitialSpread("spread_at needs an initial spread");
    const double s0 = *q.initial_spread_m;
    if (!(s0 > 0.0)) throw DomainError("initial spread must be positive");
    const double drift = constants::hbar * q.elapsed_s / q.mass_kg;
    return std::sqrt((s0 * s0 * s0 * s0 + drift * drift) / (s0 * s0));
}

double minimal_spread(double mass_kg, double elapsed_s) {
    if (!(mass_kg > 0.0)) throw DomainError("mass must be positive");
    if (!(elapsed_s > 0.0)) throw DomainError("elapsed time must be positive");
    return std::sqrt(2.0 * constants::hbar * elapsed_s / mass_kg);
}

}  // namespace pqg
