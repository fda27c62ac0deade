#pragma once

#include <optional>

#include "pqg/errors.hpp"

namespace pqg {

/// Free Gaussian wavepacket query, SI at the boundary.
struct SpreadQuery {
    double mass_kg;
    std::optional<double> initial_spread_m;
    double elapsed_s;
};

/// s(t) = sqrt((s0^4 + (hbar t / m)^2) / s0^2).
double spread_at(const SpreadQuery& q);

/// s_min(t) = sqrt(2 hbar t / m), the minimum of spread_at over s0.
double minimal_spread(double mass_kg, double elapsed_s);

}  // namespace pqg
