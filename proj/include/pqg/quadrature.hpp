#pragma once

#include <functional>

#include "pqg/errors.hpp"

namespace pqg {

struct IntegrationResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. The rule is open:
/// the endpoints a and b are never evaluated.
IntegrationResult integrate_finite(const Integrand& f, double a, double b, double rel_tol);

/// Integral of f over (0, inf) via the map x = t/(1-t) onto (0,1) followed
/// by adaptive subdivision. rel_tol must lie in (1e-14, 1e-2).
IntegrationResult integrate_semi_infinite(const Integrand& f, double rel_tol);

/// Integral of f over (a, inf), a >= 0.
IntegrationResult integrate_from(const Integrand& f, double a, double rel_tol);

/// Riemann zeta for s > 1 (Euler-Maclaurin tail), relative error < 1e-12.
double riemann_zeta(double s);

}  // namespace pqg
