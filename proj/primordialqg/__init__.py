"""Gravitational decoherence and lensing of superposed primordial massive particles.

Thin Python facade over the C++ core (:mod:`primordialqg._core`):

- thermal graviton decoherence rates (photon closed form, fermion quadrature),
- Lindblad evolution of momentum-space density matrices and the
  displacement-overlap witness Lambda(q),
- free wavepacket spreading and the minimal-spread bound,
- the gravitational Bohr atom spectrum,
- 1-D wave-optics lensing of a lens in spatial superposition.
"""

from primordialqg._core import (
    DensityMatrixGrid,
    MomentumGrid,
    PqgError,
    constants,
    correlated_gaussian,
    decoherence_time,
    discrete_gamma0,
    displaced,
    energy_level,
    evolve,
    figure1_sweep,
    fringe_contrast,
    gamma0_fermion_natural,
    gamma0_photon_closed_natural,
    gamma0_photon_quadrature_natural,
    gamma0_photon_si,
    gaussian_state,
    integrate_semi_infinite,
    lambda_of_q,
    lensing_profiles,
    minimal_spread,
    orbit_radius,
    orbit_velocity,
    purity,
    random_mixed_state,
    reduced_purity,
    riemann_zeta,
    spectrum,
    spread_at,
    transition_frequency,
)

__all__ = [
    "DensityMatrixGrid",
    "MomentumGrid",
    "PqgError",
    "constants",
    "correlated_gaussian",
    "decoherence_time",
    "discrete_gamma0",
    "displaced",
    "energy_level",
    "evolve",
    "figure1_sweep",
    "fringe_contrast",
    "gamma0_fermion_natural",
    "gamma0_photon_closed_natural",
    "gamma0_photon_quadrature_natural",
    "gamma0_photon_si",
    "gaussian_state",
    "integrate_semi_infinite",
    "lambda_of_q",
    "lensing_profiles",
    "minimal_spread",
    "orbit_radius",
    "orbit_velocity",
    "purity",
    "random_mixed_state",
    "reduced_purity",
    "riemann_zeta",
    "spectrum",
    "spread_at",
    "transition_frequency",
]

__version__ = "0.1.0"
