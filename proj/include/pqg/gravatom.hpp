#pragma once

#include <iosfwd>
#include <vector>

#include "pqg/errors.hpp"

namespace pqg {

/// Bohr-model levels of two equal masses bound by gravity. Masses are given
/// as Mc^2 in GeV; outputs are SI.
struct BoundLevel {
    int n;
    double energy_J;
    double radius_m;
    double velocity_mps;
};

struct TransitionLine {
    int m;  // lower level
    int n;  // upper level
    double nu_Hz;
};

struct BoundStateSpectrum {
    double mass_gev;
    std::vector<BoundLevel> levels;
    std::vector<TransitionLine> lines;  // sorted by frequency
};

/// E_n = -G^2 M^5 / (4 hbar^2 n^2).
double energy_level(double mass_gev, int n);

/// r_n = hbar^2 n^2 / (G M^3), distance of each particle from the common center.
double orbit_radius(double mass_gev, int n);

/// v_n = G M^2 / (2 n hbar). Throws RelativisticRegime when v_n > 0.1 c.
double orbit_velocity(double mass_gev, int n);

/// nu_nm = (|E_1| / hbar)(1/m^2 - 1/n^2). With cycles = true the result is
/// divided by 2 pi (cycles-per-second reading of the same formula).
double transition_frequency(double mass_gev, int m_level, int n_level, bool cycles = false);

BoundStateSpectrum spectrum(double mass_gev, int n_max, bool cycles = false);

/// Two CSVs: levels `n,E_J,r_m,v_mps` and lines `m,n,nu_Hz`.
void write_levels_csv(const BoundStateSpectrum& s, std::ostream& out);
void write_lines_csv(const BoundStateSpectrum& s, std::ostream& out);

}  // namespace pqg
