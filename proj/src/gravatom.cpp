#include "pqg/gravatom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "pqg/units.hpp"

namespace pqg {

namespace {

void check_level(double mass_gev, int n) {
    if (!(mass_gev > 0.0)) throw DomainError("mass must be positive");
    if (n < 1) throw DomainError("principal quantum number must be >= 1");
}

}  // namespace

double energy_level(double mass_gev, int n) {
    check_level(mass_gev, n);
    using namespace constants;
    const double M = mass_kg_from_gev(mass_gev);
    return -G * G * std::pow(M, 5) / (4.0 * hbar * hbar * n * n);
}

double orbit_radius(double mass_gev, int n) {
    check_level(mass_gev, n);
    using namespace constants;
    const double M = mass_kg_from_gev(mass_gev);
    return hbar * hbar * n * static_cast<double>(n) / (G * M * M * M);
}

double orbit_velocity(double mass_gev, int n) {
    check_level(mass_gev, n);
    using namespace constants;
    const double M = mass_kg_from_gev(mass_gev);
    const double v = G * M * M / (2.0 * n * hbar);
    if (v > 0.1 * c) {
        throw RelativisticRegime("orbit velocity exceeds 0.1c; Bohr model invalid");
    }
    return v;
}

double transition_frequency(double mass_gev, int m_level, int n_level, bool cycles) {
    check_level(mass_gev, m_level);
    if (n_level <= m_level) throw DomainError("transition requires m < n");
    const double e0 = -energy_level(mass_gev, 1);
    const double inv = 1.0 / (static_cast<double>(m_level) * m_level) -
                       1.0 / (static_cast<double>(n_level) * n_level);
    double nu = e0 / constants::hbar * inv;
    if (cycles) nu /= 2.0 * std::numbers::pi;
    return nu;
}

BoundStateSpectrum spectrum(double mass_gev, int n_max, bool cycles) {
    if (n_max < 2) throw DomainError("spectrum needs n_max >= 2");
    BoundStateSpectrum s;
    s.mass_gev = mass_gev;
    for (int n = 1; n <= n_max; ++n) {
        s.levels.push_back({n, energy_level(mass_gev, n), orbit_radius(mass_gev, n),
                            orbit_velocity(mass_gev, n)});
    }
    for (int m = 1; m < n_max; ++m) {
        for (int n = m + 1; n <= n_max; ++n) {
            s.lines.push_back({m, n, transition_frequency(mass_gev, m, n, cycles)});
        }
    }
    std::sort(s.lines.begin(), s.lines.end(),
              [](const TransitionLine& a, const TransitionLine& b) { return a.nu_Hz < b.nu_Hz; });
    return s;
}

void write_levels_csv(const BoundStateSpectrum& s, std::ostream& out) {
    out << "n,E_J,r_m,v_mps\n";
    out.precision(17);
    for (const auto& lv : s.levels) {
        out << lv.n << ',' << lv.energy_J << ',' << lv.radius_m << ',' << lv.velocity_mps
            << '\n';
    }
}

void write_lines_csv(const BoundStateSpectrum& s, std::ostream& out) {
    out << "m,n,nu_Hz\n";
    out.precision(17);
    for (const auto& ln : s.lines) {
        out << ln.m << ',' << ln.n << ',' << ln.nu_Hz << '\n';
    }
}

}  // namespace pqg
