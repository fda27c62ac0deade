#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <vector>

#include "pqg/errors.hpp"

namespace pqg {

enum class AmplitudeModel { Kirchhoff1D };

/// 1-D wave-optics lensing scene. Angles are in radians-like scene units;
/// psi samples the lens-center offset amplitude on a uniform transverse grid.
/// The Fermat phase is omega [D (u - theta)^2 / 2 - 4 M ln|u - x_L|] with the
/// time-delay distance D = d_LO (d_LO + d_SL) / d_SL and a softened log core.
struct LensingScene {
    double lens_mass;            // natural units
    Eigen::VectorXd psi_x;       // lens-center offsets
    Eigen::VectorXcd psi;        // amplitudes, sum |psi|^2 dx = 1
    double dx;
    double omega;                // source angular frequency
    Eigen::VectorXd theta_grid;  // observation angles
    double dist_source_lens;
    double dist_lens_observer;
    AmplitudeModel model = AmplitudeModel::Kirchhoff1D;

    // Lens-plane discretization of the Kirchhoff integral.
    int lens_plane_samples = 8192;
    double lens_plane_halfwidth = 8.0;
    double core_radius = 0.05;  // softening of the log delay

    double time_delay_distance() const;
    double einstein_angle() const;
    void validate() const;
};

/// Gaussian branch superposition for psi: equal-width components at the given
/// centers with the given (unnormalized) weights.
LensingScene make_scene(double lens_mass, double omega,
                        const std::vector<double>& branch_centers,
                        const std::vector<double>& branch_weights, double branch_sigma,
                        int theta_points, double theta_halfwidth);

/// Kirchhoff amplitude for a point lens displaced to lens_center_offset.
std::complex<double> amplitude(const LensingScene& scene, double theta,
                               double lens_center_offset);

struct IntensityProfile {
    Eigen::VectorXd theta_grid;
    Eigen::VectorXd values;
};

/// |alpha|^2 with the Shapiro delay convolved against |psi|^2.
IntensityProfile intensity_classical(const LensingScene& scene);

/// Coherent branch sum |sum_b B_b(theta)|^2. Each disjoint support component
/// of psi is one superposition branch b with amplitude
/// B_b = sqrt(p_b) (sum_i psi_i alpha(theta; x_i) dx) / (sum_i |psi_i| dx),
/// so a single-point branch reproduces alpha exactly and sum_b p_b = 1 keeps
/// the flux comparable to the classical profile. Branches must be separated
/// by a region of negligible |psi| to count as distinct.
IntensityProfile intensity_quantum(const LensingScene& scene);

/// (max - min)/(max + min) over the central half of the theta grid.
double fringe_contrast(const IntensityProfile& profile);

/// CSV `theta,I_cl,I_qg`.
void write_lensing_csv(const IntensityProfile& classical, const IntensityProfile& quantum,
                       std::ostream& out);

}  // namespace pqg
