#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "pqg/lensing.hpp"

using namespace pqg;

namespace {

LensingScene point_scene(double mass, double offset, double omega = 20.0,
                         int theta_points = 201, double theta_halfwidth = 1.5) {
    const double dx = 0.01;
    LensingScene scene;
    scene.lens_mass = mass;
    scene.psi_x = Eigen::VectorXd::Constant(1, offset);
    scene.psi = Eigen::VectorXcd::Constant(1, 1.0 / std::sqrt(dx));
    scene.dx = dx;
    scene.omega = omega;
    scene.theta_grid = Eigen::VectorXd::LinSpaced(theta_points, -theta_halfwidth, theta_halfwidth);
    scene.dist_source_lens = 1.0;
    scene.dist_lens_observer = 1.0;
    return scene;
}

}  // namespace

TEST_CASE("scene validation and derived geometry") {
    auto scene = point_scene(0.5, 0.0);
    scene.validate();
    CHECK(scene.time_delay_distance() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(scene.einstein_angle() == doctest::Approx(1.0).epsilon(1e-14));

    auto bad = scene;
    bad.omega = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = scene;
    bad.dist_source_lens = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = scene;
    bad.psi *= 2.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("amplitude: free propagation and mirror symmetry") {
    const auto free_scene = point_scene(0.0, 0.0);
    const double a0 = std::abs(amplitude(free_scene, 0.0, 0.0));
    for (const double theta : {-1.0, -0.4, 0.3, 1.2}) {
        CHECK(std::abs(amplitude(free_scene, theta, 0.0)) ==
              doctest::Approx(a0).epsilon(1e-6));
    }

    const auto lensed = point_scene(0.5, 0.0);
    for (const double theta : {0.2, 0.7, 1.1}) {
        const auto plus = amplitude(lensed, theta, 0.0);
        const auto minus = amplitude(lensed, -theta, 0.0);
        CHECK(std::abs(plus) == doctest::Approx(std::abs(minus)).epsilon(1e-9));
    }
}

TEST_CASE("amplitude: translating the lens translates the pattern") {
    // u -> u + x_L maps the integral exactly; discretization breaks the
    // identity only at grid-offset level.
    auto scene = point_scene(0.5, 0.0);
    const auto centered = amplitude(scene, 0.4, 0.0);
    const auto shifted = amplitude(scene, 0.6, 0.2);
    CHECK(std::abs(std::abs(shifted) - std::abs(centered)) < 1e-3 * std::abs(centered));
}

TEST_CASE("amplitude: geometric-optics magnification oracle") {
    // Stationary-phase evaluation of the same Fermat phase: images at the
    // roots of D u(u - theta) = 4M, each contributing sqrt(D/phi'') with
    // phase omega phi(u_j) - (pi/4) sgn(phi'').
    auto scene = point_scene(0.5, 0.0, 60.0);
    scene.lens_plane_samples = 1 << 16;
    const double D = scene.time_delay_distance();
    const double M = scene.lens_mass;
    for (const double theta : {0.35, 0.8, 1.2}) {
        const double disc = std::sqrt(theta * theta + 16.0 * M / D);
        std::complex<double> oracle = 0.0;
        for (const double u : {0.5 * (theta + disc), 0.5 * (theta - disc)}) {
            const double sep2 = u * u + scene.core_radius * scene.core_radius;
            const double phase =
                scene.omega * (0.5 * D * (u - theta) * (u - theta) - 2.0 * M * std::log(sep2));
            const double curv = D + 4.0 * M / (u * u);
            // The e^{-i pi/4} prefactor cancels against the e^{+i pi/4} of a
            // positive-curvature saddle, leaving sqrt(D/phi'') e^{i omega phi}.
            oracle += std::sqrt(D / curv) * std::exp(std::complex<double>(0.0, phase));
        }
        const double predicted = std::norm(oracle);
        const double computed = std::norm(amplitude(scene, theta, 0.0));
        CHECK(computed == doctest::Approx(predicted).epsilon(0.05));
    }
}

TEST_CASE("single-branch psi: classical and quantum intensities coincide") {
    const auto scene = point_scene(0.5, 0.3);
    const auto cl = intensity_classical(scene);
    const auto qg = intensity_quantum(scene);
    REQUIRE(cl.values.size() == qg.values.size());
    for (int i = 0; i < cl.values.size(); ++i) {
        CHECK(cl.values[i] >= 0.0);
        CHECK(std::abs(cl.values[i] - qg.values[i]) <= 1e-10 * std::abs(cl.values[i]));
    }
}

TEST_CASE("symmetric scenes give symmetric intensities") {
    const auto scene = make_scene(0.5, 20.0, {-0.5, 0.5}, {1.0, 1.0}, 0.05, 201, 1.5);
    for (const auto& profile : {intensity_classical(scene), intensity_quantum(scene)}) {
        const int n = static_cast<int>(profile.values.size());
        for (int i = 0; i < n; ++i) {
            CHECK(profile.values[i] ==
                  doctest::Approx(profile.values[n - 1 - i]).epsilon(1e-6));
        }
    }
}

TEST_CASE("broad psi flattens the classical profile") {
    // Widths {1, 4, 16} x sigma_0 beyond the focusing width sqrt(4M/D) wash
    // the smeared potential out; the profile approaches the unlensed flat one.
    double previous = 1e9;
    for (const double width : {2.0, 8.0, 32.0}) {
        const auto scene = make_scene(0.5, 20.0, {0.0}, {1.0}, width, 161, 1.2);
        const auto profile = intensity_classical(scene);
        const double deviation = (profile.values.array() - 1.0).abs().maxCoeff();
        CHECK(deviation < previous);
        previous = deviation;
    }
    CHECK(previous < 0.2);  // widest case is close to flat
}

namespace {

// Linearly interpolated zero crossings of f over theta, restricted to |theta| <= limit.
std::vector<double> zero_crossings(const Eigen::VectorXd& theta, const Eigen::VectorXd& f,
                                   double limit) {
    std::vector<double> out;
    for (int i = 1; i < f.size(); ++i) {
        if (std::abs(theta(i - 1)) > limit || std::abs(theta(i)) > limit) continue;
        if (f(i) * f(i - 1) >= 0.0) continue;
        out.push_back(theta(i - 1) +
                      f(i - 1) / (f(i - 1) - f(i)) * (theta(i) - theta(i - 1)));
    }
    return out;
}

}  // namespace

TEST_CASE("two-branch coherence: fringes, contrast ordering, flux balance") {
    const double sep = 0.6;
    const double sigma = 0.002;  // narrow: in-branch phase spread << 1 rad
    const auto scene = make_scene(0.5, 20.0, {-sep, sep}, {1.0, 1.0}, sigma, 801, 1.5);
    const auto cl = intensity_classical(scene);
    const auto qg = intensity_quantum(scene);

    CHECK(fringe_contrast(qg) > fringe_contrast(cl));
    // Frozen goldens for the default scene (also the CLI default).
    CHECK(fringe_contrast(cl) == doctest::Approx(0.997040994833720).epsilon(1e-9));
    CHECK(fringe_contrast(qg) == doctest::Approx(0.999421869589119).epsilon(1e-9));

    // Flux is redistributed, not created.
    CHECK(qg.values.sum() == doctest::Approx(cl.values.sum()).epsilon(0.10));

    // Two-path oracle. The branch cross term C = I_qg - (I_1 + I_2)/2 equals
    // |A_1||A_2| cos(delta), where delta is the relative phase of the two
    // branch amplitudes, so the fringe nodes of C must sit where cos(delta)
    // vanishes. The prediction is built from the two point-lens amplitudes.
    const auto one = make_scene(0.5, 20.0, {-sep}, {1.0}, sigma, 801, 1.5);
    const auto two = make_scene(0.5, 20.0, {sep}, {1.0}, sigma, 801, 1.5);
    const Eigen::VectorXd cross =
        qg.values - 0.5 * (intensity_quantum(one).values + intensity_quantum(two).values);

    Eigen::VectorXd cos_delta(qg.theta_grid.size());
    for (int i = 0; i < qg.theta_grid.size(); ++i) {
        cos_delta(i) = std::cos(std::arg(amplitude(scene, qg.theta_grid(i), -sep) *
                                         std::conj(amplitude(scene, qg.theta_grid(i), sep))));
    }
    const auto measured = zero_crossings(qg.theta_grid, cross, 0.75);
    const auto predicted = zero_crossings(qg.theta_grid, cos_delta, 0.80);
    REQUIRE(predicted.size() >= 2);

    std::vector<double> gaps;
    for (std::size_t k = 1; k < predicted.size(); ++k) {
        gaps.push_back(predicted[k] - predicted[k - 1]);
    }
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    const double spacing = gaps[gaps.size() / 2];

    // Every substantial fringe node matches a predicted one to within 5% of
    // the fringe spacing. Near-zero wiggles of C (amplitude nodes of a single
    // branch) carry no fringe information and are skipped.
    const double c_max = cross.cwiseAbs().maxCoeff();
    int checked = 0;
    for (const double tc : measured) {
        int i0 = 0;
        while (i0 + 1 < qg.theta_grid.size() && qg.theta_grid(i0) < tc) ++i0;
        double local = 0.0;
        for (int j = std::max(0, i0 - 4); j < std::min<int>(cross.size(), i0 + 5); ++j) {
            local = std::max(local, std::abs(cross(j)));
        }
        if (local < 0.1 * c_max) continue;
        double nearest = std::numeric_limits<double>::infinity();
        for (const double p : predicted) nearest = std::min(nearest, std::abs(p - tc));
        CHECK(nearest < 0.05 * spacing);
        ++checked;
    }
    CHECK(checked >= 5);

    // Global phase on psi leaves I_qg untouched.
    auto rotated = scene;
    rotated.psi *= std::exp(std::complex<double>(0.0, 1.234));
    const auto qg2 = intensity_quantum(rotated);
    CHECK((qg2.values - qg.values).cwiseAbs().maxCoeff() < 1e-10 * qg.values.maxCoeff());
}

TEST_CASE("fringe_contrast") {
    IntensityProfile flat{Eigen::VectorXd::LinSpaced(64, -1.0, 1.0),
                          Eigen::VectorXd::Constant(64, 3.0)};
    CHECK(fringe_contrast(flat) == doctest::Approx(0.0).epsilon(1e-12));

    IntensityProfile cosine{Eigen::VectorXd::LinSpaced(257, -1.0, 1.0), {}};
    cosine.values = (8.0 * cosine.theta_grid.array()).cos().square();
    CHECK(fringe_contrast(cosine) == doctest::Approx(1.0).epsilon(1e-3));

    IntensityProfile tiny{Eigen::VectorXd::LinSpaced(7, -1.0, 1.0),
                          Eigen::VectorXd::Constant(7, 1.0)};
    CHECK_THROWS_AS(fringe_contrast(tiny), InsufficientGrid);
}

TEST_CASE("resolution guard") {
    auto scene = point_scene(0.5, 0.0, 20.0);
    scene.lens_plane_samples = 128;
    CHECK_THROWS_AS(amplitude(scene, 0.0, 0.0), GridResolutionError);
}

TEST_CASE("csv emission") {
    const auto scene = make_scene(0.5, 20.0, {0.0}, {1.0}, 0.05, 33, 1.0);
    const auto cl = intensity_classical(scene);
    const auto qg = intensity_quantum(scene);
    std::ostringstream out;
    write_lensing_csv(cl, qg, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,I_cl,I_qg");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 33);
}
