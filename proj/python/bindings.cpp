#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqg/decoherence.hpp"
#include "pqg/gravatom.hpp"
#include "pqg/lensing.hpp"
#include "pqg/qstate.hpp"
#include "pqg/quadrature.hpp"
#include "pqg/units.hpp"
#include "pqg/wavepacket.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gravitational decoherence of primordial massive particles";

    auto constants = m.def_submodule("constants");
    constants.attr("hbar") = pqg::constants::hbar;
    constants.attr("c") = pqg::constants::c;
    constants.attr("G") = pqg::constants::G;
    constants.attr("k_boltzmann") = pqg::constants::k_boltzmann;
    constants.attr("planck_mass") = pqg::constants::planck_mass;
    constants.attr("planck_time") = pqg::constants::planck_time;
    constants.attr("planck_length") = pqg::constants::planck_length;
    constants.attr("planck_energy") = pqg::constants::planck_energy;
    constants.attr("kg_per_gev") = pqg::constants::kg_per_gev;

    m.def("riemann_zeta", &pqg::riemann_zeta, py::arg("s"));
    m.def(
        "integrate_semi_infinite",
        [](const std::function<double(double)>& f, double rel_tol) {
            const auto r = pqg::integrate_semi_infinite(f, rel_tol);
            return py::make_tuple(r.value, r.abs_error_estimate, r.evaluations);
        },
        py::arg("f"), py::arg("rel_tol") = 1e-10,
        "Integral of f over (0, inf); returns (value, error_estimate, evaluations)");

    m.def("gamma0_photon_closed_natural", &pqg::gamma0_photon_closed_natural,
          py::arg("mass_natural"), py::arg("beta"));
    m.def("gamma0_photon_quadrature_natural", &pqg::gamma0_photon_quadrature_natural,
          py::arg("mass_natural"), py::arg("beta"), py::arg("rel_tol") = 1e-10);
    m.def(
        "gamma0_fermion_natural",
        [](double mass, double fermion_mass, double beta, double D, double rel_tol) {
            return pqg::gamma0_fermion_natural(mass, fermion_mass, beta, pqg::SpreadBound(D),
                                               rel_tol);
        },
        py::arg("mass_natural"), py::arg("fermion_mass"), py::arg("beta"), py::arg("D"),
        py::arg("rel_tol") = 1e-8);
    m.def(
        "gamma0_photon_si",
        [](double mass_kg, double temperature_K) {
            const auto s = pqg::gamma0_photon_closed(mass_kg, temperature_K);
            return py::make_tuple(s.gamma0_si, s.t_fraction);
        },
        py::arg("mass_kg"), py::arg("temperature_K"),
        "Closed-form photon bound; returns (gamma0 [1/s], t_0.01 [s])");
    m.def("decoherence_time", &pqg::decoherence_time, py::arg("rate_per_s"),
          py::arg("purity_drop"));
    m.def(
        "figure1_sweep",
        [](double mass_kg, double t_min, double t_max, int points) {
            std::vector<std::tuple<double, double, double>> rows;
            for (const auto& r : pqg::figure1_sweep(mass_kg, t_min, t_max, points)) {
                rows.emplace_back(r.temperature_K, r.gamma0_per_s, r.t001_s);
            }
            return rows;
        },
        py::arg("mass_kg"), py::arg("t_min_K"), py::arg("t_max_K"), py::arg("points"));

    m.def(
        "spread_at",
        [](double mass_kg, double s0_m, double elapsed_s) {
            return pqg::spread_at({mass_kg, s0_m, elapsed_s});
        },
        py::arg("mass_kg"), py::arg("s0_m"), py::arg("elapsed_s"));
    m.def("minimal_spread", &pqg::minimal_spread, py::arg("mass_kg"), py::arg("elapsed_s"));

    m.def("energy_level", &pqg::energy_level, py::arg("mass_gev"), py::arg("n"));
    m.def("orbit_radius", &pqg::orbit_radius, py::arg("mass_gev"), py::arg("n"));
    m.def("orbit_velocity", &pqg::orbit_velocity, py::arg("mass_gev"), py::arg("n"));
    m.def("transition_frequency", &pqg::transition_frequency, py::arg("mass_gev"),
          py::arg("m_level"), py::arg("n_level"), py::arg("cycles") = false);
    m.def(
        "spectrum",
        [](double mass_gev, int n_max) {
            const auto s = pqg::spectrum(mass_gev, n_max);
            py::dict out;
            std::vector<std::tuple<int, double, double, double>> levels;
            for (const auto& lv : s.levels) {
                levels.emplace_back(lv.n, lv.energy_J, lv.radius_m, lv.velocity_mps);
            }
            std::vector<std::tuple<int, int, double>> lines;
            for (const auto& ln : s.lines) lines.emplace_back(ln.m, ln.n, ln.nu_Hz);
            out["levels"] = levels;
            out["lines"] = lines;
            return out;
        },
        py::arg("mass_gev"), py::arg("n_max"));

    py::class_<pqg::MomentumGrid>(m, "MomentumGrid")
        .def(py::init<int, double, double>(), py::arg("n"), py::arg("k_center"), py::arg("dk"))
        .def_readonly("n", &pqg::MomentumGrid::n)
        .def_readonly("k_center", &pqg::MomentumGrid::k_center)
        .def_readonly("dk", &pqg::MomentumGrid::dk)
        .def("k_values", &pqg::MomentumGrid::k_values);

    py::class_<pqg::DensityMatrixGrid>(m, "DensityMatrixGrid")
        .def_readonly("grid", &pqg::DensityMatrixGrid::grid)
        .def_readonly("rho", &pqg::DensityMatrixGrid::rho);

    m.def("gaussian_state", &pqg::gaussian_state, py::arg("grid"), py::arg("k0"),
          py::arg("sigma_k"));
    m.def("random_mixed_state", &pqg::random_mixed_state, py::arg("grid"), py::arg("rank"),
          py::arg("seed"));
    m.def("purity", &pqg::purity);
    m.def("displaced", &pqg::displaced, py::arg("state"), py::arg("q"));
    m.def("lambda_of_q", &pqg::lambda_of_q, py::arg("state"), py::arg("q"));
    m.def(
        "evolve",
        [](const pqg::DensityMatrixGrid& initial, double beta, double mass_natural, double dt,
           int steps) {
            const auto env = pqg::ThermalEnvironment::photon(beta);
            const pqg::CouplingKernel kernel(mass_natural);
            auto state = initial;
            std::vector<std::pair<double, double>> trajectory{{0.0, pqg::purity(state)}};
            for (int i = 1; i <= steps; ++i) {
                state = pqg::evolve_step(state, env, kernel, dt);
                trajectory.emplace_back(i * dt, pqg::purity(state));
            }
            return py::make_tuple(state, trajectory);
        },
        py::arg("initial"), py::arg("beta"), py::arg("mass_natural"), py::arg("dt"),
        py::arg("steps"), "Returns (final state, [(t, purity), ...])");
    m.def(
        "discrete_gamma0",
        [](double beta, double mass_natural, const pqg::MomentumGrid& grid) {
            return pqg::discrete_gamma0(pqg::ThermalEnvironment::photon(beta),
                                        pqg::CouplingKernel(mass_natural), grid);
        },
        py::arg("beta"), py::arg("mass_natural"), py::arg("grid"));
    m.def(
        "reduced_purity",
        [](const pqg::MomentumGrid& grid, const Eigen::MatrixXcd& psi) {
            return pqg::reduced_purity({grid, psi});
        },
        py::arg("grid"), py::arg("psi"));
    m.def(
        "correlated_gaussian",
        [](const pqg::MomentumGrid& grid, double k0, double sigma_k, double r) {
            return pqg::correlated_gaussian(grid, k0, sigma_k, r).psi;
        },
        py::arg("grid"), py::arg("k0"), py::arg("sigma_k"), py::arg("r"));

    m.def(
        "lensing_profiles",
        [](double lens_mass, double omega, const std::vector<double>& centers,
           const std::vector<double>& weights, double sigma, int theta_points,
           double theta_halfwidth) {
            const auto scene = pqg::make_scene(lens_mass, omega, centers, weights, sigma,
                                               theta_points, theta_halfwidth);
            const auto cl = pqg::intensity_classical(scene);
            const auto qg = pqg::intensity_quantum(scene);
            return py::make_tuple(cl.theta_grid, cl.values, qg.values);
        },
        py::arg("lens_mass"), py::arg("omega"), py::arg("centers"), py::arg("weights"),
        py::arg("sigma"), py::arg("theta_points") = 161, py::arg("theta_halfwidth") = 1.5,
        "Returns (theta, I_cl, I_qg)");
    m.def(
        "fringe_contrast",
        [](const Eigen::VectorXd& theta, const Eigen::VectorXd& values) {
            return pqg::fringe_contrast({theta, values});
        },
        py::arg("theta"), py::arg("values"));

    py::register_exception<pqg::Error>(m, "PqgError", PyExc_ValueError);
}
