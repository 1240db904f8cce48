#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stokes/cerf.hpp"
#include "stokes/collective.hpp"
#include "stokes/config.hpp"
#include "stokes/emission.hpp"
#include "stokes/errors.hpp"
#include "stokes/model.hpp"
#include "stokes/thermometry.hpp"

namespace py = pybind11;
using namespace stokes;

PYBIND11_MODULE(stokesthermo, m) {
    m.doc() = "Stokes emission-cone simulator and atomic-ensemble thermometry";

    py::register_exception<Error>(m, "StokesError");

    m.def("faddeeva", &faddeeva, py::arg("z"));
    m.def("erf_complex", &erf_complex, py::arg("z"));
    m.def("pair_erf_diff",
          [](Complex a, Complex b, Complex log_prefactor) {
              return pair_erf_diff(a, b, log_prefactor);
          },
          py::arg("a"), py::arg("b"), py::arg("log_prefactor"));

    py::class_<AtomSpecies>(m, "AtomSpecies")
        .def(py::init([](double mass_kg, double wavelength_m) {
                 return AtomSpecies{mass_kg, wavelength_m};
             }),
             py::arg("mass_kg") = rb87_mass_kg,
             py::arg("transition_wavelength_m") = rb87_d1_wavelength_m)
        .def_readonly("mass_kg", &AtomSpecies::mass_kg)
        .def_readonly("transition_wavelength_m", &AtomSpecies::transition_wavelength_m)
        .def("k0", &AtomSpecies::k0);

    py::class_<CloudGeometry>(m, "CloudGeometry")
        .def(py::init([](double lx, double ly, double lz) {
                 return CloudGeometry{lx, ly, lz};
             }),
             py::arg("lx") = 2e-3, py::arg("ly") = 2e-3, py::arg("lz") = 30e-3)
        .def_readonly("lx", &CloudGeometry::lx)
        .def_readonly("ly", &CloudGeometry::ly)
        .def_readonly("lz", &CloudGeometry::lz)
        .def("volume", &CloudGeometry::volume);

    py::class_<PumpPulse>(m, "PumpPulse")
        .def(py::init([](double waist_r0, double duration_tau) {
                 return PumpPulse{waist_r0, duration_tau};
             }),
             py::arg("waist_r0") = 2e-3, py::arg("duration_tau") = 10e-6)
        .def_readonly("waist_r0", &PumpPulse::waist_r0)
        .def_readonly("duration_tau", &PumpPulse::duration_tau);

    py::class_<StokesDirection>(m, "StokesDirection")
        .def(py::init([](double theta, double phi) {
                 return StokesDirection{theta, phi};
             }),
             py::arg("theta"), py::arg("phi") = 0.0)
        .def_readonly("theta", &StokesDirection::theta)
        .def_readonly("phi", &StokesDirection::phi);

    py::class_<ExperimentModel>(m, "ExperimentModel")
        .def_static("from_temperature", &ExperimentModel::from_temperature,
                    py::arg("species"), py::arg("cell"), py::arg("pump"),
                    py::arg("temperature_K"))
        .def_static("from_motion_radius", &ExperimentModel::from_motion_radius,
                    py::arg("species"), py::arg("cell"), py::arg("pump"),
                    py::arg("radius_A_m"))
        .def_property_readonly("motion_radius",
                               [](const ExperimentModel& mdl) { return mdl.motion().radius_A; })
        .def_property_readonly("temperature",
                               [](const ExperimentModel& mdl) { return mdl.motion().temperature; });

    m.def("most_probable_speed", &most_probable_speed, py::arg("species"),
          py::arg("temperature_K"));
    m.def("motion_radius", &motion_radius, py::arg("species"), py::arg("temperature_K"),
          py::arg("tau_s"));
    m.def("delta_k", &delta_k, py::arg("model"), py::arg("direction"));
    m.def("windowed_gaussian_fourier", &windowed_gaussian_fourier, py::arg("center_c"),
          py::arg("freq_q"), py::arg("motion_A"), py::arg("beam_w"),
          py::arg("half_window_L"));
    m.def("windowed_gaussian_fourier_quadrature", &windowed_gaussian_fourier_quadrature,
          py::arg("center_c"), py::arg("freq_q"), py::arg("motion_A"), py::arg("beam_w"),
          py::arg("half_window_L"), py::arg("abs_tol") = 1e-10);
    m.def("amplitude", &amplitude, py::arg("model"), py::arg("mean_pos"), py::arg("direction"));
    m.attr("INFINITE_BEAM") = infinite_beam;

    py::class_<AngularDistribution>(m, "AngularDistribution")
        .def_readonly("phi", &AngularDistribution::phi)
        .def_readonly("thetas", &AngularDistribution::thetas)
        .def_readonly("values", &AngularDistribution::values);

    m.def("emission_probability", &emission_probability, py::arg("model"),
          py::arg("direction"), py::arg("nodes_per_axis") = default_quad_nodes);
    m.def("angular_scan", &angular_scan, py::arg("model"), py::arg("phi"),
          py::arg("theta_max"), py::arg("n_points"),
          py::arg("nodes_per_axis") = default_quad_nodes);
    m.def("fwhm", &fwhm, py::arg("distribution"));
    m.def("cold_limit_distribution", &cold_limit_distribution, py::arg("model"),
          py::arg("direction"));
    m.def("hot_limit_distribution", &hot_limit_distribution, py::arg("model"),
          py::arg("direction"));

    py::class_<WeightProfile>(m, "WeightProfile")
        .def_readonly("thetas", &WeightProfile::thetas)
        .def_readonly("weights", &WeightProfile::weights)
        .def_readonly("fwhm_marker", &WeightProfile::fwhm_marker);

    m.def("symmetric_weight", &symmetric_weight, py::arg("model"), py::arg("direction"),
          py::arg("nodes_per_axis") = 256);
    m.def("weight_scan", &weight_scan, py::arg("model"), py::arg("phi"),
          py::arg("theta_max"), py::arg("n_points"), py::arg("nodes_per_axis") = 256);

    py::class_<CalibrationSetup>(m, "CalibrationSetup")
        .def(py::init([](AtomSpecies species, CloudGeometry cell, double waist_r0,
                         double tau, int nodes, int points) {
                 return CalibrationSetup{species, cell, waist_r0, tau, nodes, points};
             }),
             py::arg("species") = AtomSpecies{}, py::arg("cell") = CloudGeometry{},
             py::arg("waist_r0") = 2e-3, py::arg("tau") = 10e-6,
             py::arg("nodes_per_axis") = default_quad_nodes,
             py::arg("scan_points") = default_scan_points);

    py::class_<CalibrationPoint>(m, "CalibrationPoint")
        .def_readonly("temperature_K", &CalibrationPoint::temperature_K)
        .def_readonly("fwhm_rad", &CalibrationPoint::fwhm_rad);

    py::class_<CalibrationCurve>(m, "CalibrationCurve")
        .def_readonly("tau_s", &CalibrationCurve::tau_s)
        .def_readonly("model_fingerprint", &CalibrationCurve::model_fingerprint)
        .def_readonly("points", &CalibrationCurve::points);

    m.def("model_fingerprint", &model_fingerprint, py::arg("setup"));
    m.def("forward_fwhm", &forward_fwhm, py::arg("setup"), py::arg("temperature_K"));
    m.def("default_t_grid", &default_t_grid);
    m.def("calibrate", &calibrate, py::arg("setup"), py::arg("t_grid"));
    m.def("invert_temperature", &invert_temperature, py::arg("curve"),
          py::arg("fwhm_measured_rad"));
    m.def("refine_temperature", &refine_temperature, py::arg("setup"),
          py::arg("fwhm_measured_rad"), py::arg("t_lo"), py::arg("t_hi"),
          py::arg("rel_tol") = 1e-3);
    m.def("save_curve",
          [](const CalibrationCurve& curve, const std::string& path) {
              save_curve(curve, path);
          },
          py::arg("curve"), py::arg("path"));
    m.def("load_curve",
          [](const std::string& path) { return load_curve(path); },
          py::arg("path"));

    m.def("parse_temperature_literal", &parse_temperature_literal, py::arg("text"));
}
