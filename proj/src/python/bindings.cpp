#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcoherence/audit.hpp"
#include "qcoherence/coherence.hpp"
#include "qcoherence/numerics.hpp"
#include "qcoherence/potential.hpp"
#include "qcoherence/spectral.hpp"
#include "qcoherence/timescales.hpp"
#include "qcoherence/units.hpp"

namespace py = pybind11;
using namespace qcoh;

PYBIND11_MODULE(_qcoherence, m) {
    m.doc() = "Quantum-coherence timescales for a particle in a gated bistable barrier";

    // potential
    py::class_<DoubleWell>(m, "DoubleWell")
        .def(py::init([](double mass, double omega, double a, double A, double B) {
                 return DoubleWell{mass, omega, a, A, B};
             }),
             py::arg("m") = 1.0, py::arg("omega") = 1.0, py::arg("a") = 1.0,
             py::arg("A") = 14.0, py::arg("B") = 45.0)
        .def_readwrite("m", &DoubleWell::m)
        .def_readwrite("omega", &DoubleWell::omega)
        .def_readwrite("a", &DoubleWell::a)
        .def_readwrite("A", &DoubleWell::A)
        .def_readwrite("B", &DoubleWell::B);

    py::class_<WellGeometry>(m, "WellGeometry")
        .def_readonly("xi_upper", &WellGeometry::xi_upper)
        .def_readonly("xi_barrier", &WellGeometry::xi_barrier)
        .def_readonly("xi_lower", &WellGeometry::xi_lower)
        .def_readonly("epsilon0", &WellGeometry::epsilon0)
        .def_readonly("w", &WellGeometry::w)
        .def_readonly("nu", &WellGeometry::nu)
        .def_readonly("barrier_height_upper", &WellGeometry::barrier_height_upper);

    m.def("evaluate", &evaluate, py::arg("well"), py::arg("x"),
          "V(x) of the bistable potential");
    m.def("analyze", &analyze, py::arg("well"),
          "well/barrier geometry, asymmetry energy, separation and nu");
    m.def("omega_from_epsilon0", &omega_from_epsilon0, py::arg("m"),
          py::arg("epsilon0"), py::arg("w"));
    m.def("ground_state", &ground_state, py::arg("nu"), py::arg("xi"));
    m.def("overlap", &overlap, py::arg("nu"), py::arg("xi1"));

    // spectral
    py::class_<Level>(m, "Level")
        .def(py::init([](double energy, int degeneracy, double probability) {
                 return Level{energy, degeneracy, probability};
             }),
             py::arg("energy"), py::arg("degeneracy") = 1, py::arg("probability") = 0.0)
        .def_readwrite("energy", &Level::energy)
        .def_readwrite("degeneracy", &Level::degeneracy)
        .def_readwrite("probability", &Level::probability);

    py::class_<SpectrumOccupation>(m, "SpectrumOccupation")
        .def(py::init<std::vector<Level>>(), py::arg("levels"))
        .def_property_readonly("levels", &SpectrumOccupation::levels);

    py::class_<TwoStateOccupation>(m, "TwoStateOccupation")
        .def(py::init([](double p0, double p1, double e0, double e1) {
                 return TwoStateOccupation{p0, p1, e0, e1};
             }),
             py::arg("p0"), py::arg("p1"), py::arg("e0"), py::arg("e1"))
        .def_readwrite("p0", &TwoStateOccupation::p0)
        .def_readwrite("p1", &TwoStateOccupation::p1)
        .def_readwrite("e0", &TwoStateOccupation::e0)
        .def_readwrite("e1", &TwoStateOccupation::e1);

    py::enum_<RatioConvention>(m, "RatioConvention")
        .value("printed", RatioConvention::printed)
        .value("derived", RatioConvention::derived);

    m.def("inverse_spectral_temperature", &inverse_spectral_temperature,
          py::arg("spectrum"));
    m.def("inverse_spectral_temperature_two_state",
          &inverse_spectral_temperature_two_state, py::arg("occupation"));
    m.def("gated_inverse_temperature", &gated_inverse_temperature, py::arg("gamma"),
          py::arg("tau_m"), py::arg("delta_e"));
    m.def("temperature_ratio", &temperature_ratio, py::arg("theta"),
          py::arg("convention") = RatioConvention::printed);

    // timescales
    py::class_<ChannelScenario>(m, "ChannelScenario")
        .def(py::init([](double mass, double gamma, double tau_m, double epsilon0,
                         double w) {
                 return ChannelScenario{mass, gamma, tau_m, epsilon0, w};
             }),
             py::arg("m"), py::arg("gamma"), py::arg("tau_m"), py::arg("epsilon0"),
             py::arg("w"))
        .def_readwrite("m", &ChannelScenario::m)
        .def_readwrite("gamma", &ChannelScenario::gamma)
        .def_readwrite("tau_m", &ChannelScenario::tau_m)
        .def_readwrite("epsilon0", &ChannelScenario::epsilon0)
        .def_readwrite("w", &ChannelScenario::w);

    py::class_<DimensionlessControls>(m, "DimensionlessControls")
        .def(py::init([](double q, double theta) {
                 return DimensionlessControls{q, theta};
             }),
             py::arg("q"), py::arg("theta"))
        .def_readwrite("q", &DimensionlessControls::q)
        .def_readwrite("theta", &DimensionlessControls::theta);

    py::enum_<QuasiStaticConstant>(m, "QuasiStaticConstant")
        .value("paper_4_5", QuasiStaticConstant::coefficient_4_5)
        .value("exact_limit", QuasiStaticConstant::exact_limit);

    m.def("controls_from_scenario", &controls_from_scenario, py::arg("scenario"));
    m.def("decoherence_time", &decoherence_time, py::arg("m"), py::arg("gamma"),
          py::arg("kt"), py::arg("dx"));
    m.def("dwell_time", &dwell_time, py::arg("gamma"), py::arg("tau_m"));
    m.def("ratio_dec_dwell", &ratio_dec_dwell, py::arg("controls"));
    m.def("quasi_static_ratio", &quasi_static_ratio, py::arg("controls"),
          py::arg("convention") = QuasiStaticConstant::coefficient_4_5);
    m.def("ratio_first_principles", &ratio_first_principles, py::arg("scenario"));

    // coherence
    py::class_<CoherenceReport>(m, "CoherenceReport")
        .def_readonly("g1_printed", &CoherenceReport::g1_printed)
        .def_readonly("g1_quasi_static", &CoherenceReport::g1_quasi_static)
        .def_readonly("g1_first_principles", &CoherenceReport::g1_first_principles)
        .def_readonly("tau_ratio_printed", &CoherenceReport::tau_ratio_printed)
        .def_readonly("tau_ratio_from_g", &CoherenceReport::tau_ratio_from_g)
        .def_readonly("q", &CoherenceReport::q)
        .def_readonly("theta", &CoherenceReport::theta);

    m.def("g1_first_principles", &g1_first_principles, py::arg("nu"), py::arg("xi1"),
          py::arg("gamma"), py::arg("tau_m"));
    m.def("g1_printed", &g1_printed, py::arg("controls"));
    m.def("g1_quasi_static", &g1_quasi_static, py::arg("q"));
    m.def("ratio_from_coherence", &ratio_from_coherence, py::arg("g"));
    m.def(
        "coherence_report",
        [](const DimensionlessControls& c) { return coherence_report(c); },
        py::arg("controls"));
    m.def(
        "coherence_report_overlap",
        [](const DimensionlessControls& c, double nu, double xi1) {
            return coherence_report(c, nu, xi1);
        },
        py::arg("controls"), py::arg("nu"), py::arg("xi1"));

    // audit
    py::class_<AuditFactor>(m, "AuditFactor")
        .def_readonly("value", &AuditFactor::value)
        .def_readonly("constancy_spread", &AuditFactor::constancy_spread);

    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("eq7_factor", &AuditReport::eq7_factor)
        .def_readonly("eq9_constant_gap", &AuditReport::eq9_constant_gap)
        .def_readonly("eq16_exponent_factor", &AuditReport::eq16_exponent_factor)
        .def_readonly("eq17_residual", &AuditReport::eq17_residual);

    m.def("run_audit", &run_audit, py::arg("theta_grid"), py::arg("scenario_grid"));

    // numerics helpers used by the oracles
    m.def("coth_stable", &coth_stable, py::arg("x"));
    m.def(
        "integrate_line",
        [](const std::function<double(double)>& f, double tolerance) {
            const QuadratureResult r = integrate_line(f, tolerance);
            return py::make_tuple(r.value, r.error_estimate, r.evaluations);
        },
        py::arg("f"), py::arg("tolerance") = 1e-10,
        "adaptive quadrature over the whole real line; returns (value, error, evals)");

    m.attr("hbar_si") = units::kHbarSI;
    m.attr("boltzmann_si") = units::kBoltzmannSI;
    m.attr("family_exponent_ratio") = kFamilyExponentRatio;
}
