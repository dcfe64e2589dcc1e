#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eitangle/catalog.hpp"
#include "eitangle/effective_model.hpp"
#include "eitangle/entanglement.hpp"
#include "eitangle/fockspace.hpp"
#include "eitangle/full_model.hpp"
#include "eitangle/revival.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace eitangle;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-mode EIT condensate dynamics, fractional revivals, and "
            "atom-photon entanglement";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<TruncatedMode>(m, "TruncatedMode")
      .def(py::init<Eigen::VectorXcd>(), py::arg("amps"))
      .def_readwrite("amps", &TruncatedMode::amps)
      .def_property_readonly("cutoff", &TruncatedMode::cutoff)
      .def("norm", &TruncatedMode::norm)
      .def("__repr__", [](const TruncatedMode& s) {
        return "<TruncatedMode cutoff=" + std::to_string(s.cutoff()) + ">";
      });

  py::class_<TwoModeState>(m, "TwoModeState")
      .def(py::init<Eigen::MatrixXcd>(), py::arg("amps"))
      .def_readwrite("amps", &TwoModeState::amps)
      .def_property_readonly("photon_cutoff", &TwoModeState::photon_cutoff)
      .def_property_readonly("atom_cutoff", &TwoModeState::atom_cutoff)
      .def("norm", &TwoModeState::norm)
      .def("__repr__", [](const TwoModeState& s) {
        return "<TwoModeState " + std::to_string(s.photon_cutoff() + 1) + "x" +
               std::to_string(s.atom_cutoff() + 1) + ">";
      });

  m.def("default_cutoff", &default_cutoff, py::arg("alpha"));
  m.def(
      "coherent_amplitudes",
      [](Complex alpha, int cutoff) {
        auto r = coherent_amplitudes(alpha, cutoff);
        return py::make_tuple(r.mode, r.tail_mass);
      },
      py::arg("alpha"), py::arg("cutoff"),
      "Returns (mode, tail_mass) with the truncated coherent amplitudes and "
      "the probability mass beyond the cutoff.");
  m.def("coherent_mode", &coherent_mode, py::arg("alpha"), py::arg("cutoff"));
  m.def("tensor", &tensor, py::arg("photon"), py::arg("atom"));
  m.def("inner_product",
        py::overload_cast<const TruncatedMode&, const TruncatedMode&>(&inner_product),
        py::arg("a"), py::arg("b"));
  m.def("inner_product",
        py::overload_cast<const TwoModeState&, const TwoModeState&>(&inner_product),
        py::arg("a"), py::arg("b"));
  m.def("fidelity_up_to_global_phase", &fidelity_up_to_global_phase,
        py::arg("a"), py::arg("b"));
  m.def("normalize", py::overload_cast<const TruncatedMode&>(&normalize),
        py::arg("s"));
  m.def("normalize", py::overload_cast<const TwoModeState&>(&normalize),
        py::arg("s"));

  py::class_<EffectiveParams>(m, "EffectiveParams")
      .def_readonly("g1", &EffectiveParams::g1)
      .def_readonly("g2", &EffectiveParams::g2)
      .def_readonly("delta", &EffectiveParams::delta)
      .def_readonly("lambda1", &EffectiveParams::lambda1)
      .def_readonly("omega1p", &EffectiveParams::omega1p)
      .def_readonly("omega3p", &EffectiveParams::omega3p)
      .def_readonly("gprime", &EffectiveParams::gprime)
      .def_readonly("K", &EffectiveParams::K)
      .def_readonly("adiabatic_regime", &EffectiveParams::adiabatic_regime);

  m.def("derive_params", &derive_params, py::arg("g1"), py::arg("g2"),
        py::arg("delta"), py::arg("lambda1"));
  m.def("theta", &theta, py::arg("n"), py::arg("m"), py::arg("k"));
  m.def("energy", &energy, py::arg("n"), py::arg("m"), py::arg("params"));
  m.def("evolve", &evolve, py::arg("initial"), py::arg("tau"), py::arg("k"));

  py::class_<RationalTau>(m, "RationalTau")
      .def(py::init<long long, long long>(), py::arg("m"), py::arg("n"))
      .def_property_readonly("m", &RationalTau::M)
      .def_property_readonly("n", &RationalTau::N)
      .def("value", &RationalTau::value);

  py::class_<CoefficientGrid>(m, "CoefficientGrid")
      .def_readonly("order", &CoefficientGrid::order)
      .def_readonly("c", &CoefficientGrid::c)
      .def("at", &CoefficientGrid::at, py::arg("r"), py::arg("s"));

  m.def("coefficients", &coefficients, py::arg("tau"), py::arg("k"));
  m.def("verify_determining_identity", &verify_determining_identity,
        py::arg("grid"), py::arg("tau"), py::arg("k"));
  m.def("assemble", &assemble, py::arg("grid"), py::arg("alpha"),
        py::arg("beta"), py::arg("photon_cutoff"), py::arg("atom_cutoff"));

  py::enum_<Parity>(m, "Parity")
      .value("EVEN", Parity::kEven)
      .value("ODD", Parity::kOdd);
  py::enum_<YsSign>(m, "YsSign")
      .value("PLUS", YsSign::kPlus)
      .value("MINUS", YsSign::kMinus);
  py::enum_<YsVariant>(m, "YsVariant")
      .value("EQ31", YsVariant::kEq31)
      .value("EQ33", YsVariant::kEq33);

  py::class_<CutoffPair>(m, "CutoffPair")
      .def(py::init<int, int>(), py::arg("photon"), py::arg("atom"))
      .def_readwrite("photon", &CutoffPair::photon)
      .def_readwrite("atom", &CutoffPair::atom);

  py::class_<NamedState>(m, "NamedState")
      .def_readonly("label", &NamedState::label)
      .def_readonly("state", &NamedState::state)
      .def_readonly("normalized", &NamedState::normalized);

  m.def("even_odd_cat", &even_odd_cat, py::arg("beta"), py::arg("parity"),
        py::arg("cutoff"));
  m.def("yurke_stoler_cat", &yurke_stoler_cat, py::arg("alpha"),
        py::arg("sign"), py::arg("cutoff"));
  m.def("two_state_entangled", &two_state_entangled, py::arg("alpha"),
        py::arg("beta"), py::arg("cutoffs"));
  m.def("two_state_entangled_alt", &two_state_entangled_alt, py::arg("alpha"),
        py::arg("beta"), py::arg("cutoffs"));
  m.def("entangled_coherent_ys", &entangled_coherent_ys, py::arg("alpha"),
        py::arg("beta"), py::arg("variant"), py::arg("cutoffs"));
  m.def("three_state_entangled", &three_state_entangled, py::arg("alpha"),
        py::arg("beta"), py::arg("cutoffs"));
  m.def("four_state_entangled", &four_state_entangled, py::arg("alpha"),
        py::arg("beta"), py::arg("cutoffs"));
  m.def("catalog_labels", [] { return catalog_labels(); });
  m.def("make_named_state", &make_named_state, py::arg("label"),
        py::arg("alpha"), py::arg("beta"), py::arg("cutoffs"));

  py::class_<TwoTermBipartite>(m, "TwoTermBipartite")
      .def(py::init([](Complex mu, Complex nu, TruncatedMode eta,
                       TruncatedMode xi, TruncatedMode gamma,
                       TruncatedMode delta) {
             return TwoTermBipartite{mu, nu, std::move(eta), std::move(xi),
                                     std::move(gamma), std::move(delta)};
           }),
           py::arg("mu"), py::arg("nu"), py::arg("eta"), py::arg("xi"),
           py::arg("gamma"), py::arg("delta"))
      .def_readwrite("mu", &TwoTermBipartite::mu)
      .def_readwrite("nu", &TwoTermBipartite::nu)
      .def_readwrite("eta", &TwoTermBipartite::eta)
      .def_readwrite("xi", &TwoTermBipartite::xi)
      .def_readwrite("gamma", &TwoTermBipartite::gamma)
      .def_readwrite("delta", &TwoTermBipartite::delta_st);

  py::class_<ConcurrenceResult>(m, "ConcurrenceResult")
      .def_readonly("p1", &ConcurrenceResult::p1)
      .def_readonly("p2", &ConcurrenceResult::p2)
      .def_readonly("norm_sq", &ConcurrenceResult::norm_sq)
      .def_readonly("lambda_plus", &ConcurrenceResult::lambda_plus)
      .def_readonly("lambda_minus", &ConcurrenceResult::lambda_minus)
      .def_readonly("concurrence", &ConcurrenceResult::concurrence)
      .def_readonly("schmidt_fallback", &ConcurrenceResult::schmidt_fallback);

  m.def("two_term_concurrence", &two_term_concurrence, py::arg("state"));
  m.def("closed_form_concurrence", &closed_form_concurrence, py::arg("alpha"),
        py::arg("beta"));
  m.def("schmidt_spectrum", &schmidt_spectrum, py::arg("state"));
  m.def("entanglement_entropy", &entanglement_entropy, py::arg("state"));

  py::class_<FullModelParams>(m, "FullModelParams")
      .def(py::init<>())
      .def_readwrite("g1", &FullModelParams::g1)
      .def_readwrite("g2", &FullModelParams::g2)
      .def_readwrite("delta1", &FullModelParams::delta1)
      .def_readwrite("delta2", &FullModelParams::delta2)
      .def_readwrite("lambda_", &FullModelParams::lambda)
      .def_readwrite("lambda12", &FullModelParams::lambda12)
      .def_readwrite("lambda13", &FullModelParams::lambda13)
      .def_readwrite("lambda23", &FullModelParams::lambda23)
      .def("ideal_eit", &FullModelParams::ideal_eit);

  py::class_<ModeCutoffs>(m, "ModeCutoffs")
      .def(py::init<>())
      .def(py::init([](int photon, int b1, int b2, int b3) {
             return ModeCutoffs{photon, b1, b2, b3};
           }),
           py::arg("photon") = 12, py::arg("b1") = 12, py::arg("b2") = 2,
           py::arg("b3") = 2)
      .def_readwrite("photon", &ModeCutoffs::photon)
      .def_readwrite("b1", &ModeCutoffs::b1)
      .def_readwrite("b2", &ModeCutoffs::b2)
      .def_readwrite("b3", &ModeCutoffs::b3);

  py::class_<ChargeSector>(m, "ChargeSector")
      .def_readonly("n_atoms", &ChargeSector::n_atoms)
      .def_readonly("n_exc", &ChargeSector::n_exc)
      .def_readonly("basis", &ChargeSector::basis);

  m.def("make_sector", &make_sector, py::arg("n_atoms"), py::arg("n_exc"),
        py::arg("cutoffs"));
  m.def("build_sector_hamiltonian", &build_sector_hamiltonian, py::arg("params"),
        py::arg("sector"));

  py::class_<FourModeState>(m, "FourModeState")
      .def_readonly("cutoffs", &FourModeState::cutoffs)
      .def_readonly("sectors", &FourModeState::sectors)
      .def("norm", &FourModeState::norm)
      .def("expectation_n2", &FourModeState::expectation_n2)
      .def("expectation_n3", &FourModeState::expectation_n3)
      .def("expectation_n_atoms", &FourModeState::expectation_n_atoms)
      .def("expectation_n_exc", &FourModeState::expectation_n_exc)
      .def("project_ground", &FourModeState::project_ground);

  py::class_<EvolveOptions>(m, "EvolveOptions")
      .def(py::init<>())
      .def_readwrite("dense_limit", &EvolveOptions::dense_limit)
      .def_readwrite("hard_limit", &EvolveOptions::hard_limit)
      .def_readwrite("krylov_tol", &EvolveOptions::krylov_tol)
      .def_readwrite("jobs", &EvolveOptions::jobs);

  m.def("initial_product_state", &initial_product_state, py::arg("alpha"),
        py::arg("beta"), py::arg("cutoffs"));
  m.def("evolve_full", &evolve_full, py::arg("state"), py::arg("params"),
        py::arg("t"), py::arg("options") = EvolveOptions{});

  py::class_<ValidationSample>(m, "ValidationSample")
      .def_readonly("t", &ValidationSample::t)
      .def_readonly("fidelity", &ValidationSample::fidelity)
      .def_readonly("leak_n2", &ValidationSample::leak_n2)
      .def_readonly("leak_n3", &ValidationSample::leak_n3)
      .def_readonly("norm", &ValidationSample::norm);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("samples", &ValidationReport::samples)
      .def_readonly("min_fidelity", &ValidationReport::min_fidelity)
      .def_readonly("max_leakage", &ValidationReport::max_leakage)
      .def_readonly("fitted_cross_kerr", &ValidationReport::fitted_cross_kerr)
      .def_readonly("nominal_cross_kerr", &ValidationReport::nominal_cross_kerr)
      .def_readonly("fitted_linear_m", &ValidationReport::fitted_linear_m)
      .def_readonly("fitted_kerr_m", &ValidationReport::fitted_kerr_m)
      .def_readonly("effective", &ValidationReport::effective);

  m.def("adiabatic_validation", &adiabatic_validation, py::arg("alpha"),
        py::arg("beta"), py::arg("params"), py::arg("lambda1"),
        py::arg("t_max"), py::arg("samples"), py::arg("cutoffs") = ModeCutoffs{},
        py::arg("options") = EvolveOptions{},
        py::arg("allow_off_resonance") = false);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
