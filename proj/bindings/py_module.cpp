// Python bindings for the hardy core library. Thin wrappers only: the
// Python surface mirrors the C++ API one-to-one and adds no behavior.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardy/linalg.hpp"
#include "hardy/logic.hpp"
#include "hardy/model.hpp"
#include "hardy/pn_test.hpp"
#include "hardy/state.hpp"
#include "hardy/types.hpp"
#include "hardy/witness.hpp"

namespace py = pybind11;
using namespace hardy;

PYBIND11_MODULE(_hardy, m) {
  m.doc() =
      "Classify n-qubit pure states: tensor products of 1-qubit states and "
      "maximally entangled pairs (P_n), or logically contextual with n+2 "
      "witnessing local observables.";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("norm", &Tolerances::norm)
      .def_readwrite("herm", &Tolerances::herm)
      .def_readwrite("purity", &Tolerances::purity)
      .def_readwrite("mm", &Tolerances::mm)
      .def_readwrite("maxent", &Tolerances::maxent)
      .def_readwrite("zero", &Tolerances::zero)
      .def_readwrite("support", &Tolerances::support)
      .def_readwrite("recon", &Tolerances::recon);

  py::class_<QubitState>(m, "QubitState")
      .def(py::init<>())
      .def(py::init([](int n, CVec amp) {
             QubitState s{n, std::move(amp)};
             if (n < 1 || s.amp.size() != (size_t{1} << n))
               throw input_error("amplitude count must be 2^n");
             return s;
           }),
           py::arg("n"), py::arg("amp"))
      .def_readwrite("n", &QubitState::n)
      .def_readwrite("amp", &QubitState::amp);

  m.def("parse_state", &parse_state, py::arg("text"));
  m.def("write_state", &write_state, py::arg("state"));

  py::class_<Rng>(m, "Rng")
      .def(py::init<uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian);

  m.def("random_state", &random_state, py::arg("n"), py::arg("rng"));
  m.def("random_pn_state", &random_pn_state, py::arg("n"), py::arg("pairs"), py::arg("rng"));
  m.def("tau", &tau, py::arg("a"), py::arg("psi"), py::arg("phi"),
        py::arg("tol") = Tolerances{});

  py::class_<SchmidtForm>(m, "SchmidtForm")
      .def_readonly("alpha", &SchmidtForm::alpha)
      .def_readonly("beta", &SchmidtForm::beta)
      .def_readonly("basis1_plus", &SchmidtForm::basis1_plus)
      .def_readonly("basis1_minus", &SchmidtForm::basis1_minus)
      .def_readonly("basis2_plus", &SchmidtForm::basis2_plus)
      .def_readonly("basis2_minus", &SchmidtForm::basis2_minus);

  m.def("schmidt_2qubit", &schmidt_2qubit, py::arg("state"));

  py::class_<EntanglementType>(m, "EntanglementType")
      .def(py::init<>())
      .def_readwrite("pairs", &EntanglementType::pairs)
      .def_readwrite("singles", &EntanglementType::singles)
      .def("__eq__", [](const EntanglementType& a, const EntanglementType& b) { return a == b; })
      .def("__str__", [](const EntanglementType& t) { return to_string(t); });

  py::class_<PnResult>(m, "PnResult")
      .def_readonly("in_pn", &PnResult::in_pn)
      .def_readonly("type", &PnResult::type)
      .def_readonly("singles", &PnResult::singles)
      .def_readonly("pairs", &PnResult::pairs);

  m.def("test_pn", &test_pn, py::arg("state"), py::arg("tol") = Tolerances{});

  py::enum_<DiffKind>(m, "DiffKind")
      .value("Identical", DiffKind::Identical)
      .value("OneQubit", DiffKind::OneQubit)
      .value("ManyQubit", DiffKind::ManyQubit);

  py::class_<DiffReport>(m, "DiffReport")
      .def_readonly("kind", &DiffReport::kind)
      .def_readonly("position", &DiffReport::position)
      .def_readonly("first", &DiffReport::first)
      .def_readonly("second", &DiffReport::second);

  m.def("factor_difference", &factor_difference, py::arg("first"), py::arg("second"),
        py::arg("tol") = Tolerances{});

  py::class_<Observable>(m, "Observable")
      .def(py::init([](std::string label, CVec plus, CVec minus) {
             return Observable{std::move(label), std::move(plus), std::move(minus)};
           }),
           py::arg("label"), py::arg("plus"), py::arg("minus"))
      .def_readwrite("label", &Observable::label)
      .def_readwrite("plus", &Observable::plus)
      .def_readwrite("minus", &Observable::minus);

  m.def("z_observable", &z_observable);
  m.def("b_observable", &b_observable, py::arg("x"), py::arg("y"));
  m.def("hardy_observables", &hardy_observables, py::arg("schmidt"),
        py::arg("tol") = Tolerances{});

  py::class_<HardyPair>(m, "HardyPair")
      .def_readonly("first_u", &HardyPair::first_u)
      .def_readonly("first_d", &HardyPair::first_d)
      .def_readonly("second_u", &HardyPair::second_u)
      .def_readonly("second_d", &HardyPair::second_d);

  py::enum_<Verdict>(m, "Verdict")
      .value("InPn", Verdict::InPn)
      .value("Contextual", Verdict::Contextual);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("verdict", &WitnessReport::verdict)
      .def_readonly("pn", &WitnessReport::pn)
      .def_readonly("assignment", &WitnessReport::assignment)
      .def_readonly("trace", &WitnessReport::trace);

  m.def("classify", &classify, py::arg("state"), py::arg("tol") = Tolerances{});
  m.def("witness_to_json", &witness_to_json, py::arg("report"));
  m.def("witness_from_json", &witness_from_json, py::arg("text"));

  py::class_<MeasurementScenario>(m, "MeasurementScenario")
      .def(py::init<>())
      .def_readwrite("parties", &MeasurementScenario::parties)
      .def_readwrite("menu", &MeasurementScenario::menu)
      .def("context_count", &MeasurementScenario::context_count)
      .def("context_choice", &MeasurementScenario::context_choice, py::arg("ctx"))
      .def("context_label", &MeasurementScenario::context_label, py::arg("ctx"));

  py::class_<EmpiricalModel>(m, "EmpiricalModel")
      .def(py::init<>())
      .def_readwrite("scenario", &EmpiricalModel::scenario)
      .def_readwrite("tables", &EmpiricalModel::tables)
      .def_readwrite("support_tol", &EmpiricalModel::support_tol);

  m.def("born_probability", &born_probability, py::arg("state"), py::arg("context"),
        py::arg("outcome_mask"));
  m.def("build_model", &build_model, py::arg("state"), py::arg("assignment"),
        py::arg("support_tol") = 1e-9);
  m.def("support", &support, py::arg("model"), py::arg("ctx"));
  m.def("model_to_json", &model_to_json, py::arg("model"));
  m.def("model_from_json", &model_from_json, py::arg("text"));
  m.def("outcome_to_string", &outcome_to_string, py::arg("mask"), py::arg("parties"));
  m.def("outcome_from_string", &outcome_from_string, py::arg("text"));

  py::class_<ContextWitness>(m, "ContextWitness")
      .def(py::init([](int context, unsigned outcome) {
             return ContextWitness{context, outcome};
           }),
           py::arg("context"), py::arg("outcome"))
      .def_readwrite("context", &ContextWitness::context)
      .def_readwrite("outcome", &ContextWitness::outcome)
      .def("__eq__",
           [](const ContextWitness& a, const ContextWitness& b) { return a == b; });

  py::class_<ContextualityVerdict>(m, "ContextualityVerdict")
      .def_readonly("logically_contextual", &ContextualityVerdict::logically_contextual)
      .def_readonly("strongly_contextual", &ContextualityVerdict::strongly_contextual)
      .def_readonly("witnesses", &ContextualityVerdict::witnesses);

  m.def("check_logical", &check_logical, py::arg("model"));
  m.def("export_dimacs", &export_dimacs, py::arg("model"), py::arg("witness"));
  m.def("hardy_paradox_probability", &hardy_paradox_probability, py::arg("model"),
        py::arg("witness"));
}
