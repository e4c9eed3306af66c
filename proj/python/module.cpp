#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewcomp/experiment.hpp"
#include "skewcomp/verify.hpp"

namespace py = pybind11;
using namespace skewcomp;

PYBIND11_MODULE(_skewcomp, m) {
  m.doc() = "Exact integer clock skew compensation";

  py::enum_<Movement>(m, "Movement")
      .value("HORIZONTAL", Movement::Horizontal)
      .value("DIAGONAL", Movement::Diagonal);
  py::enum_<TdConvention>(m, "TdConvention")
      .value("ORIGIN_ZERO", TdConvention::OriginZero)
      .value("TD_CONSISTENT", TdConvention::TdConsistent);
  py::enum_<FpFormat>(m, "FpFormat")
      .value("BINARY32", FpFormat::Binary32)
      .value("BINARY64", FpFormat::Binary64);
  py::enum_<MarginKind>(m, "MarginKind")
      .value("SCALED", MarginKind::Scaled)
      .value("ADDITIVE", MarginKind::Additive);
  py::enum_<RoundingMode>(m, "RoundingMode")
      .value("FLOOR", RoundingMode::Floor)
      .value("NEAREST_HALF_UP", RoundingMode::NearestHalfUp)
      .value("CEIL", RoundingMode::Ceil);
  py::enum_<QuotientOrder>(m, "QuotientOrder")
      .value("MUL_LAST", QuotientOrder::MulLast)
      .value("DIV_LAST", QuotientOrder::DivLast);
  py::enum_<RatioCase>(m, "RatioCase")
      .value("LT_ONE", RatioCase::LtOne)
      .value("EQ_ONE", RatioCase::EqOne)
      .value("GT_ONE", RatioCase::GtOne);
  py::enum_<Algorithm>(m, "Algorithm")
      .value("PROPOSED", Algorithm::Proposed)
      .value("BINARY32_BASELINE", Algorithm::Binary32Baseline);
  py::enum_<CandidatePolicy>(m, "CandidatePolicy")
      .value("BRESENHAM_WALK", CandidatePolicy::BresenhamWalk)
      .value("WINDOW_TOP", CandidatePolicy::WindowTop);

  py::class_<Slope>(m, "Slope")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("delta_a"),
           py::arg("delta_b"))
      .def_readonly("delta_a", &Slope::delta_a)
      .def_readonly("delta_b", &Slope::delta_b);

  py::class_<RatioEstimate>(m, "RatioEstimate")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("d"), py::arg("a"))
      .def_readonly("d", &RatioEstimate::d)
      .def_readonly("a", &RatioEstimate::a);

  py::class_<WindowParams>(m, "WindowParams")
      .def(py::init<>())
      .def_readwrite("epsilon", &WindowParams::epsilon)
      .def_readwrite("fp_mode", &WindowParams::fp_mode)
      .def_readwrite("margin", &WindowParams::margin)
      .def_readwrite("convention", &WindowParams::convention);

  py::class_<CandidateWindow>(m, "CandidateWindow")
      .def_readonly("k", &CandidateWindow::k)
      .def_readonly("l", &CandidateWindow::l)
      .def_readonly("quotient", &CandidateWindow::quotient);

  py::class_<CompensationOutcome>(m, "CompensationOutcome")
      .def_readonly("j", &CompensationOutcome::j)
      .def_readonly("candidate_lo", &CompensationOutcome::candidate_lo)
      .def_readonly("candidate_count", &CompensationOutcome::candidate_count)
      .def_readonly("walk_steps", &CompensationOutcome::walk_steps)
      .def_readonly("case_used", &CompensationOutcome::case_used);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("d", &ExperimentConfig::d)
      .def_readwrite("sample_count", &ExperimentConfig::sample_count)
      .def_readwrite("skew_ppm", &ExperimentConfig::skew_ppm)
      .def_readwrite("epsilon", &ExperimentConfig::epsilon)
      .def_readwrite("clocks", &ExperimentConfig::clocks)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("rounding", &ExperimentConfig::rounding)
      .def_readwrite("convention", &ExperimentConfig::convention)
      .def_readwrite("fp_window_mode", &ExperimentConfig::fp_window_mode)
      .def_readwrite("margin", &ExperimentConfig::margin)
      .def_readwrite("baseline_order", &ExperimentConfig::baseline_order)
      .def_readwrite("policy", &ExperimentConfig::policy)
      .def_readwrite("threads", &ExperimentConfig::threads);

  py::class_<ErrorStats>(m, "ErrorStats")
      .def_readonly("max", &ErrorStats::max)
      .def_readonly("min", &ErrorStats::min)
      .def_readonly("avg", &ErrorStats::avg)
      .def_readonly("count", &ErrorStats::count);

  py::class_<ResultRow>(m, "ResultRow")
      .def_readonly("algorithm", &ResultRow::algorithm)
      .def_readonly("clock", &ResultRow::clock)
      .def_readonly("stats", &ResultRow::stats);

  py::class_<ResultTable>(m, "ResultTable")
      .def_readonly("rows", &ResultTable::rows);

  m.def("reference_walk", &reference_walk, py::arg("slope"), py::arg("x_max"));
  m.def("candidate_window", &candidate_window, py::arg("i"), py::arg("ratio"),
        py::arg("params") = WindowParams{});
  m.def("compensate_case1", &compensate_case1, py::arg("i"), py::arg("ratio"),
        py::arg("params") = WindowParams{});
  m.def("compensate", &compensate, py::arg("i"), py::arg("ratio"),
        py::arg("params") = WindowParams{});
  m.def("exact_quotient", &exact_quotient, py::arg("i"), py::arg("d"),
        py::arg("a"), py::arg("rounding"));
  m.def("fp_quotient", &fp_quotient, py::arg("i"), py::arg("d"), py::arg("a"),
        py::arg("format"), py::arg("order") = QuotientOrder::MulLast);
  m.def("float_compensate", &float_compensate, py::arg("i"), py::arg("d"),
        py::arg("a"), py::arg("format"), py::arg("rounding"),
        py::arg("order") = QuotientOrder::MulLast);
  m.def("generate_samples", &generate_samples, py::arg("config"));
  m.def("run_table", &run_table, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("emit_csv", &emit_csv, py::arg("table"));
  m.def("emit_markdown", &emit_markdown, py::arg("table"));
}
