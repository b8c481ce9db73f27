// Python bindings. Queues, intervals, formulas and rationals cross the boundary
// in their text forms; traces are opaque handles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mitlq/engine.hpp"
#include "mitlq/error.hpp"
#include "mitlq/oracle.hpp"
#include "mitlq/render.hpp"

namespace py = pybind11;
using namespace mitlq;

namespace {

std::optional<Rational> opt_rational(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return parse_rational(*s);
}

std::string q(const IntervalQueue& x) { return x.to_string(); }

py::dict approximation_dict(const Approximation& a) {
  py::dict d;
  d["under"] = q(a.under);
  d["over"] = q(a.over);
  return d;
}

ExactTrace require_exact(const Trace& t) {
  auto e = as_exact(t);
  if (!e) throw Error("trace is not exact: under and over differ for some proposition");
  return *e;
}

}  // namespace

PYBIND11_MODULE(_mitlq, m) {
  m.doc() = "MITL verification over interval-queue approximations";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<TraceError>(m, "TraceError", error.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", error.ptr());
  py::register_exception<OracleError>(m, "OracleError", error.ptr());

  // Formulas.
  m.def("parse_formula", [](const std::string& s) { return parse_formula(s).to_string(); },
        "Canonical text of a parsed formula.");
  m.def("desugar", [](const std::string& s) { return desugar(parse_formula(s)).to_string(); });
  m.def("atoms", [](const std::string& s) { return atoms(parse_formula(s)); });

  // Queues.
  m.def("construct", [](const std::vector<std::string>& items) {
    std::vector<Interval> parsed;
    for (const auto& s : items) parsed.push_back(parse_interval(s));
    return q(IntervalQueue::construct(parsed));
  });
  m.def("normalize", [](const std::string& a) { return q(parse_queue(a)); });
  m.def("complement", [](const std::string& a) { return q(complement(parse_queue(a))); });
  m.def("conjoin", [](const std::string& a, const std::string& b) {
    return q(conjoin(parse_queue(a), parse_queue(b)));
  });
  m.def("difference", [](const std::string& a, const std::string& b) {
    return q(difference(parse_queue(a), parse_queue(b)));
  });
  m.def("until_op", [](const std::string& a, const std::string& b, const std::string& timing) {
    return q(until_op(parse_queue(a), parse_queue(b), parse_interval(timing)));
  });
  m.def("measure", [](const std::string& a) { return parse_queue(a).measure().to_string(); });
  m.def("contains", [](const std::string& a, const std::string& t) { return parse_queue(a).contains(parse_rational(t)); });

  // Traces.
  py::class_<Trace>(m, "Trace")
      .def_property_readonly("horizon",
                             [](const Trace& t) -> std::optional<std::string> {
                               if (!t.horizon) return std::nullopt;
                               return format_rational(*t.horizon);
                             })
      .def_property_readonly("propositions",
                             [](const Trace& t) {
                               py::dict d;
                               for (const auto& [name, a] : t.propositions) d[py::str(name)] = approximation_dict(a);
                               return d;
                             })
      .def("to_json", [](const Trace& t) { return save_trace(t); })
      .def("apply_horizon", [](const Trace& t, const std::string& b) { return apply_horizon(t, parse_rational(b)); })
      .def("__eq__", [](const Trace& a, const Trace& b) { return a == b; });
  m.def("load_trace", [](const std::string& path) { return load_trace_file(path); });
  m.def("loads_trace", [](const std::string& json) { return load_trace_string(json); });

  // Evaluation.
  m.def("evaluate", [](const std::string& f, const Trace& t) { return approximation_dict(evaluate(parse_formula(f), t).root().approximation); });
  m.def("verdict", [](const std::string& f, const Trace& t, const std::string& time) {
    return std::string(to_string(verdict(parse_formula(f), t, parse_rational(time))));
  });
  m.def("report_json", [](const std::string& f, const Trace& t) { return report_to_json(report(parse_formula(f), t)); });
  m.def("render_svg",
        [](const std::string& f, const Trace& t, std::optional<std::string> window) {
          return render_svg(report(parse_formula(f), t), opt_rational(window));
        },
        py::arg("formula"), py::arg("trace"), py::arg("window") = py::none());

  // Reference oracle for exact traces.
  m.def("oracle_truth_set",
        [](const Trace& t, const std::string& f, std::optional<std::string> horizon) {
          return q(oracle_truth_set(require_exact(t), parse_formula(f), opt_rational(horizon)));
        },
        py::arg("trace"), py::arg("formula"), py::arg("horizon") = py::none());
  m.def("oracle_holds",
        [](const Trace& t, const std::string& f, const std::string& time, std::optional<std::string> horizon) {
          return oracle_holds(require_exact(t), parse_formula(f), parse_rational(time), opt_rational(horizon));
        },
        py::arg("trace"), py::arg("formula"), py::arg("time"), py::arg("horizon") = py::none());
}
