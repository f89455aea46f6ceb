#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eventify/eventify.hpp"

namespace py = pybind11;
using namespace eventify;

namespace {

using Transitions = std::vector<std::tuple<std::string, std::string, SymbolSet>>;

Device build_device(const std::map<std::string, SymbolSet>& outputs, const std::set<std::string>& initial,
                    const Transitions& transitions) {
  DeviceBuilder builder;
  for (const auto& [state, produced] : outputs) builder.add_state(state, produced);
  for (const auto& state : initial) builder.add_initial(state);
  for (const auto& [from, to, labels] : transitions) builder.add_edge(from, to, labels);
  return builder.build();
}

Transitions transitions_of(const Device& device) {
  Transitions out;
  for (const auto& edge : device.edges()) out.emplace_back(device.name(edge.from), device.name(edge.to), edge.labels);
  return out;
}

std::set<std::string> initial_names(const Device& device) {
  std::set<std::string> out;
  for (StateId state : device.initials()) out.insert(device.name(state));
  return out;
}

const SymbolSet& output_of(const Device& device, const std::string& state) {
  auto id = device.find(state);
  if (!id) throw py::key_error(state);
  return device.output(*id);
}

RelationSpec relation_from_text(const std::string& text) {
  return parse_relation(text, [](const std::string& path) { return read_text_file(path); });
}

Graph graph_from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::set<std::string>& isolated) {
  Graph graph;
  for (const auto& [a, b] : edges) graph.add_edge(a, b);
  graph.vertices.insert(isolated.begin(), isolated.end());
  return graph;
}

}  // namespace

PYBIND11_MODULE(_eventify, m) {
  m.doc() = "Sensor devices, derivative transforms and output-simulation checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidModel>(m, "InvalidModel", PyExc_ValueError);

  py::class_<Device>(m, "Device")
      .def(py::init(&build_device), py::arg("outputs"), py::arg("initial"), py::arg("transitions"))
      .def_static("from_json", [](const std::string& text) { return parse_device(text); })
      .def("to_json", &serialize_device)
      .def("to_dot", &export_dot)
      .def_property_readonly("states", &Device::names)
      .def_property_readonly("initial", &initial_names)
      .def_property_readonly("observations", &Device::observations)
      .def_property_readonly("output_alphabet", &Device::output_alphabet)
      .def_property_readonly("transitions", &transitions_of)
      .def("output", &output_of, py::arg("state"))
      .def("trace",
           [](const Device& d, const Word& word) {
             std::set<std::string> out;
             for (StateId s : trace(d, word)) out.insert(d.name(s));
             return out;
           },
           py::arg("word"))
      .def("accepts", &language_contains, py::arg("word"))
      .def("outputs_of", &outputs_of, py::arg("word"))
      .def("language", &enumerate_language, py::arg("max_length"))
      .def("is_deterministic", &is_deterministic)
      .def("__len__", &Device::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Device& d) { return "<Device with " + std::to_string(d.size()) + " states>"; });

  py::class_<Variator>(m, "Variator")
      .def(py::init([](const std::set<std::tuple<Symbol, Symbol, Symbol>>& triples) {
             Variator v;
             for (const auto& [before, difference, after] : triples) {
               v.differences.insert(difference);
               v.triples.emplace(before, difference, after);
             }
             return v;
           }),
           py::arg("triples"))
      .def_static("from_json", [](const std::string& text) { return parse_variator(text).variator; })
      .def("to_json", [](const Variator& v) { return serialize_variator(v); })
      .def_readonly("differences", &Variator::differences)
      .def_readonly("triples", &Variator::triples)
      .def("differences_between", &Variator::differences_between, py::arg("before"), py::arg("after"))
      .def("is_functional", &is_functional)
      .def("is_pairwise_unique", &is_pairwise_unique, py::arg("observations"))
      .def(py::self == py::self);

  py::class_<MonoidVariator>(m, "Monoid")
      .def_static("from_json", &load_monoid)
      .def("to_json", &serialize_monoid)
      .def_readonly("elements", &MonoidVariator::elements)
      .def_readonly("identity", &MonoidVariator::identity)
      .def_readonly("observations", &MonoidVariator::observations)
      .def("combine", &MonoidVariator::combine, py::arg("left"), py::arg("right"))
      .def("act", &MonoidVariator::act, py::arg("observation"), py::arg("difference"))
      .def("total", &MonoidVariator::total, py::arg("differences"))
      .def("variator", [](const MonoidVariator& monoid) { return variator_from_monoid(monoid, monoid.observations); });

  py::class_<TransformResult>(m, "TransformResult")
      .def_property_readonly("ok", &TransformResult::ok)
      .def("__bool__", &TransformResult::ok)
      .def_property_readonly("device", [](const TransformResult& r) -> py::object {
        return r.ok() ? py::cast(r.device()) : py::none();
      })
      .def_property_readonly("provenance", &TransformResult::provenance)
      .def_property_readonly("reason", [](const TransformResult& r) -> py::object {
        return r.ok() ? py::none() : py::cast(to_string(r.failure().reason));
      })
      .def_property_readonly("message", [](const TransformResult& r) { return r.ok() ? "" : r.failure().message; })
      .def_property_readonly("witness", [](const TransformResult& r) { return r.ok() ? Word{} : r.failure().witness; })
      .def_property_readonly("uncovered_pair", [](const TransformResult& r) -> py::object {
        if (r.ok() || !r.failure().uncovered_pair) return py::none();
        return py::cast(*r.failure().uncovered_pair);
      })
      .def_property_readonly("conflict", [](const TransformResult& r) {
        std::map<std::string, SymbolSet> out;
        if (r.ok()) return out;
        const auto& failure = r.failure();
        for (std::size_t i = 0; i < failure.conflict_states.size(); ++i) {
          out[failure.conflict_states[i]] = failure.conflict_outputs[i];
        }
        return out;
      });

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("status", [](const Verdict& v) { return to_string(v.status()); })
      .def_property_readonly("passed", &Verdict::passed)
      .def("__bool__", &Verdict::passed)
      .def_property_readonly("bound", &Verdict::bound)
      .def_property_readonly("reason", [](const Verdict& v) -> py::object {
        return v.witness() ? py::cast(to_string(v.witness()->reason)) : py::none();
      })
      .def_property_readonly("source", [](const Verdict& v) -> py::object {
        return v.witness() ? py::cast(v.witness()->source) : py::none();
      })
      .def_property_readonly("image", [](const Verdict& v) -> py::object {
        return v.witness() ? py::cast(v.witness()->image) : py::none();
      })
      .def("__str__", &describe)
      .def("__repr__", [](const Verdict& v) { return "<Verdict " + describe(v) + ">"; });

  m.def("delta_transform", &delta_transform, py::arg("device"), py::arg("variator"));
  m.def("shave_delta_transform", &shave_delta_transform, py::arg("device"), py::arg("variator"));
  m.def("shrink_transform", &shrink_transform, py::arg("device"), py::arg("neutral"));
  m.def("pump_transform", &pump_transform, py::arg("device"), py::arg("neutral"));
  m.def("monoid_integrator", &monoid_integrator, py::arg("device"), py::arg("monoid"));
  m.def("disaggregator", &disaggregator, py::arg("integrator"), py::arg("monoid"));
  m.def("eventify", &eventify_pipeline, py::arg("device"), py::arg("monoid"));
  m.def("direct_product", &direct_product, py::arg("first"), py::arg("second"));
  m.def("singleton_restrict", [](const Device& d) { return singleton_restrict(d); }, py::arg("device"));

  m.def(
      "check_output_simulation",
      [](const Device& candidate, const Device& reference, const std::string& relation, std::size_t max_length) {
        return check_output_simulation(candidate, reference, relation_from_text(relation), max_length);
      },
      py::arg("candidate"), py::arg("reference"), py::arg("relation"), py::arg("max_length") = 6);
  m.def("check_vertex_stable", &check_vertex_stable, py::arg("device"), py::arg("neutral"));
  m.def("check_output_stable", &check_output_stable, py::arg("device"), py::arg("neutral"));

  m.def("minimize_variator", &minimize_variator, py::arg("device"), py::arg("differences"));
  m.def("exact_min_cardinality", &exact_min_cardinality, py::arg("device"), py::arg("cap"));
  m.def(
      "reduce_3coloring",
      [](const std::vector<std::pair<std::string, std::string>>& edges, const std::set<std::string>& isolated) {
        return reduce_3coloring(graph_from_edges(edges, isolated));
      },
      py::arg("edges"), py::arg("isolated") = std::set<std::string>{});
  m.def(
      "is_3colorable",
      [](const std::vector<std::pair<std::string, std::string>>& edges, const std::set<std::string>& isolated) {
        return graph_3colorable_bruteforce(graph_from_edges(edges, isolated));
      },
      py::arg("edges"), py::arg("isolated") = std::set<std::string>{});
}
