#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphlens/bench.hpp"
#include "graphlens/error.hpp"
#include "graphlens/ingest.hpp"
#include "graphlens/inspector.hpp"
#include "graphlens/report.hpp"

namespace py = pybind11;
using namespace graphlens;

namespace {

nlohmann::json to_json_value(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = to_json_value(item.second);
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& item : obj.cast<py::sequence>())
      out.push_back(to_json_value(item));
    return out;
  }
  throw Error("unsupported Python value in typed property encoding");
}

PropertyMap properties_from_dict(const py::dict& props) {
  PropertyMap out;
  out.reserve(props.size());
  for (const auto& item : props) {
    out.emplace_back(item.first.cast<std::string>(),
                     decode_value(to_json_value(item.second)));
  }
  return out;
}

InspectConfig make_config(bool parallel, std::uint32_t concurrency,
                          std::uint64_t limit, std::uint64_t batch_size,
                          bool debug) {
  InspectConfig config;
  config.parallel = parallel;
  config.concurrency = concurrency;
  config.limit = limit;
  config.batch_size = batch_size;
  config.debug = debug;
  return config;
}

py::list ledger_to_list(const FaultLedger& ledger) {
  py::list out;
  for (const FaultRecord& fault : ledger) {
    py::dict entry;
    entry["kind"] =
        fault.kind == ElementKind::kNode ? "node" : "relationship";
    entry["element_id"] = fault.element_id;
    entry["group"] = fault.group;
    entry["property"] = fault.property;
    entry["schema_tag"] = std::string(value_tag_name(fault.schema_tag));
    entry["emitted_tag"] = std::string(value_tag_name(fault.emitted_tag));
    out.append(std::move(entry));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_graphlens, m) {
  m.doc() = "Property-graph type profiling: exhaustive per-label "
            "property/type counts, inconsistency detection, synthetic "
            "graph generation, and scan benchmarking.";

  py::register_exception<Error>(m, "GraphlensError", PyExc_ValueError);

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def(py::init<>())
      .def(
          "add_node",
          [](Graph& graph, const std::vector<std::string>& labels,
             const py::dict& props) {
            return graph.add_node(labels, properties_from_dict(props));
          },
          py::arg("labels") = std::vector<std::string>{},
          py::arg("props") = py::dict(),
          "Append a node; props values use the typed encoding "
          "{'t': tag, 'v': value}.")
      .def(
          "add_relationship",
          [](Graph& graph, const std::string& type, NodeId start, NodeId end,
             const py::dict& props) {
            return graph.add_relationship(type, start, end,
                                          properties_from_dict(props));
          },
          py::arg("type"), py::arg("start"), py::arg("end"),
          py::arg("props") = py::dict())
      .def("freeze", &Graph::freeze)
      .def_property_readonly("frozen", &Graph::frozen)
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("relationship_count", &Graph::relationship_count);

  m.def(
      "load_jsonl",
      [](const std::string& nodes_path, const std::optional<std::string>& rels_path) {
        std::optional<std::filesystem::path> rels;
        if (rels_path) rels = *rels_path;
        return std::make_shared<Graph>(load_jsonl(nodes_path, rels));
      },
      py::arg("nodes_path"), py::arg("rels_path") = py::none());

  m.def(
      "write_jsonl",
      [](const Graph& graph, const std::string& nodes_path,
         const std::optional<std::string>& rels_path) {
        std::optional<std::filesystem::path> rels;
        if (rels_path) rels = *rels_path;
        write_jsonl(graph, nodes_path, rels);
      },
      py::arg("graph"), py::arg("nodes_path"), py::arg("rels_path") = py::none());

  m.def(
      "load_csv",
      [](const std::vector<std::string>& node_files,
         const std::vector<std::string>& rel_files) {
        std::vector<std::filesystem::path> nodes(node_files.begin(),
                                                 node_files.end());
        std::vector<std::filesystem::path> rels(rel_files.begin(),
                                                rel_files.end());
        return std::make_shared<Graph>(load_csv(nodes, rels));
      },
      py::arg("node_files"), py::arg("rel_files") = std::vector<std::string>{});

  m.def(
      "generate",
      [](const py::dict& spec_doc, std::optional<std::uint64_t> seed) {
        SyntheticSpec spec = SyntheticSpec::from_json(to_json_value(spec_doc));
        if (seed) spec.seed = *seed;
        SyntheticResult result = generate_synthetic(spec);
        return py::make_tuple(
            std::make_shared<Graph>(std::move(result.graph)),
            ledger_to_list(result.ledger));
      },
      py::arg("spec"), py::arg("seed") = py::none(),
      "Generate a seeded synthetic graph; returns (graph, fault_ledger).");

  m.def(
      "inspect_nodes_json",
      [](const Graph& graph, bool parallel, std::uint32_t concurrency,
         std::uint64_t limit, std::uint64_t batch_size, bool debug) {
        const InspectConfig config =
            make_config(parallel, concurrency, limit, batch_size, debug);
        py::gil_scoped_release release;
        return to_json(inspect_nodes(graph, config));
      },
      py::arg("graph"), py::arg("parallel") = false,
      py::arg("concurrency") = 50, py::arg("limit") = 0,
      py::arg("batch_size") = 0, py::arg("debug") = false,
      "Canonical JSON report of property/type counts per label.");

  m.def(
      "inspect_relationships_json",
      [](const Graph& graph, bool parallel, std::uint32_t concurrency,
         std::uint64_t limit, std::uint64_t batch_size, bool debug) {
        const InspectConfig config =
            make_config(parallel, concurrency, limit, batch_size, debug);
        py::gil_scoped_release release;
        return to_json(inspect_relationships(graph, config));
      },
      py::arg("graph"), py::arg("parallel") = false,
      py::arg("concurrency") = 50, py::arg("limit") = 0,
      py::arg("batch_size") = 0, py::arg("debug") = false);

  m.def("find_inconsistencies", [](const std::string& report_json) {
    const TypeReport report = report_from_json(report_json);
    py::list out;
    for (const Inconsistency& finding : find_inconsistencies(report)) {
      py::dict entry;
      entry["group"] = finding.group;
      entry["property"] = finding.property;
      py::dict counts;
      for (const auto& [type, count] : finding.type_counts)
        counts[py::str(type)] = count;
      entry["type_counts"] = std::move(counts);
      entry["majority_type"] = finding.majority_type;
      entry["minority_total"] = finding.minority_total;
      out.append(std::move(entry));
    }
    return out;
  });

  m.def("summarize", [](const std::string& report_json) {
    const ReportSummary summary = summarize(report_from_json(report_json));
    py::dict out;
    out["groups"] = summary.groups;
    out["properties"] = summary.properties;
    out["instances"] = summary.instances;
    out["inconsistent_pairs"] = summary.inconsistent_pairs;
    return out;
  });

  m.def(
      "run_benchmark_csv",
      [](const Graph& graph, const std::string& kind,
         const std::vector<std::uint32_t>& concurrencies,
         std::uint32_t repetitions) {
        BenchKind bench_kind;
        if (kind == "nodes") {
          bench_kind = BenchKind::kNodes;
        } else if (kind == "relationships") {
          bench_kind = BenchKind::kRelationships;
        } else {
          throw Error("kind must be 'nodes' or 'relationships'");
        }
        BenchResult result = [&] {
          py::gil_scoped_release release;
          return run_benchmark(graph, bench_kind, concurrencies, repetitions);
        }();
        std::ostringstream out;
        write_csv(result, out);
        return out.str();
      },
      py::arg("graph"), py::arg("kind") = "nodes",
      py::arg("concurrencies") = std::vector<std::uint32_t>{1, 2, 4, 8},
      py::arg("repetitions") = 3,
      "Benchmark CSV (kind,mode,concurrency,trial,elapsed_ms).");
}
