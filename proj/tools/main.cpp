#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphlens/bench.hpp"
#include "graphlens/error.hpp"
#include "graphlens/ingest.hpp"
#include "graphlens/inspector.hpp"
#include "graphlens/report.hpp"

namespace {

using namespace graphlens;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconsistent = 2;

struct InputFlags {
  std::string nodes;
  std::string rels;
  std::vector<std::string> csv_nodes;
  std::vector<std::string> csv_rels;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--nodes", in.nodes, "Nodes JSONL file");
  cmd->add_option("--rels", in.rels, "Relationships JSONL file");
  cmd->add_option("--csv-nodes", in.csv_nodes, "Node CSV file(s)");
  cmd->add_option("--csv-rels", in.csv_rels, "Relationship CSV file(s)");
}

void add_config_flags(CLI::App* cmd, InspectConfig& config) {
  cmd->add_flag("--parallel", config.parallel, "Scan batches in parallel");
  cmd->add_option("--concurrency", config.concurrency,
                  "Worker threads when --parallel (default 50)");
  cmd->add_option("--limit", config.limit,
                  "Inspect only the first N elements (0 = all)");
  cmd->add_option("--batch-size", config.batch_size,
                  "Elements per batch (0 = automatic)");
  cmd->add_flag("--debug", config.debug,
                "Print one progress line per batch to stderr");
}

Graph load_graph(const InputFlags& in) {
  const bool jsonl = !in.nodes.empty();
  const bool csv = !in.csv_nodes.empty() || !in.csv_rels.empty();
  if (jsonl && csv)
    throw Error("use either --nodes/--rels or --csv-nodes/--csv-rels, not both");
  if (jsonl) {
    std::optional<std::filesystem::path> rels;
    if (!in.rels.empty()) rels = in.rels;
    return load_jsonl(in.nodes, rels);
  }
  if (!in.rels.empty())
    throw Error("--rels requires --nodes");
  if (!in.csv_nodes.empty()) {
    std::vector<std::filesystem::path> node_files(in.csv_nodes.begin(),
                                                  in.csv_nodes.end());
    std::vector<std::filesystem::path> rel_files(in.csv_rels.begin(),
                                                 in.csv_rels.end());
    return load_csv(node_files, rel_files);
  }
  throw Error("no input given: provide --nodes or --csv-nodes");
}

void write_output(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write " + output);
  out << text;
  if (!out) throw Error("failed writing " + output);
}

int run_inspect(bool relationships, const InputFlags& in,
                const InspectConfig& config, const std::string& output,
                bool fail_on_inconsistency) {
  Graph graph = load_graph(in);
  graph.freeze();
  const TypeReport report =
      relationships ? inspect_relationships(graph, config, &std::cerr)
                    : inspect_nodes(graph, config, &std::cerr);
  write_output(to_json(report), output);
  const ReportSummary summary = summarize(report);
  std::cerr << "groups=" << summary.groups
            << " properties=" << summary.properties
            << " instances=" << summary.instances
            << " inconsistent=" << summary.inconsistent_pairs << "\n";
  if (fail_on_inconsistency && summary.inconsistent_pairs > 0)
    return kExitInconsistent;
  return kExitOk;
}

int run_generate(const std::string& spec_path, std::optional<std::uint64_t> seed,
                 const std::string& out_nodes, const std::string& out_rels) {
  std::ifstream in(spec_path);
  if (!in) throw Error("cannot open " + spec_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(spec_path + ": invalid JSON: " + e.what());
  }
  SyntheticSpec spec = SyntheticSpec::from_json(doc);
  if (seed) spec.seed = *seed;
  if (spec.rel_count > 0 && out_rels.empty())
    throw Error("spec has rel_count > 0: --out-rels is required");

  SyntheticResult generated = generate_synthetic(spec);
  std::optional<std::filesystem::path> rels;
  if (!out_rels.empty()) rels = out_rels;
  write_jsonl(generated.graph, out_nodes, rels);
  std::cerr << "generated nodes=" << generated.graph.node_count()
            << " relationships=" << generated.graph.relationship_count()
            << " faults=" << generated.ledger.size() << " seed=" << spec.seed
            << "\n";
  return kExitOk;
}

int run_bench(const InputFlags& in, const std::vector<std::uint32_t>& concurrencies,
              std::uint32_t repetitions, const std::string& csv_path) {
  Graph graph = load_graph(in);
  graph.freeze();
  BenchResult combined = run_benchmark(graph, BenchKind::kNodes, concurrencies,
                                       repetitions);
  if (graph.relationship_count() > 0) {
    BenchResult rels = run_benchmark(graph, BenchKind::kRelationships,
                                     concurrencies, repetitions);
    combined.rows.insert(combined.rows.end(), rels.rows.begin(),
                         rels.rows.end());
  }
  if (csv_path.empty() || csv_path == "-") {
    write_csv(combined, std::cout);
    std::cout.flush();
  } else {
    write_csv(combined, std::filesystem::path(csv_path));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphlens: exhaustive property/type profiler for property graphs"};
  app.require_subcommand(1);

  InputFlags in;
  InspectConfig config;
  std::string output;
  bool fail_on_inconsistency = false;

  CLI::App* inspect_nodes_cmd = app.add_subcommand(
      "inspect-nodes", "Profile every property on every node");
  CLI::App* inspect_rels_cmd = app.add_subcommand(
      "inspect-rels", "Profile every property on every relationship");
  for (CLI::App* cmd : {inspect_nodes_cmd, inspect_rels_cmd}) {
    add_input_flags(cmd, in);
    add_config_flags(cmd, config);
    cmd->add_option("--output", output, "Report path (default: stdout)");
    cmd->add_flag("--fail-on-inconsistency", fail_on_inconsistency,
                  "Exit 2 when any property has more than one type");
  }

  std::string spec_path;
  std::uint64_t seed_value = 0;
  std::string out_nodes;
  std::string out_rels;
  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "Generate a seeded synthetic graph as JSONL");
  generate_cmd->add_option("--spec", spec_path, "Synthetic spec JSON file")
      ->required();
  CLI::Option* seed_opt =
      generate_cmd->add_option("--seed", seed_value, "Override the spec seed");
  generate_cmd->add_option("--out-nodes", out_nodes, "Nodes JSONL output")
      ->required();
  generate_cmd->add_option("--out-rels", out_rels, "Relationships JSONL output");

  std::vector<std::uint32_t> concurrencies{1, 2, 4, 8};
  std::uint32_t repetitions = 3;
  std::string csv_path;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time full inspection across concurrency levels");
  add_input_flags(bench_cmd, in);
  bench_cmd
      ->add_option("--concurrencies", concurrencies,
                   "Comma-separated parallel concurrency levels")
      ->delimiter(',');
  bench_cmd->add_option("--repetitions", repetitions, "Trials per configuration");
  bench_cmd->add_option("--csv", csv_path, "Results CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (inspect_nodes_cmd->parsed())
      return run_inspect(false, in, config, output, fail_on_inconsistency);
    if (inspect_rels_cmd->parsed())
      return run_inspect(true, in, config, output, fail_on_inconsistency);
    if (generate_cmd->parsed()) {
      std::optional<std::uint64_t> seed;
      if (seed_opt->count() > 0) seed = seed_value;
      return run_generate(spec_path, seed, out_nodes, out_rels);
    }
    if (bench_cmd->parsed())
      return run_bench(in, concurrencies, repetitions, csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
