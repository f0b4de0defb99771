#include "graphlens/bench.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "graphlens/error.hpp"
#include "graphlens/inspector.hpp"

namespace graphlens {

namespace {

const char* kind_name(BenchKind kind) {
  return kind == BenchKind::kNodes ? "nodes" : "relationships";
}

BenchKind kind_from_name(const std::string& name) {
  if (name == "nodes") return BenchKind::kNodes;
  if (name == "relationships") return BenchKind::kRelationships;
  throw Error("unknown benchmark kind \"" + name + "\"");
}

std::uint64_t timed_ms(const std::chrono::steady_clock::time_point& start,
                       const std::chrono::steady_clock::time_point& stop) {
  const auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
          .count();
  // Round up so any completed run records a positive duration.
  return static_cast<std::uint64_t>((micros + 999) / 1000);
}

template <class T>
T parse_field(const std::string& text, const char* what) {
  T out{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(std::string("benchmark CSV: cannot parse ") + what + " \"" +
                text + "\"");
  return out;
}

}  // namespace

std::vector<BenchMean> BenchResult::means() const {
  std::vector<BenchMean> out;
  std::vector<std::uint32_t> counts;
  for (const BenchRow& row : rows) {
    std::size_t i = 0;
    for (; i < out.size(); ++i) {
      if (out[i].kind == row.kind && out[i].parallel == row.parallel &&
          out[i].concurrency == row.concurrency)
        break;
    }
    if (i == out.size()) {
      out.push_back(BenchMean{row.kind, row.parallel, row.concurrency, 0.0});
      counts.push_back(0);
    }
    out[i].mean_ms += static_cast<double>(row.elapsed_ms);
    ++counts[i];
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].mean_ms /= counts[i];
  return out;
}

BenchResult run_benchmark(const Graph& graph, BenchKind kind,
                          const std::vector<std::uint32_t>& concurrencies,
                          std::uint32_t repetitions) {
  if (repetitions < 1) throw Error("repetitions must be >= 1");
  if (!graph.frozen()) throw Error("graph must be frozen before benchmarking");

  auto inspect = [&](const InspectConfig& config) {
    return kind == BenchKind::kNodes ? inspect_nodes(graph, config)
                                     : inspect_relationships(graph, config);
  };

  // Untimed warm-up; its report is the reference for every timed run.
  const TypeReport reference = inspect(InspectConfig{});

  struct Setting {
    bool parallel;
    std::uint32_t concurrency;
  };
  std::vector<Setting> settings;
  settings.push_back(Setting{false, 1});
  for (std::uint32_t c : concurrencies) settings.push_back(Setting{true, c});

  BenchResult result;
  for (const Setting& setting : settings) {
    InspectConfig config;
    config.parallel = setting.parallel;
    config.concurrency = setting.concurrency;
    config.validate();
    for (std::uint32_t trial = 1; trial <= repetitions; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      const TypeReport report = inspect(config);
      const auto stop = std::chrono::steady_clock::now();
      if (report != reference)
        throw Error(std::string("benchmark report mismatch (kind=") +
                    kind_name(kind) + ", mode=" +
                    (setting.parallel ? "parallel" : "serial") +
                    ", concurrency=" + std::to_string(setting.concurrency) +
                    ", trial=" + std::to_string(trial) +
                    "): inspection is nondeterministic");
      result.rows.push_back(BenchRow{kind, setting.parallel,
                                     setting.concurrency, trial,
                                     timed_ms(start, stop)});
    }
  }
  return result;
}

void write_csv(const BenchResult& result, std::ostream& out) {
  out << "kind,mode,concurrency,trial,elapsed_ms\n";
  for (const BenchRow& row : result.rows) {
    out << kind_name(row.kind) << ','
        << (row.parallel ? "parallel" : "serial") << ',' << row.concurrency
        << ',' << row.trial << ',' << row.elapsed_ms << '\n';
  }
  for (const BenchMean& mean : result.means()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", mean.mean_ms);
    out << kind_name(mean.kind) << ','
        << (mean.parallel ? "parallel" : "serial") << ',' << mean.concurrency
        << ",mean," << buf << '\n';
  }
}

void write_csv(const BenchResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_csv(result, out);
  if (!out) throw Error("failed writing " + path.string());
}

BenchResult parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "kind,mode,concurrency,trial,elapsed_ms")
    throw Error("benchmark CSV: missing or unexpected header");
  BenchResult result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 5)
      throw Error("benchmark CSV: expected 5 fields, got line \"" + line + "\"");
    if (fields[3] == "mean") continue;
    BenchRow parsed;
    parsed.kind = kind_from_name(fields[0]);
    if (fields[1] == "serial") {
      parsed.parallel = false;
    } else if (fields[1] == "parallel") {
      parsed.parallel = true;
    } else {
      throw Error("benchmark CSV: unknown mode \"" + fields[1] + "\"");
    }
    parsed.concurrency = parse_field<std::uint32_t>(fields[2], "concurrency");
    parsed.trial = parse_field<std::uint32_t>(fields[3], "trial");
    parsed.elapsed_ms = parse_field<std::uint64_t>(fields[4], "elapsed_ms");
    result.rows.push_back(parsed);
  }
  return result;
}

}  // namespace graphlens
