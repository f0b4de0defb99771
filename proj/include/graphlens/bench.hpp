#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "graphlens/graph.hpp"

namespace graphlens {

enum class BenchKind : std::uint8_t { kNodes, kRelationships };

/// One timed inspection run.
struct BenchRow {
  BenchKind kind = BenchKind::kNodes;
  bool parallel = false;
  std::uint32_t concurrency = 1;  // 1 for serial rows
  std::uint32_t trial = 1;        // 1-based
  std::uint64_t elapsed_ms = 0;   // wall clock, rounded up

  bool operator==(const BenchRow&) const = default;
};

/// Per-configuration mean over trials, derived from the rows.
struct BenchMean {
  BenchKind kind = BenchKind::kNodes;
  bool parallel = false;
  std::uint32_t concurrency = 1;
  double mean_ms = 0.0;

  bool operator==(const BenchMean&) const = default;
};

struct BenchResult {
  std::vector<BenchRow> rows;

  /// Means grouped by (kind, mode, concurrency) in first-appearance order.
  std::vector<BenchMean> means() const;
};

/// Times full inspection: serial baseline first, then parallel at each
/// requested concurrency, `repetitions` runs each. One untimed warm-up
/// inspection runs first; its report is the reference every timed run is
/// compared against, and any mismatch aborts with an Error (the benchmark
/// doubles as a determinism stress test). Requires a frozen graph.
BenchResult run_benchmark(const Graph& graph, BenchKind kind,
                          const std::vector<std::uint32_t>& concurrencies,
                          std::uint32_t repetitions = 3);

/// Header `kind,mode,concurrency,trial,elapsed_ms`, one row per run, then
/// one row per configuration with trial = "mean".
void write_csv(const BenchResult& result, std::ostream& out);
void write_csv(const BenchResult& result, const std::filesystem::path& path);

/// Reads back the data rows (mean rows are derived and skipped).
BenchResult parse_csv(std::istream& in);

}  // namespace graphlens
