#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphlens/graph.hpp"
#include "graphlens/report.hpp"

namespace graphlens {

/// The five scan parameters. Defaults mirror the procedure defaults:
/// serial, 50 workers when parallel, no limit, automatic batch size,
/// no progress output.
struct InspectConfig {
  bool parallel = false;
  std::uint32_t concurrency = 50;  // workers when parallel; ignored otherwise
  std::uint64_t limit = 0;         // 0 = inspect everything
  std::uint64_t batch_size = 0;    // 0 = automatic
  bool debug = false;              // one progress line per completed batch

  /// Throws Error if concurrency < 1.
  void validate() const;
};

struct IdRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;  // half-open

  std::uint64_t size() const { return end - begin; }
  bool operator==(const IdRange&) const = default;
};

/// Disjoint ascending intervals covering exactly [0, inspected).
struct BatchPlan {
  std::uint64_t inspected = 0;   // min(total, limit) with limit 0 = total
  std::uint64_t batch_size = 0;  // effective size; only the last batch may be shorter
  std::vector<IdRange> batches;
};

/// Splits the inspected id prefix into batches. Effective batch size is
/// config.batch_size when positive, otherwise
/// clamp(ceil(inspected / (workers * 10)), 1, 100000) with workers =
/// concurrency when parallel, else 1.
BatchPlan plan_batches(std::uint64_t total, const InspectConfig& config);

/// Counts every property on every inspected node, once per label the node
/// carries (unlabeled nodes count under "_NO_LABEL"). The result is
/// independent of parallel, concurrency, and batch_size. Requires a
/// frozen graph. Debug lines go to *debug_out (std::cerr when null).
TypeReport inspect_nodes(const Graph& graph, const InspectConfig& config = {},
                         std::ostream* debug_out = nullptr);

/// Same, grouped by the relationship's single type.
TypeReport inspect_relationships(const Graph& graph,
                                 const InspectConfig& config = {},
                                 std::ostream* debug_out = nullptr);

/// Pointwise sum of partial reports. Associative and commutative; the
/// empty report is the identity.
TypeReport merge_partials(std::span<const TypeReport> partials);

}  // namespace graphlens
