#pragma once

// Test-side oracles: naive serial recounts that stay independent of the
// batching/parallel engine they check. The tag-name table is duplicated
// here on purpose so the report vocabulary is pinned from two sides.

#include <cstdint>
#include <map>
#include <string>

#include "graphlens/graph.hpp"
#include "graphlens/report.hpp"

namespace graphlens_testing {

using graphlens::Graph;
using graphlens::Node;
using graphlens::Relationship;
using graphlens::TypeReport;
using graphlens::ValueTag;

inline const char* oracle_tag_name(ValueTag tag) {
  switch (tag) {
    case ValueTag::kBoolean: return "Boolean";
    case ValueTag::kLong: return "Long";
    case ValueTag::kDouble: return "Double";
    case ValueTag::kString: return "String";
    case ValueTag::kLocalDate: return "LocalDate";
    case ValueTag::kLocalDateTime: return "LocalDateTime";
    case ValueTag::kBooleanArray: return "BooleanArray";
    case ValueTag::kLongArray: return "LongArray";
    case ValueTag::kDoubleArray: return "DoubleArray";
    case ValueTag::kStringArray: return "StringArray";
  }
  return "?";
}

// group -> property -> type name -> count
using OracleCounts =
    std::map<std::string,
             std::map<std::string, std::map<std::string, std::uint64_t>>>;

inline OracleCounts recount_nodes(const Graph& graph, std::uint64_t limit = 0) {
  OracleCounts counts;
  std::uint64_t n = graph.node_count();
  if (limit > 0 && limit < n) n = limit;
  for (std::uint64_t id = 0; id < n; ++id) {
    const Node& node = graph.node(id);
    if (node.labels.empty()) {
      for (const auto& [name, value] : node.properties)
        ++counts["_NO_LABEL"][name][oracle_tag_name(value.tag())];
    } else {
      for (const auto& label : node.labels)
        for (const auto& [name, value] : node.properties)
          ++counts[label][name][oracle_tag_name(value.tag())];
    }
  }
  return counts;
}

inline OracleCounts recount_relationships(const Graph& graph,
                                          std::uint64_t limit = 0) {
  OracleCounts counts;
  std::uint64_t n = graph.relationship_count();
  if (limit > 0 && limit < n) n = limit;
  for (std::uint64_t id = 0; id < n; ++id) {
    const Relationship& rel = graph.relationship(id);
    for (const auto& [name, value] : rel.properties)
      ++counts[rel.type][name][oracle_tag_name(value.tag())];
  }
  return counts;
}

// Engine report reshaped so it can be compared against an oracle count.
inline OracleCounts to_counts(const TypeReport& report) {
  OracleCounts out;
  for (const auto& [group, properties] : report.groups())
    for (const auto& [property, types] : properties)
      for (const auto& [type, count] : types) out[group][property][type] = count;
  return out;
}

}  // namespace graphlens_testing
