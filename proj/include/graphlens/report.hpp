#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphlens/value.hpp"

namespace graphlens {

/// Group key used for nodes that carry no label.
inline constexpr std::string_view kNoLabelGroup = "_NO_LABEL";

/// Nested count map: group key (label or relationship type) → property
/// name → type name → occurrence count. Counts are always positive;
/// absent means zero. Type keys come from the closed ten-name vocabulary
/// by construction.
class TypeReport {
 public:
  using TypeCounts = std::map<std::string, std::uint64_t>;
  using PropertyProfile = std::map<std::string, TypeCounts>;
  using GroupMap = std::map<std::string, PropertyProfile>;

  /// Adds n observations of `type` for (group, property). n = 0 is a no-op.
  void add(std::string_view group, std::string_view property, ValueTag type,
           std::uint64_t n = 1);

  /// Pointwise count sum.
  void merge(const TypeReport& other);

  bool empty() const { return groups_.empty(); }
  const GroupMap& groups() const { return groups_; }

  bool operator==(const TypeReport&) const = default;

 private:
  GroupMap groups_;
};

/// A (group, property) observed with two or more distinct value types.
struct Inconsistency {
  std::string group;
  std::string property;
  TypeReport::TypeCounts type_counts;  // ≥ 2 entries
  std::string majority_type;           // largest count; ties → lexicographic
  std::uint64_t minority_total = 0;    // sum of non-majority counts, ≥ 1

  bool operator==(const Inconsistency&) const = default;
};

/// One entry per (group, property) with ≥ 2 observed types, sorted by
/// (group, property). Empty result means full type consistency.
std::vector<Inconsistency> find_inconsistencies(const TypeReport& report);

/// Canonical serialization: nested objects, 2-space indent, keys sorted
/// ascending by code point at every level, counts as unquoted integers,
/// trailing newline. Bit-identical across runs and platforms.
std::string to_json(const TypeReport& report);

/// Inverse of to_json (accepts any JSON whitespace). Rejects unknown type
/// names, non-positive counts, and empty group/property objects.
TypeReport report_from_json(std::string_view text);

struct ReportSummary {
  std::uint64_t groups = 0;
  std::uint64_t properties = 0;          // (group, property) pairs
  std::uint64_t instances = 0;           // sum of all leaf counts
  std::uint64_t inconsistent_pairs = 0;  // |find_inconsistencies|

  bool operator==(const ReportSummary&) const = default;
};

ReportSummary summarize(const TypeReport& report);

}  // namespace graphlens
