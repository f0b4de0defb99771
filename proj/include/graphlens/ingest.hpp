#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphlens/graph.hpp"
#include "graphlens/value.hpp"

namespace graphlens {

/// Typed value encoding used by JSONL files and spec documents:
/// {"t": "<tag>", "v": <value>}. Long values travel as decimal strings so
/// generic JSON tooling cannot truncate them; LongArray elements likewise.
/// Dates are ISO-8601 strings. decode_value also accepts JSON integers
/// for Long, which parse exactly.
nlohmann::json encode_value(const PropertyValue& value);
PropertyValue decode_value(const nlohmann::json& encoded);

/// Loads a graph from typed JSONL. Dense ids follow line order; external
/// "id" strings resolve relationship endpoints only. Errors name the file
/// and line.
Graph load_jsonl(const std::filesystem::path& nodes_path,
                 const std::optional<std::filesystem::path>& rels_path = {});

/// Writes a graph back out in the same encoding (ordinals become the
/// external ids).
void write_jsonl(const Graph& graph, const std::filesystem::path& nodes_path,
                 const std::optional<std::filesystem::path>& rels_path = {});

/// Loads a graph from headered CSV. Node files need an `:ID` column and
/// may carry `:LABEL` (semicolon-joined); relationship files need
/// `:START_ID`, `:END_ID`, `:TYPE`. Property columns are `name:tag`.
/// Empty cell = property absent. Array cells join elements with ';'.
Graph load_csv(const std::vector<std::filesystem::path>& node_files,
               const std::vector<std::filesystem::path>& rel_files);

/// One property of a synthetic element schema. A generated value follows
/// `tag`; a fault injection emits `alternate_tag` instead.
struct PropertySchema {
  std::string name;
  ValueTag tag = ValueTag::kString;
  ValueTag alternate_tag = ValueTag::kLong;
  double presence = 1.0;  // probability the property is present

  bool operator==(const PropertySchema&) const = default;
};

/// A node label or relationship type plus its property schemas.
struct ElementSchema {
  std::string group;
  std::vector<PropertySchema> properties;

  bool operator==(const ElementSchema&) const = default;
};

/// Recipe for a seeded synthetic graph with controlled type-fault
/// injection. Same spec + same seed → byte-identical graph and ledger.
struct SyntheticSpec {
  std::uint64_t node_count = 0;
  std::uint64_t rel_count = 0;
  std::vector<ElementSchema> label_schemas;
  std::vector<ElementSchema> rel_schemas;
  double flip_rate = 0.0;  // probability a value is emitted with the wrong tag
  std::uint64_t seed = 0;

  /// Throws Error on out-of-range probabilities, alternate == schema tag,
  /// relationships without nodes or schemas, or empty names.
  void validate() const;

  /// Field-for-field JSON mirror; label_schemas entries use "label",
  /// rel_schemas entries use "type". "alternate_tag" defaults to Long
  /// (String when the schema tag is already Long); "presence" defaults
  /// to 1.0.
  static SyntheticSpec from_json(const nlohmann::json& doc);
};

enum class ElementKind : std::uint8_t { kNode, kRelationship };

/// One injected type fault: where it happened and which tag was emitted
/// in place of the schema tag.
struct FaultRecord {
  ElementKind kind = ElementKind::kNode;
  std::uint64_t element_id = 0;
  std::string group;
  std::string property;
  ValueTag schema_tag = ValueTag::kString;
  ValueTag emitted_tag = ValueTag::kLong;

  bool operator==(const FaultRecord&) const = default;
};

using FaultLedger = std::vector<FaultRecord>;

struct SyntheticResult {
  Graph graph;
  FaultLedger ledger;
};

/// Deterministic in spec.seed. The ledger is the exact multiset of
/// injections performed, in generation order.
SyntheticResult generate_synthetic(const SyntheticSpec& spec);

}  // namespace graphlens
