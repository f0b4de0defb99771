#include <random>
#include <string>

#include "graphlens/error.hpp"
#include "graphlens/ingest.hpp"

namespace graphlens {

namespace {

using nlohmann::json;

// All draws go through these helpers instead of std <random> distributions,
// whose output differs between standard library implementations; mt19937_64
// itself is pinned by the standard, so same seed → byte-identical graphs
// everywhere.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool draw_chance(std::mt19937_64& rng, double probability) {
  return draw_unit(rng) < probability;
}

PropertyValue draw_scalar(std::mt19937_64& rng, ValueTag tag);

template <class Element>
std::vector<Element> draw_array(std::mt19937_64& rng, ValueTag element_tag) {
  const std::uint64_t length = draw_below(rng, 4);
  std::vector<Element> out;
  out.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i)
    out.push_back(draw_scalar(rng, element_tag).as<Element>());
  return out;
}

PropertyValue draw_scalar(std::mt19937_64& rng, ValueTag tag) {
  switch (tag) {
    case ValueTag::kBoolean:
      return PropertyValue(draw_below(rng, 2) == 1);
    case ValueTag::kLong:
      return PropertyValue(
          static_cast<std::int64_t>(draw_below(rng, 1'000'000'000)));
    case ValueTag::kDouble:
      return PropertyValue(draw_unit(rng) * 1.0e6);
    case ValueTag::kString:
      return PropertyValue("s" + std::to_string(draw_below(rng, 1'000'000'000)));
    case ValueTag::kLocalDate:
      return PropertyValue(LocalDate::of(
          2000 + static_cast<std::int32_t>(draw_below(rng, 30)),
          1 + static_cast<unsigned>(draw_below(rng, 12)),
          1 + static_cast<unsigned>(draw_below(rng, 28))));
    case ValueTag::kLocalDateTime: {
      LocalDate date = LocalDate::of(
          2000 + static_cast<std::int32_t>(draw_below(rng, 30)),
          1 + static_cast<unsigned>(draw_below(rng, 12)),
          1 + static_cast<unsigned>(draw_below(rng, 28)));
      return PropertyValue(LocalDateTime::of(
          date, static_cast<unsigned>(draw_below(rng, 24)),
          static_cast<unsigned>(draw_below(rng, 60)),
          static_cast<unsigned>(draw_below(rng, 60))));
    }
    case ValueTag::kBooleanArray:
      return PropertyValue(draw_array<bool>(rng, ValueTag::kBoolean));
    case ValueTag::kLongArray:
      return PropertyValue(draw_array<std::int64_t>(rng, ValueTag::kLong));
    case ValueTag::kDoubleArray:
      return PropertyValue(draw_array<double>(rng, ValueTag::kDouble));
    case ValueTag::kStringArray:
      return PropertyValue(draw_array<std::string>(rng, ValueTag::kString));
  }
  throw Error("unreachable: bad tag");
}

void validate_schema(const ElementSchema& schema, const char* what) {
  if (schema.group.empty())
    throw Error(std::string(what) + " schema group name must be non-empty");
  for (const PropertySchema& property : schema.properties) {
    if (property.name.empty())
      throw Error("schema \"" + schema.group + "\": property name must be non-empty");
    if (property.presence < 0.0 || property.presence > 1.0)
      throw Error("schema \"" + schema.group + "\" property \"" + property.name +
                  "\": presence must be in [0, 1]");
    if (property.alternate_tag == property.tag)
      throw Error("schema \"" + schema.group + "\" property \"" + property.name +
                  "\": alternate_tag must differ from tag");
  }
}

ValueTag tag_field(const json& doc, const char* field) {
  const json& v = doc.at(field);
  if (!v.is_string())
    throw Error(std::string("schema field \"") + field + "\" must be a string");
  return value_tag_from_name(v.get_ref<const std::string&>());
}

ElementSchema schema_from_json(const json& doc, const char* group_field) {
  if (!doc.is_object() || !doc.contains(group_field))
    throw Error(std::string("schema entry must be an object with a \"") +
                group_field + "\" field");
  ElementSchema schema;
  schema.group = doc.at(group_field).get<std::string>();
  if (doc.contains("properties")) {
    for (const json& entry : doc.at("properties")) {
      PropertySchema property;
      property.name = entry.at("name").get<std::string>();
      property.tag = tag_field(entry, "tag");
      if (entry.contains("alternate_tag")) {
        property.alternate_tag = tag_field(entry, "alternate_tag");
      } else {
        property.alternate_tag = property.tag == ValueTag::kLong
                                     ? ValueTag::kString
                                     : ValueTag::kLong;
      }
      if (entry.contains("presence"))
        property.presence = entry.at("presence").get<double>();
      schema.properties.push_back(std::move(property));
    }
  }
  return schema;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (flip_rate < 0.0 || flip_rate > 1.0)
    throw Error("flip_rate must be in [0, 1]");
  if (rel_count > 0 && node_count == 0)
    throw Error("rel_count > 0 requires node_count > 0");
  if (rel_count > 0 && rel_schemas.empty())
    throw Error("rel_count > 0 requires at least one relationship schema");
  for (const ElementSchema& schema : label_schemas)
    validate_schema(schema, "label");
  for (const ElementSchema& schema : rel_schemas)
    validate_schema(schema, "relationship");
}

SyntheticSpec SyntheticSpec::from_json(const json& doc) {
  if (!doc.is_object()) throw Error("synthetic spec must be a JSON object");
  SyntheticSpec spec;
  try {
    if (doc.contains("node_count"))
      spec.node_count = doc.at("node_count").get<std::uint64_t>();
    if (doc.contains("rel_count"))
      spec.rel_count = doc.at("rel_count").get<std::uint64_t>();
    if (doc.contains("flip_rate"))
      spec.flip_rate = doc.at("flip_rate").get<double>();
    if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("label_schemas"))
      for (const json& entry : doc.at("label_schemas"))
        spec.label_schemas.push_back(schema_from_json(entry, "label"));
    if (doc.contains("rel_schemas"))
      for (const json& entry : doc.at("rel_schemas"))
        spec.rel_schemas.push_back(schema_from_json(entry, "type"));
  } catch (const json::exception& e) {
    throw Error(std::string("synthetic spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

SyntheticResult generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  SyntheticResult result;
  std::mt19937_64 rng(spec.seed);

  auto emit_properties = [&](const ElementSchema& schema, ElementKind kind,
                             std::uint64_t id) {
    PropertyMap properties;
    properties.reserve(schema.properties.size());
    for (const PropertySchema& property : schema.properties) {
      if (!draw_chance(rng, property.presence)) continue;
      const bool flipped = draw_chance(rng, spec.flip_rate);
      const ValueTag tag = flipped ? property.alternate_tag : property.tag;
      properties.emplace_back(property.name, draw_scalar(rng, tag));
      if (flipped)
        result.ledger.push_back(FaultRecord{kind, id, schema.group,
                                            property.name, property.tag,
                                            property.alternate_tag});
    }
    return properties;
  };

  for (std::uint64_t id = 0; id < spec.node_count; ++id) {
    if (spec.label_schemas.empty()) {
      result.graph.add_node({}, {});
      continue;
    }
    const ElementSchema& schema =
        spec.label_schemas[id % spec.label_schemas.size()];
    result.graph.add_node({schema.group},
                          emit_properties(schema, ElementKind::kNode, id));
  }

  for (std::uint64_t id = 0; id < spec.rel_count; ++id) {
    const ElementSchema& schema = spec.rel_schemas[id % spec.rel_schemas.size()];
    const NodeId start = draw_below(rng, spec.node_count);
    const NodeId end = draw_below(rng, spec.node_count);
    result.graph.add_relationship(
        schema.group, start, end,
        emit_properties(schema, ElementKind::kRelationship, id));
  }

  return result;
}

}  // namespace graphlens
