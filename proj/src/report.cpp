#include "graphlens/report.hpp"

#include <nlohmann/json.hpp>

#include "graphlens/error.hpp"

namespace graphlens {

namespace {

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

}  // namespace

void TypeReport::add(std::string_view group, std::string_view property,
                     ValueTag type, std::uint64_t n) {
  if (n == 0) return;
  groups_[std::string(group)][std::string(property)]
         [std::string(value_tag_name(type))] += n;
}

void TypeReport::merge(const TypeReport& other) {
  for (const auto& [group, properties] : other.groups_) {
    auto& dst_properties = groups_[group];
    for (const auto& [property, types] : properties) {
      auto& dst_types = dst_properties[property];
      for (const auto& [type, count] : types) dst_types[type] += count;
    }
  }
}

std::vector<Inconsistency> find_inconsistencies(const TypeReport& report) {
  std::vector<Inconsistency> out;
  for (const auto& [group, properties] : report.groups()) {
    for (const auto& [property, types] : properties) {
      if (types.size() < 2) continue;
      // Map order is ascending by name, so on a count tie the first
      // (lexicographically smallest) name wins.
      std::uint64_t total = 0;
      std::uint64_t best = 0;
      std::string_view majority;
      for (const auto& [type, count] : types) {
        total += count;
        if (count > best) {
          best = count;
          majority = type;
        }
      }
      out.push_back(Inconsistency{group, property, types,
                                  std::string(majority), total - best});
    }
  }
  return out;
}

std::string to_json(const TypeReport& report) {
  std::string out = "{";
  bool first_group = true;
  for (const auto& [group, properties] : report.groups()) {
    out += first_group ? "\n" : ",\n";
    first_group = false;
    out += "  \"";
    append_escaped(out, group);
    out += "\": {";
    bool first_property = true;
    for (const auto& [property, types] : properties) {
      out += first_property ? "\n" : ",\n";
      first_property = false;
      out += "    \"";
      append_escaped(out, property);
      out += "\": {";
      bool first_type = true;
      for (const auto& [type, count] : types) {
        out += first_type ? "\n" : ",\n";
        first_type = false;
        out += "      \"";
        append_escaped(out, type);
        out += "\": ";
        out += std::to_string(count);
      }
      out += first_type ? "}" : "\n    }";
    }
    out += first_property ? "}" : "\n  }";
  }
  out += first_group ? "}" : "\n}";
  out += '\n';
  return out;
}

TypeReport report_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("report JSON: top level must be an object");
  TypeReport report;
  for (const auto& [group, properties] : doc.items()) {
    if (!properties.is_object() || properties.empty())
      throw Error("report JSON: group '" + group +
                  "' must be a non-empty object");
    for (const auto& [property, types] : properties.items()) {
      if (!types.is_object() || types.empty())
        throw Error("report JSON: property '" + group + "'.'" + property +
                    "' must be a non-empty object");
      for (const auto& [type, count] : types.items()) {
        ValueTag tag = value_tag_from_name(type);
        if (!count.is_number_unsigned() || count.get<std::uint64_t>() == 0)
          throw Error("report JSON: count for '" + group + "'.'" + property +
                      "'.'" + type + "' must be a positive integer");
        report.add(group, property, tag, count.get<std::uint64_t>());
      }
    }
  }
  return report;
}

ReportSummary summarize(const TypeReport& report) {
  ReportSummary summary;
  summary.groups = report.groups().size();
  for (const auto& [group, properties] : report.groups()) {
    summary.properties += properties.size();
    for (const auto& [property, types] : properties) {
      for (const auto& [type, count] : types) summary.instances += count;
    }
  }
  summary.inconsistent_pairs = find_inconsistencies(report).size();
  return summary;
}

}  // namespace graphlens
