#include <fstream>
#include <string>
#include <unordered_map>

#include "graphlens/error.hpp"
#include "graphlens/ingest.hpp"

namespace graphlens {

namespace {

using nlohmann::json;

[[noreturn]] void fail_line(const std::filesystem::path& path,
                            std::uint64_t line, const std::string& message) {
  throw Error(path.string() + " line " + std::to_string(line) + ": " + message);
}

json parse_line(const std::filesystem::path& path, std::uint64_t line,
                const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail_line(path, line, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail_line(path, line, "expected a JSON object");
  return doc;
}

std::string require_string(const std::filesystem::path& path,
                           std::uint64_t line, const json& doc,
                           const char* field) {
  if (!doc.contains(field) || !doc.at(field).is_string())
    fail_line(path, line,
              std::string("missing or non-string field \"") + field + "\"");
  return doc.at(field).get<std::string>();
}

PropertyMap decode_properties(const std::filesystem::path& path,
                              std::uint64_t line, const json& doc) {
  PropertyMap properties;
  if (!doc.contains("props")) return properties;
  const json& props = doc.at("props");
  if (!props.is_object()) fail_line(path, line, "\"props\" must be an object");
  properties.reserve(props.size());
  for (const auto& [name, encoded] : props.items()) {
    try {
      properties.emplace_back(name, decode_value(encoded));
    } catch (const Error& e) {
      fail_line(path, line, "property \"" + name + "\": " + e.what());
    }
  }
  return properties;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

Graph load_jsonl(const std::filesystem::path& nodes_path,
                 const std::optional<std::filesystem::path>& rels_path) {
  Graph graph;
  std::unordered_map<std::string, NodeId> external_ids;

  {
    std::ifstream in = open_input(nodes_path);
    std::string text;
    std::uint64_t line = 0;
    while (std::getline(in, text)) {
      ++line;
      json doc = parse_line(nodes_path, line, text);
      std::string external_id = require_string(nodes_path, line, doc, "id");
      std::vector<std::string> labels;
      if (doc.contains("labels")) {
        const json& arr = doc.at("labels");
        if (!arr.is_array())
          fail_line(nodes_path, line, "\"labels\" must be an array");
        for (const json& label : arr) {
          if (!label.is_string())
            fail_line(nodes_path, line, "labels must be strings");
          labels.push_back(label.get<std::string>());
        }
      }
      if (external_ids.contains(external_id))
        fail_line(nodes_path, line, "duplicate node id \"" + external_id + "\"");
      PropertyMap properties = decode_properties(nodes_path, line, doc);
      try {
        NodeId id = graph.add_node(std::move(labels), std::move(properties));
        external_ids.emplace(std::move(external_id), id);
      } catch (const Error& e) {
        fail_line(nodes_path, line, e.what());
      }
    }
  }

  if (rels_path) {
    std::ifstream in = open_input(*rels_path);
    std::string text;
    std::uint64_t line = 0;
    while (std::getline(in, text)) {
      ++line;
      json doc = parse_line(*rels_path, line, text);
      std::string type = require_string(*rels_path, line, doc, "type");
      std::string start = require_string(*rels_path, line, doc, "start");
      std::string end = require_string(*rels_path, line, doc, "end");
      auto start_it = external_ids.find(start);
      if (start_it == external_ids.end())
        fail_line(*rels_path, line, "unknown start node id \"" + start + "\"");
      auto end_it = external_ids.find(end);
      if (end_it == external_ids.end())
        fail_line(*rels_path, line, "unknown end node id \"" + end + "\"");
      PropertyMap properties = decode_properties(*rels_path, line, doc);
      try {
        graph.add_relationship(std::move(type), start_it->second,
                               end_it->second, std::move(properties));
      } catch (const Error& e) {
        fail_line(*rels_path, line, e.what());
      }
    }
  }

  return graph;
}

void write_jsonl(const Graph& graph, const std::filesystem::path& nodes_path,
                 const std::optional<std::filesystem::path>& rels_path) {
  {
    std::ofstream out(nodes_path, std::ios::binary);
    if (!out) throw Error("cannot write " + nodes_path.string());
    for (std::uint64_t id = 0; id < graph.node_count(); ++id) {
      const Node& node = graph.node(id);
      json doc;
      doc["id"] = std::to_string(node.id);
      doc["labels"] = node.labels;
      json props = json::object();
      for (const auto& [name, value] : node.properties)
        props[name] = encode_value(value);
      doc["props"] = std::move(props);
      out << doc.dump() << '\n';
    }
    if (!out) throw Error("failed writing " + nodes_path.string());
  }

  if (rels_path) {
    std::ofstream out(*rels_path, std::ios::binary);
    if (!out) throw Error("cannot write " + rels_path->string());
    for (std::uint64_t id = 0; id < graph.relationship_count(); ++id) {
      const Relationship& rel = graph.relationship(id);
      json doc;
      doc["id"] = std::to_string(rel.id);
      doc["type"] = rel.type;
      doc["start"] = std::to_string(rel.start);
      doc["end"] = std::to_string(rel.end);
      json props = json::object();
      for (const auto& [name, value] : rel.properties)
        props[name] = encode_value(value);
      doc["props"] = std::move(props);
      out << doc.dump() << '\n';
    }
    if (!out) throw Error("failed writing " + rels_path->string());
  }
}

}  // namespace graphlens
