#include "graphlens/graph.hpp"

#include <algorithm>

#include "graphlens/error.hpp"

namespace graphlens {

namespace {

void normalize_labels(std::vector<std::string>& labels) {
  for (const auto& label : labels) {
    if (label.empty()) throw Error("node label must be non-empty");
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

void normalize_properties(PropertyMap& properties) {
  for (const auto& [name, value] : properties) {
    if (name.empty()) throw Error("property name must be non-empty");
  }
  std::stable_sort(properties.begin(), properties.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < properties.size(); ++i) {
    if (properties[i - 1].first == properties[i].first)
      throw Error("duplicate property name '" + properties[i].first + "'");
  }
}

}  // namespace

NodeId Graph::add_node(std::vector<std::string> labels,
                       PropertyMap properties) {
  if (frozen_) throw Error("graph is frozen; cannot add node");
  normalize_labels(labels);
  normalize_properties(properties);
  NodeId id = nodes_.size();
  nodes_.push_back(Node{id, std::move(labels), std::move(properties)});
  return id;
}

RelId Graph::add_relationship(std::string type, NodeId start, NodeId end,
                              PropertyMap properties) {
  if (frozen_) throw Error("graph is frozen; cannot add relationship");
  if (type.empty()) throw Error("relationship type must be non-empty");
  if (start >= nodes_.size())
    throw Error("relationship start node " + std::to_string(start) +
                " does not exist (node count " +
                std::to_string(nodes_.size()) + ")");
  if (end >= nodes_.size())
    throw Error("relationship end node " + std::to_string(end) +
                " does not exist (node count " +
                std::to_string(nodes_.size()) + ")");
  normalize_properties(properties);
  RelId id = relationships_.size();
  relationships_.push_back(
      Relationship{id, std::move(type), start, end, std::move(properties)});
  return id;
}

const Node& Graph::node(NodeId id) const {
  if (id >= nodes_.size())
    throw Error("node id " + std::to_string(id) + " out of range");
  return nodes_[id];
}

const Relationship& Graph::relationship(RelId id) const {
  if (id >= relationships_.size())
    throw Error("relationship id " + std::to_string(id) + " out of range");
  return relationships_[id];
}

std::span<const Node> Graph::scan_nodes(std::uint64_t begin,
                                        std::uint64_t end) const {
  if (begin > end || end > nodes_.size())
    throw Error("node scan range [" + std::to_string(begin) + ", " +
                std::to_string(end) + ") out of bounds (node count " +
                std::to_string(nodes_.size()) + ")");
  return {nodes_.data() + begin, static_cast<std::size_t>(end - begin)};
}

std::span<const Relationship> Graph::scan_relationships(
    std::uint64_t begin, std::uint64_t end) const {
  if (begin > end || end > relationships_.size())
    throw Error("relationship scan range [" + std::to_string(begin) + ", " +
                std::to_string(end) + ") out of bounds (relationship count " +
                std::to_string(relationships_.size()) + ")");
  return {relationships_.data() + begin,
          static_cast<std::size_t>(end - begin)};
}

}  // namespace graphlens
