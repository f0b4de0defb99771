#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphlens/value.hpp"

namespace graphlens {

using NodeId = std::uint64_t;
using RelId = std::uint64_t;

/// Properties are stored sorted by name, names unique and non-empty.
using PropertyMap = std::vector<std::pair<std::string, PropertyValue>>;

struct Node {
  NodeId id = 0;
  std::vector<std::string> labels;  // sorted, unique, non-empty
  PropertyMap properties;

  bool operator==(const Node&) const = default;
};

struct Relationship {
  RelId id = 0;
  std::string type;  // exactly one, non-empty
  NodeId start = 0;
  NodeId end = 0;
  PropertyMap properties;

  bool operator==(const Relationship&) const = default;
};

/// In-memory property graph with dense ordinal ids. Append-only while
/// building; freeze() makes it immutable, after which any number of
/// threads may scan concurrently without coordination.
class Graph {
 public:
  Graph() = default;

  Graph(Graph&&) = default;
  Graph& operator=(Graph&&) = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  /// Appends a node; returns its dense ordinal. Duplicate labels in the
  /// input are collapsed; duplicate property names are an error, as is
  /// adding to a frozen graph.
  NodeId add_node(std::vector<std::string> labels, PropertyMap properties);

  /// Appends a relationship. Both endpoints must already exist
  /// (self-loops are fine); the type must be non-empty.
  RelId add_relationship(std::string type, NodeId start, NodeId end,
                         PropertyMap properties);

  /// Makes the graph immutable. Idempotent. Inspection requires this.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::uint64_t node_count() const { return nodes_.size(); }
  std::uint64_t relationship_count() const { return relationships_.size(); }

  const Node& node(NodeId id) const;
  const Relationship& relationship(RelId id) const;

  /// Read-only view of nodes with ids in [begin, end), ascending.
  /// Throws Error if the range exceeds [0, node_count()].
  std::span<const Node> scan_nodes(std::uint64_t begin,
                                   std::uint64_t end) const;
  std::span<const Relationship> scan_relationships(std::uint64_t begin,
                                                   std::uint64_t end) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Relationship> relationships_;
  bool frozen_ = false;
};

}  // namespace graphlens
