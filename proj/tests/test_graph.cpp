#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

#include "graphlens/error.hpp"
#include "graphlens/graph.hpp"

using namespace graphlens;

TEST_CASE("first node on an empty graph gets id 0") {
  Graph graph;
  CHECK(graph.add_node({}, {}) == 0);
  CHECK(graph.node_count() == 1);
}

TEST_CASE("add_node increments the count by one") {
  Graph graph;
  graph.add_node({}, {});
  const auto before = graph.node_count();
  graph.add_node({"PERSON"}, {{"name", PropertyValue("a")}});
  CHECK(graph.node_count() == before + 1);
}

TEST_CASE("sequential inserts assign contiguous ids") {
  Graph graph;
  for (std::uint64_t i = 0; i < 1000; ++i)
    CHECK(graph.add_node({}, {}) == i);
  CHECK(graph.node_count() == 1000);
  for (std::uint64_t i = 0; i < 1000; ++i) CHECK(graph.node(i).id == i);
}

TEST_CASE("duplicate property names are rejected") {
  Graph graph;
  CHECK_THROWS_WITH_AS(
      graph.add_node({}, {{"p", PropertyValue(1)}, {"p", PropertyValue("x")}}),
      doctest::Contains("duplicate property name 'p'"), Error);
}

TEST_CASE("labels are deduplicated and sorted; empty labels rejected") {
  Graph graph;
  const NodeId id = graph.add_node({"B", "A", "B"}, {});
  CHECK(graph.node(id).labels == std::vector<std::string>{"A", "B"});
  CHECK_THROWS_AS(graph.add_node({""}, {}), Error);
  CHECK_THROWS_AS(graph.add_node({}, {{"", PropertyValue(1)}}), Error);
}

TEST_CASE("first relationship gets id 0; self-loops are legal") {
  Graph graph;
  graph.add_node({}, {});
  graph.add_node({}, {});
  CHECK(graph.add_relationship("KNOWS", 0, 1, {}) == 0);
  CHECK(graph.add_relationship("KNOWS", 0, 0, {}) == 1);  // self-loop
  CHECK(graph.relationship_count() == 2);
}

TEST_CASE("dangling endpoints are rejected with the offending id") {
  Graph graph;
  graph.add_node({}, {});
  graph.add_node({}, {});
  CHECK_THROWS_WITH_AS(graph.add_relationship("KNOWS", 0, 99, {}),
                       doctest::Contains("99"), Error);
  CHECK_THROWS_WITH_AS(graph.add_relationship("KNOWS", 7, 0, {}),
                       doctest::Contains("7"), Error);
  CHECK_THROWS_AS(graph.add_relationship("", 0, 1, {}), Error);
}

TEST_CASE("frozen graphs reject mutation") {
  Graph graph;
  graph.add_node({}, {});
  graph.freeze();
  CHECK(graph.frozen());
  CHECK_THROWS_AS(graph.add_node({}, {}), Error);
  CHECK_THROWS_AS(graph.add_relationship("X", 0, 0, {}), Error);
  graph.freeze();  // idempotent
  CHECK(graph.frozen());
}

TEST_CASE("scan of an empty range yields nothing") {
  Graph graph;
  CHECK(graph.scan_nodes(0, 0).empty());
  graph.add_node({}, {});
  CHECK(graph.scan_nodes(1, 1).empty());
}

TEST_CASE("full scan visits every node exactly once, ascending") {
  Graph graph;
  for (int i = 0; i < 57; ++i) graph.add_node({}, {});
  const auto all = graph.scan_nodes(0, graph.node_count());
  CHECK(all.size() == 57);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].id == i);
}

TEST_CASE("out-of-bounds scans are rejected") {
  Graph graph;
  graph.add_node({}, {});
  CHECK_THROWS_AS(graph.scan_nodes(0, 2), Error);
  CHECK_THROWS_AS(graph.scan_nodes(2, 2), Error);
  CHECK_THROWS_AS(graph.scan_nodes(1, 0), Error);
  CHECK_THROWS_AS(graph.scan_relationships(0, 1), Error);
}

TEST_CASE("scans over any interval partition visit each id exactly once") {
  Graph graph;
  for (int i = 0; i < 200; ++i) graph.add_node({}, {});
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    // Random cut points over [0, 200).
    std::vector<std::uint64_t> cuts{0, 200};
    const int extra = static_cast<int>(rng() % 6);
    for (int i = 0; i < extra; ++i) cuts.push_back(rng() % 201);
    std::sort(cuts.begin(), cuts.end());
    std::vector<bool> seen(200, false);
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      for (const Node& node : graph.scan_nodes(cuts[i - 1], cuts[i])) {
        CHECK(!seen[node.id]);
        seen[node.id] = true;
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}
