#include "graphlens/inspector.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "graphlens/error.hpp"

namespace graphlens {

namespace {

constexpr std::uint64_t kMaxAutoBatchSize = 100000;
constexpr std::uint64_t kBatchesPerWorker = 10;

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return a == 0 ? 0 : (a - 1) / b + 1;
}

// Per-worker accumulator. Hash maps keep the hot loop cheap; the sorted
// TypeReport is built once at the end.
struct Accumulator {
  using TagCounts = std::array<std::uint64_t, kValueTagCount>;
  std::unordered_map<std::string, std::unordered_map<std::string, TagCounts>>
      groups;

  void bump(const std::string& group, const std::string& property,
            ValueTag tag) {
    ++groups[group][property][static_cast<std::size_t>(tag)];
  }

  void add_to(TypeReport& report) const {
    for (const auto& [group, properties] : groups) {
      for (const auto& [property, tags] : properties) {
        for (std::size_t i = 0; i < tags.size(); ++i) {
          report.add(group, property, static_cast<ValueTag>(i), tags[i]);
        }
      }
    }
  }
};

const std::string kNoLabelKey{kNoLabelGroup};

void accumulate_nodes(const Graph& graph, IdRange range, Accumulator& acc) {
  for (const Node& node : graph.scan_nodes(range.begin, range.end)) {
    if (node.labels.empty()) {
      for (const auto& [name, value] : node.properties)
        acc.bump(kNoLabelKey, name, value.tag());
    } else {
      for (const std::string& label : node.labels) {
        for (const auto& [name, value] : node.properties)
          acc.bump(label, name, value.tag());
      }
    }
  }
}

void accumulate_relationships(const Graph& graph, IdRange range,
                              Accumulator& acc) {
  for (const Relationship& rel :
       graph.scan_relationships(range.begin, range.end)) {
    for (const auto& [name, value] : rel.properties)
      acc.bump(rel.type, name, value.tag());
  }
}

template <class AccumulateBatch>
TypeReport run_inspection(const Graph& graph, std::uint64_t total,
                          const InspectConfig& config, const char* kind,
                          std::ostream* debug_out,
                          AccumulateBatch&& accumulate) {
  config.validate();
  if (!graph.frozen())
    throw Error("graph must be frozen before inspection");

  const BatchPlan plan = plan_batches(total, config);
  const std::size_t batch_count = plan.batches.size();
  const std::size_t workers =
      config.parallel
          ? static_cast<std::size_t>(
                std::min<std::uint64_t>(config.concurrency, batch_count))
          : 1;

  std::ostream* dbg = nullptr;
  if (config.debug) dbg = debug_out ? debug_out : &std::cerr;

  std::vector<Accumulator> partials(std::max<std::size_t>(workers, 1));
  std::atomic<std::size_t> next_batch{0};
  std::mutex debug_mutex;

  auto worker_loop = [&](std::size_t worker_index) {
    Accumulator& acc = partials[worker_index];
    for (;;) {
      std::size_t i = next_batch.fetch_add(1, std::memory_order_relaxed);
      if (i >= batch_count) break;
      const IdRange range = plan.batches[i];
      const auto start = std::chrono::steady_clock::now();
      accumulate(graph, range, acc);
      if (dbg) {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        std::scoped_lock lock(debug_mutex);
        *dbg << "inspect kind=" << kind << " batch=" << (i + 1) << "/"
             << batch_count << " span=" << range.begin << ".." << range.end
             << " elements=" << range.size() << " elapsed_ms=" << elapsed
             << "\n";
      }
    }
  };

  if (workers <= 1) {
    worker_loop(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(worker_loop, w);
    for (auto& t : pool) t.join();
  }

  // Single deterministic merge after all workers finish; counts are
  // integers and addition commutes, so worker scheduling cannot leak in.
  TypeReport report;
  for (const Accumulator& acc : partials) acc.add_to(report);
  return report;
}

}  // namespace

void InspectConfig::validate() const {
  if (concurrency < 1) throw Error("concurrency must be >= 1");
}

BatchPlan plan_batches(std::uint64_t total, const InspectConfig& config) {
  config.validate();
  BatchPlan plan;
  plan.inspected =
      config.limit == 0 ? total : std::min<std::uint64_t>(config.limit, total);
  if (config.batch_size > 0) {
    plan.batch_size = config.batch_size;
  } else {
    const std::uint64_t workers = config.parallel ? config.concurrency : 1;
    plan.batch_size =
        std::clamp<std::uint64_t>(ceil_div(plan.inspected, workers * kBatchesPerWorker),
                                  1, kMaxAutoBatchSize);
  }
  plan.batches.reserve(
      static_cast<std::size_t>(ceil_div(plan.inspected, plan.batch_size)));
  for (std::uint64_t lo = 0; lo < plan.inspected; lo += plan.batch_size) {
    plan.batches.push_back(
        IdRange{lo, std::min<std::uint64_t>(lo + plan.batch_size, plan.inspected)});
  }
  return plan;
}

TypeReport inspect_nodes(const Graph& graph, const InspectConfig& config,
                         std::ostream* debug_out) {
  return run_inspection(graph, graph.node_count(), config, "nodes", debug_out,
                        accumulate_nodes);
}

TypeReport inspect_relationships(const Graph& graph,
                                 const InspectConfig& config,
                                 std::ostream* debug_out) {
  return run_inspection(graph, graph.relationship_count(), config,
                        "relationships", debug_out, accumulate_relationships);
}

TypeReport merge_partials(std::span<const TypeReport> partials) {
  TypeReport merged;
  for (const TypeReport& partial : partials) merged.merge(partial);
  return merged;
}

}  // namespace graphlens
