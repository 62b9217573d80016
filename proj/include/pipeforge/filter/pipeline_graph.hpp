#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/error.hpp"
#include "pipeforge/filter/vocabulary.hpp"

namespace pipeforge::filter {

struct PipelineNode {
  int id = 0;
  VocabId vocab_id = 0;
  friend bool operator==(const PipelineNode&, const PipelineNode&) = default;
};

struct PipelineEdge {
  int src = 0;
  int dst = 0;
  friend bool operator==(const PipelineEdge&, const PipelineEdge&) = default;
  friend auto operator<=>(const PipelineEdge&, const PipelineEdge&) = default;
};

// Filtered operator graph rooted at a dataset node. Node ids are positions in
// `nodes`.
struct PipelineGraph {
  std::string graph_id;
  std::string dataset_name;
  std::vector<PipelineNode> nodes;
  std::vector<PipelineEdge> edges;

  friend bool operator==(const PipelineGraph&, const PipelineGraph&) = default;
};

inline constexpr std::size_t kDefaultMaxNodes = 64;

inline nlohmann::ordered_json to_json(const PipelineGraph& g) {
  nlohmann::ordered_json j;
  j["graph_id"] = g.graph_id;
  j["dataset_name"] = g.dataset_name;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes) nodes.push_back({{"id", n.id}, {"vocab_id", n.vocab_id}});
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) edges.push_back({{"src", e.src}, {"dst", e.dst}});
  return j;
}

inline PipelineGraph pipeline_graph_from_json(const nlohmann::json& j) {
  try {
    PipelineGraph g;
    g.graph_id = j.at("graph_id").get<std::string>();
    g.dataset_name = j.at("dataset_name").get<std::string>();
    for (const auto& n : j.at("nodes")) g.nodes.push_back({n.at("id").get<int>(), n.at("vocab_id").get<int>()});
    for (const auto& e : j.at("edges")) g.edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>()});
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed pipeline graph: ") + ex.what());
  }
}

struct Adjacency {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

inline Adjacency adjacency(const PipelineGraph& g) {
  Adjacency adj;
  adj.out.resize(g.nodes.size());
  adj.in.resize(g.nodes.size());
  for (const auto& e : g.edges) {
    adj.out[static_cast<std::size_t>(e.src)].push_back(e.dst);
    adj.in[static_cast<std::size_t>(e.dst)].push_back(e.src);
  }
  return adj;
}

inline bool is_acyclic(std::size_t n, const std::vector<PipelineEdge>& edges) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& e : edges) {
    out[static_cast<std::size_t>(e.src)].push_back(e.dst);
    ++indeg[static_cast<std::size_t>(e.dst)];
  }
  std::vector<int> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

// Nodes reachable from `from` along directed edges (including `from`).
inline std::vector<bool> reachable_from(const PipelineGraph& g, int from) {
  const Adjacency adj = adjacency(g);
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj.out[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Checks every PipelineGraph invariant. Returns an empty string when valid,
// otherwise the first violation found.
inline std::string validate(const PipelineGraph& g, const NodeVocabulary& vocab,
                            std::size_t max_nodes = kDefaultMaxNodes) {
  const std::size_t n = g.nodes.size();
  if (n == 0) return "graph has no nodes";
  if (n > max_nodes) return "graph exceeds the node limit";
  int datasets = 0;
  int reads = 0;
  int dataset_node = -1;
  int read_node = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = g.nodes[i];
    if (node.id != static_cast<int>(i)) return "node ids are not dense";
    if (!vocab.contains(node.vocab_id)) return "vocab id out of range";
    if (node.vocab_id == kStop) return "STOP used as a node type";
    if (node.vocab_id == kDataset) {
      ++datasets;
      dataset_node = node.id;
    }
    if (node.vocab_id == kReadCsv) {
      ++reads;
      read_node = node.id;
    }
  }
  if (datasets != 1) return "graph must contain exactly one DATASET node";
  if (reads != 1) return "graph must contain exactly one READ_CSV node";
  std::set<PipelineEdge> unique;
  bool seed_edge = false;
  for (const auto& e : g.edges) {
    if (e.src < 0 || e.dst < 0 || static_cast<std::size_t>(e.src) >= n || static_cast<std::size_t>(e.dst) >= n) {
      return "edge endpoint out of range";
    }
    if (e.src == e.dst) return "self loop";
    if (!unique.insert(e).second) return "duplicate edge";
    seed_edge = seed_edge || (e.src == dataset_node && e.dst == read_node);
  }
  if (!seed_edge) return "missing DATASET -> READ_CSV edge";
  if (!is_acyclic(n, g.edges)) return "graph has a cycle";
  // Weak connectivity.
  std::vector<std::vector<int>> und(n);
  for (const auto& e : g.edges) {
    und[static_cast<std::size_t>(e.src)].push_back(e.dst);
    und[static_cast<std::size_t>(e.dst)].push_back(e.src);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : und[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) return "graph is not connected";
  return {};
}

inline std::size_t count_category(const PipelineGraph& g, const NodeVocabulary& vocab, Category c) {
  return static_cast<std::size_t>(std::count_if(g.nodes.begin(), g.nodes.end(), [&](const PipelineNode& node) {
    return vocab.contains(node.vocab_id) && vocab.category(node.vocab_id) == c;
  }));
}

}  // namespace pipeforge::filter
