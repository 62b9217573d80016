#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/error.hpp"
#include "pipeforge/filter/pipeline_graph.hpp"

namespace pipeforge::generator {

using filter::PipelineEdge;
using filter::PipelineGraph;
using filter::VocabId;

enum class StepKind { AddNode, StopNodes, AddEdgeYes, AddEdgeNo, PickNode };

struct Step {
  StepKind kind = StepKind::StopNodes;
  int value = 0;  // vocab id for AddNode, canonical node index for PickNode

  static Step add_node(VocabId id) { return {StepKind::AddNode, id}; }
  static Step stop() { return {StepKind::StopNodes, 0}; }
  static Step edge_yes() { return {StepKind::AddEdgeYes, 0}; }
  static Step edge_no() { return {StepKind::AddEdgeNo, 0}; }
  static Step pick(int index) { return {StepKind::PickNode, index}; }

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// Decision sequence that grows a graph from the DATASET -> READ_CSV seed.
struct GenerationTrace {
  std::string graph_id;
  std::string dataset_name;
  std::vector<Step> steps;

  friend bool operator==(const GenerationTrace&, const GenerationTrace&) = default;
};

inline std::string to_string(const Step& s) {
  switch (s.kind) {
    case StepKind::AddNode: return "AddNode(" + std::to_string(s.value) + ")";
    case StepKind::StopNodes: return "StopNodes";
    case StepKind::AddEdgeYes: return "AddEdgeYes";
    case StepKind::AddEdgeNo: return "AddEdgeNo";
    case StepKind::PickNode: return "PickNode(" + std::to_string(s.value) + ")";
  }
  return "";
}

inline std::string to_string(const std::vector<Step>& steps) {
  std::string out;
  for (const auto& s : steps) out += (out.empty() ? "" : " ") + to_string(s);
  return out;
}

// Node order used for teacher forcing: DATASET, READ_CSV, then a
// breadth-first topological sweep (Kahn's algorithm with a FIFO queue) where
// nodes that become ready together are queued by (vocab_id, original id).
// Topological rather than plain BFS so that every edge points from an
// earlier node to a later one and can be emitted when its target is added.
inline std::vector<int> canonical_order(const PipelineGraph& g) {
  const std::size_t n = g.nodes.size();
  int dataset = -1;
  int read = -1;
  for (const auto& node : g.nodes) {
    if (node.vocab_id == filter::kDataset) dataset = node.id;
    if (node.vocab_id == filter::kReadCsv) read = node.id;
  }
  if (dataset < 0 || read < 0) throw InvalidGraph("graph lacks the DATASET -> READ_CSV seed");
  const auto adj = filter::adjacency(g);
  if (!adj.in[static_cast<std::size_t>(dataset)].empty()) throw InvalidGraph("DATASET has incoming edges");
  for (int u : adj.in[static_cast<std::size_t>(read)]) {
    if (u != dataset) throw InvalidGraph("READ_CSV has an input other than DATASET");
  }
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges) ++indeg[static_cast<std::size_t>(e.dst)];

  std::vector<int> order;
  std::deque<int> queue;
  std::vector<bool> placed(n, false);
  auto by_key = [&](int a, int b) {
    const auto& na = g.nodes[static_cast<std::size_t>(a)];
    const auto& nb = g.nodes[static_cast<std::size_t>(b)];
    return std::pair(na.vocab_id, na.id) < std::pair(nb.vocab_id, nb.id);
  };
  auto place = [&](int v, std::vector<int>& ready) {
    placed[static_cast<std::size_t>(v)] = true;
    order.push_back(v);
    for (int w : adj.out[static_cast<std::size_t>(v)]) {
      if (--indeg[static_cast<std::size_t>(w)] == 0 && w != read) ready.push_back(w);
    }
  };
  std::vector<int> ready;
  place(dataset, ready);
  place(read, ready);
  // Other source nodes (weakly attached operators) join the first wave.
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0 && !placed[v] && std::find(ready.begin(), ready.end(), static_cast<int>(v)) == ready.end()) {
      ready.push_back(static_cast<int>(v));
    }
  }
  std::sort(ready.begin(), ready.end(), by_key);
  queue.insert(queue.end(), ready.begin(), ready.end());
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ready.clear();
    place(v, ready);
    std::sort(ready.begin(), ready.end(), by_key);
    queue.insert(queue.end(), ready.begin(), ready.end());
  }
  if (order.size() != n) throw InvalidGraph("graph has a cycle");
  return order;
}

inline GenerationTrace canonicalize_trace(const PipelineGraph& g, const filter::NodeVocabulary& vocab) {
  if (const auto why = filter::validate(g, vocab, g.nodes.size()); !why.empty()) throw InvalidGraph(why);
  const auto order = canonical_order(g);
  std::vector<int> index(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  const auto adj = filter::adjacency(g);
  GenerationTrace t{g.graph_id, g.dataset_name, {}};
  for (std::size_t i = 2; i < order.size(); ++i) {
    const int v = order[i];
    t.steps.push_back(Step::add_node(g.nodes[static_cast<std::size_t>(v)].vocab_id));
    std::vector<int> sources;
    for (int u : adj.in[static_cast<std::size_t>(v)]) sources.push_back(index[static_cast<std::size_t>(u)]);
    std::sort(sources.begin(), sources.end());
    for (int s : sources) {
      t.steps.push_back(Step::edge_yes());
      t.steps.push_back(Step::pick(s));
    }
    t.steps.push_back(Step::edge_no());
  }
  t.steps.push_back(Step::stop());
  return t;
}

// Rebuilds the graph a trace describes, with nodes numbered in trace order.
inline PipelineGraph replay(const GenerationTrace& t) {
  PipelineGraph g;
  g.graph_id = t.graph_id;
  g.dataset_name = t.dataset_name;
  g.nodes = {{0, filter::kDataset}, {1, filter::kReadCsv}};
  g.edges = {{0, 1}};
  std::set<PipelineEdge> edges{{0, 1}};
  bool open_node = false;      // a node was added and still takes edges
  bool expecting_pick = false;
  bool stopped = false;
  for (const auto& s : t.steps) {
    if (stopped) throw InvalidTrace("steps after StopNodes");
    if (expecting_pick != (s.kind == StepKind::PickNode)) {
      throw InvalidTrace(expecting_pick ? "AddEdgeYes not followed by PickNode" : "PickNode without AddEdgeYes");
    }
    switch (s.kind) {
      case StepKind::AddNode:
        if (open_node) throw InvalidTrace("AddNode before the previous node's edges were closed");
        if (s.value < 0) throw InvalidTrace("negative vocab id");
        g.nodes.push_back({static_cast<int>(g.nodes.size()), s.value});
        open_node = true;
        break;
      case StepKind::StopNodes:
        if (open_node) throw InvalidTrace("StopNodes before the previous node's edges were closed");
        stopped = true;
        break;
      case StepKind::AddEdgeYes:
        if (!open_node) throw InvalidTrace("edge decision without a new node");
        expecting_pick = true;
        break;
      case StepKind::AddEdgeNo:
        if (!open_node) throw InvalidTrace("edge decision without a new node");
        open_node = false;
        break;
      case StepKind::PickNode: {
        const int dst = static_cast<int>(g.nodes.size()) - 1;
        if (s.value < 0 || s.value >= dst) throw InvalidTrace("PickNode index out of range");
        if (!edges.insert({s.value, dst}).second) throw InvalidTrace("duplicate edge");
        g.edges.push_back({s.value, dst});
        expecting_pick = false;
        break;
      }
    }
  }
  if (!stopped) throw InvalidTrace("trace does not end with StopNodes");
  return g;
}

// The graph renumbered into canonical order with edges sorted by (dst, src),
// which is the form replay() produces.
inline PipelineGraph relabel_canonical(const PipelineGraph& g) {
  const auto order = canonical_order(g);
  std::vector<int> index(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  PipelineGraph out{g.graph_id, g.dataset_name, {}, {}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.nodes.push_back({static_cast<int>(i), g.nodes[static_cast<std::size_t>(order[i])].vocab_id});
  }
  for (const auto& e : g.edges) {
    out.edges.push_back({index[static_cast<std::size_t>(e.src)], index[static_cast<std::size_t>(e.dst)]});
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const PipelineEdge& a, const PipelineEdge& b) { return std::pair(a.dst, a.src) < std::pair(b.dst, b.src); });
  return out;
}

inline nlohmann::ordered_json to_json(const GenerationTrace& t) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : t.steps) steps.push_back(to_string(s));
  return {{"graph_id", t.graph_id}, {"dataset_name", t.dataset_name}, {"steps", steps}};
}

}  // namespace pipeforge::generator
