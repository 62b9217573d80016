#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/text.hpp"
#include "pipeforge/filter/pipeline_graph.hpp"
#include "pipeforge/filter/vocabulary.hpp"
#include "pipeforge/script/code_graph.hpp"
#include "pipeforge/script/resolver.hpp"

namespace pipeforge::filter {

inline const std::string kUnknownDataset = "UNKNOWN_DATASET";

enum class RejectReason { NoEstimator, NoReadCall, Cycle, TooLarge };

inline const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::NoEstimator: return "no_estimator";
    case RejectReason::NoReadCall: return "no_read_call";
    case RejectReason::Cycle: return "cycle";
    case RejectReason::TooLarge: return "too_large";
  }
  return "";
}

struct Rejected {
  RejectReason reason;
  friend bool operator==(const Rejected&, const Rejected&) = default;
};

using FilterResult = std::variant<PipelineGraph, Rejected>;

struct FilterReport {
  std::size_t scripts_in = 0;
  std::size_t graphs_out = 0;
  std::size_t nodes_before = 0;
  std::size_t nodes_after = 0;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  std::size_t rejected_no_estimator = 0;
  std::size_t rejected_other = 0;

  static double rate(std::size_t before, std::size_t after) {
    return before == 0 ? 0.0 : 1.0 - static_cast<double>(after) / static_cast<double>(before);
  }
  double reduction_rate_nodes() const { return rate(nodes_before, nodes_after); }
  double reduction_rate_edges() const { return rate(edges_before, edges_after); }
  double reduction_rate_combined() const { return rate(nodes_before + edges_before, nodes_after + edges_after); }

  FilterReport& operator+=(const FilterReport& o) {
    scripts_in += o.scripts_in;
    graphs_out += o.graphs_out;
    nodes_before += o.nodes_before;
    nodes_after += o.nodes_after;
    edges_before += o.edges_before;
    edges_after += o.edges_after;
    rejected_no_estimator += o.rejected_no_estimator;
    rejected_other += o.rejected_other;
    return *this;
  }

  nlohmann::ordered_json to_json() const {
    return {{"scripts_in", scripts_in},
            {"graphs_out", graphs_out},
            {"nodes_before", nodes_before},
            {"nodes_after", nodes_after},
            {"edges_before", edges_before},
            {"edges_after", edges_after},
            {"reduction_rate_nodes", reduction_rate_nodes()},
            {"reduction_rate_edges", reduction_rate_edges()},
            {"rejected_no_estimator", rejected_no_estimator},
            {"rejected_other", rejected_other}};
  }
};

struct OperatorMatch {
  VocabId id = 0;
  bool method = false;  // a method call on an operator instance, not its constructor
};

// Maps a call-site label onto the vocabulary. Only pandas read calls and the
// target ML libraries (scikit-learn, XGBoost, LightGBM) can match.
inline std::optional<OperatorMatch> match_operator(const std::string& label, const NodeVocabulary& vocab) {
  if (script::api::is_read_like(label)) return OperatorMatch{kReadCsv, false};
  const std::string root = label.substr(0, label.find('.'));
  if (root != "sklearn" && root != "xgboost" && root != "lightgbm") return std::nullopt;
  if (auto id = vocab.find(label); id && *id >= kReservedCount) return OperatorMatch{*id, false};
  const auto parts = text::split(label, '.');
  if (auto id = vocab.find(parts.back()); id && *id >= kReservedCount) return OperatorMatch{*id, false};
  if (parts.size() >= 2) {
    if (auto id = vocab.find(parts[parts.size() - 2]); id && *id >= kReservedCount) return OperatorMatch{*id, true};
  }
  return std::nullopt;
}

// Basename, lowercased, last extension stripped. The sentinel passes through.
inline std::string normalize_dataset_name(const std::string& name) {
  if (name == kUnknownDataset) return name;
  std::string base = text::lower(text::basename(name));
  if (const auto dot = base.rfind('.'); dot != std::string::npos && dot > 0) base.resize(dot);
  return base;
}

using DatasetSidecar = std::map<std::string, std::string>;

// Name of the dataset a script reads: the literal path given to a read call,
// else the sidecar entry for the script, else UNKNOWN_DATASET.
inline std::string resolve_dataset_name(const script::CodeGraph& g, const DatasetSidecar& sidecar) {
  std::vector<std::vector<int>> preds(g.nodes.size());
  for (const auto& e : g.edges) {
    if (e.kind == script::EdgeKind::DataFlow) preds[static_cast<std::size_t>(e.dst)].push_back(e.src);
  }
  for (const auto& n : g.nodes) {
    if (n.kind != script::NodeKind::CallSite || !script::api::is_read_like(n.label)) continue;
    for (int p : preds[static_cast<std::size_t>(n.id)]) {
      if (g.nodes[static_cast<std::size_t>(p)].kind == script::NodeKind::DataSource) {
        return text::basename(g.nodes[static_cast<std::size_t>(p)].label);
      }
    }
  }
  if (auto it = sidecar.find(g.script_id); it != sidecar.end()) return it->second;
  if (auto it = sidecar.find(text::basename(g.script_id)); it != sidecar.end()) return it->second;
  return kUnknownDataset;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // The smaller code-graph id stays representative.
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

}  // namespace detail

// Reduces a code graph to its ML-operator core:
//  - keeps call sites whose label maps into the vocabulary;
//  - contracts DataFlow paths through removed nodes into direct edges;
//  - merges an operator's constructor with the method calls made on it, and
//    all read calls into one READ_CSV node;
//  - drops operators not reachable from READ_CSV;
//  - attaches DATASET -> READ_CSV.
// When `node_map` is given it receives, for each code-graph node, the id of
// the pipeline node it became, or -1.
inline FilterResult filter_graph(const script::CodeGraph& g, const NodeVocabulary& vocab,
                                 const std::string& dataset_name, std::size_t max_nodes = kDefaultMaxNodes,
                                 std::vector<int>* node_map = nullptr) {
  const std::size_t n = g.nodes.size();
  if (node_map != nullptr) node_map->assign(n, -1);
  std::vector<std::optional<OperatorMatch>> op(n);
  bool has_estimator = false;
  bool has_read = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.nodes[i].kind != script::NodeKind::CallSite) continue;
    op[i] = match_operator(g.nodes[i].label, vocab);
    if (op[i]) {
      has_estimator = has_estimator || vocab.category(op[i]->id) == Category::Estimator;
      has_read = has_read || op[i]->id == kReadCsv;
    }
  }
  if (!has_estimator) return Rejected{RejectReason::NoEstimator};
  if (!has_read) return Rejected{RejectReason::NoReadCall};

  std::vector<std::vector<int>> succ(n);
  for (const auto& e : g.edges) {
    if (e.kind == script::EdgeKind::DataFlow) succ[static_cast<std::size_t>(e.src)].push_back(e.dst);
  }

  // Transitive reconnection: from each survivor, walk through removed nodes
  // until the next survivors.
  std::set<std::pair<int, int>> contracted;
  for (std::size_t a = 0; a < n; ++a) {
    if (!op[a]) continue;
    std::vector<bool> seen(n, false);
    std::vector<int> stack(succ[a].begin(), succ[a].end());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      if (op[static_cast<std::size_t>(v)]) {
        contracted.emplace(static_cast<int>(a), v);
      } else {
        for (int w : succ[static_cast<std::size_t>(v)]) stack.push_back(w);
      }
    }
  }

  detail::UnionFind uf(n);
  int first_read = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (op[i] && op[i]->id == kReadCsv) {
      if (first_read < 0) {
        first_read = static_cast<int>(i);
      } else {
        uf.unite(first_read, static_cast<int>(i));
      }
    }
  }
  // A method call joins the operator it is called on. The builder emits the
  // receiver's DataFlow edge first, so the first incoming edge names it.
  std::vector<int> first_input(n, -1);
  for (const auto& e : g.edges) {
    if (e.kind == script::EdgeKind::DataFlow && first_input[static_cast<std::size_t>(e.dst)] < 0) {
      first_input[static_cast<std::size_t>(e.dst)] = e.src;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!op[b] || !op[b]->method || first_input[b] < 0) continue;
    const auto& oa = op[static_cast<std::size_t>(first_input[b])];
    if (oa && oa->id == op[b]->id) uf.unite(first_input[b], static_cast<int>(b));
  }

  // Dense ids: DATASET 0, READ_CSV 1, then operators by first appearance.
  std::map<int, int> rep_to_id;
  const int read_rep = uf.find(first_read);
  rep_to_id[read_rep] = 1;
  std::vector<VocabId> types{kDataset, kReadCsv};
  for (std::size_t i = 0; i < n; ++i) {
    if (!op[i]) continue;
    const int rep = uf.find(static_cast<int>(i));
    if (rep_to_id.emplace(rep, static_cast<int>(types.size())).second) types.push_back(op[i]->id);
  }
  PipelineGraph out;
  out.graph_id = g.script_id;
  out.dataset_name = dataset_name;
  for (std::size_t i = 0; i < types.size(); ++i) out.nodes.push_back({static_cast<int>(i), types[i]});
  std::set<PipelineEdge> edges{{0, 1}};
  for (const auto& [a, b] : contracted) {
    const int s = rep_to_id.at(uf.find(a));
    const int d = rep_to_id.at(uf.find(b));
    if (s != d) edges.insert({s, d});
  }
  out.edges.assign(edges.begin(), edges.end());
  if (!is_acyclic(out.nodes.size(), out.edges)) return Rejected{RejectReason::Cycle};

  // Keep only what the data flows into.
  const auto keep = reachable_from(out, 0);
  std::vector<int> remap(out.nodes.size(), -1);
  PipelineGraph kept;
  kept.graph_id = out.graph_id;
  kept.dataset_name = out.dataset_name;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = static_cast<int>(kept.nodes.size());
    kept.nodes.push_back({remap[i], out.nodes[i].vocab_id});
  }
  for (const auto& e : out.edges) {
    const int s = remap[static_cast<std::size_t>(e.src)];
    const int d = remap[static_cast<std::size_t>(e.dst)];
    if (s >= 0 && d >= 0) kept.edges.push_back({s, d});
  }
  if (count_category(kept, vocab, Category::Estimator) == 0) return Rejected{RejectReason::NoEstimator};
  if (kept.nodes.size() > max_nodes) return Rejected{RejectReason::TooLarge};
  if (node_map != nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
      if (op[i]) (*node_map)[i] = remap[static_cast<std::size_t>(rep_to_id.at(uf.find(static_cast<int>(i))))];
    }
  }
  return kept;
}

struct FilteredCorpus {
  std::vector<PipelineGraph> graphs;
  FilterReport report;
};

inline FilteredCorpus filter_corpus(const std::vector<script::CodeGraph>& graphs, const NodeVocabulary& vocab,
                                    const DatasetSidecar& sidecar, std::size_t max_nodes = kDefaultMaxNodes) {
  FilteredCorpus out;
  for (const auto& g : graphs) {
    FilterReport r;
    r.scripts_in = 1;
    r.nodes_before = g.nodes.size();
    r.edges_before = g.edges.size();
    const std::string dataset = normalize_dataset_name(resolve_dataset_name(g, sidecar));
    auto result = filter_graph(g, vocab, dataset, max_nodes);
    if (auto* pg = std::get_if<PipelineGraph>(&result)) {
      r.graphs_out = 1;
      r.nodes_after = pg->nodes.size();
      r.edges_after = pg->edges.size();
      out.graphs.push_back(std::move(*pg));
    } else if (std::get<Rejected>(result).reason == RejectReason::NoEstimator) {
      r.rejected_no_estimator = 1;
    } else {
      r.rejected_other = 1;
    }
    out.report += r;
  }
  return out;
}

}  // namespace pipeforge::filter
