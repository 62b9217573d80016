#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/error.hpp"
#include "pipeforge/core/task.hpp"
#include "pipeforge/filter/pipeline_graph.hpp"

namespace pipeforge::skeleton {

using filter::Category;
using filter::NodeVocabulary;
using filter::PipelineGraph;

// Linear pipeline: preprocessors in execution order, then one estimator.
struct PipelineSkeleton {
  std::string skeleton_id;
  std::vector<std::string> preprocessors;
  std::string estimator;
  double log_prob = 0.0;
  std::string source_graph_id;
  double budget_seconds = 0.0;

  friend bool operator==(const PipelineSkeleton&, const PipelineSkeleton&) = default;
};

// Topological order of the graph, ready nodes taken smallest (vocab_id, id)
// first.
inline std::vector<int> priority_topological_order(const PipelineGraph& g) {
  const auto adj = filter::adjacency(g);
  std::vector<int> indeg(g.nodes.size(), 0);
  for (const auto& e : g.edges) ++indeg[static_cast<std::size_t>(e.dst)];
  using Key = std::pair<int, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> ready;
  for (const auto& n : g.nodes) {
    if (indeg[static_cast<std::size_t>(n.id)] == 0) ready.emplace(n.vocab_id, n.id);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top().second;
    ready.pop();
    order.push_back(v);
    for (int w : adj.out[static_cast<std::size_t>(v)]) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.emplace(g.nodes[static_cast<std::size_t>(w)].vocab_id, w);
    }
  }
  if (order.size() != g.nodes.size()) throw InvalidGraph("graph has a cycle");
  return order;
}

// One skeleton per Estimator node: the Preprocessor nodes lying on some
// READ_CSV -> ... -> estimator path, in topological order, with consecutive
// repeats of one label collapsed. Skeletons follow estimator order in the
// same topological sweep.
inline std::vector<PipelineSkeleton> to_skeletons(const PipelineGraph& g, const NodeVocabulary& vocab,
                                                  double log_prob = 0.0) {
  int read = -1;
  for (const auto& n : g.nodes) {
    if (n.vocab_id == filter::kReadCsv) read = n.id;
  }
  if (read < 0) throw InvalidGraph("graph has no READ_CSV node");
  const auto order = priority_topological_order(g);
  const auto adj = filter::adjacency(g);
  const auto from_read = filter::reachable_from(g, read);
  std::vector<PipelineSkeleton> out;
  for (int e : order) {
    if (vocab.category(g.nodes[static_cast<std::size_t>(e)].vocab_id) != Category::Estimator) continue;
    // Nodes that reach the estimator.
    std::vector<bool> to_est(g.nodes.size(), false);
    std::vector<int> stack{e};
    to_est[static_cast<std::size_t>(e)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adj.in[static_cast<std::size_t>(v)]) {
        if (!to_est[static_cast<std::size_t>(u)]) {
          to_est[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    PipelineSkeleton s;
    s.estimator = vocab.label(g.nodes[static_cast<std::size_t>(e)].vocab_id);
    s.log_prob = log_prob;
    s.source_graph_id = g.graph_id;
    s.skeleton_id = g.graph_id + "/" + std::to_string(out.size() + 1);
    for (int v : order) {
      const auto vid = g.nodes[static_cast<std::size_t>(v)].vocab_id;
      if (v == e || !from_read[static_cast<std::size_t>(v)] || !to_est[static_cast<std::size_t>(v)]) continue;
      if (vocab.category(vid) != Category::Preprocessor) continue;
      const auto& label = vocab.label(vid);
      if (s.preprocessors.empty() || s.preprocessors.back() != label) s.preprocessors.push_back(label);
    }
    out.push_back(std::move(s));
  }
  if (out.empty()) throw NoEstimator("graph '" + g.graph_id + "' has no estimator node");
  return out;
}

struct CapabilityRegistry {
  std::string optimizer_name;
  std::set<std::string> preprocessors;
  std::set<std::string> estimators;
  std::map<std::string, std::string> rename;
  std::map<std::string, std::set<Task>> estimator_tasks;  // estimators not listed fit either task

  std::string renamed(const std::string& label) const {
    auto it = rename.find(label);
    return it == rename.end() ? label : it->second;
  }

  bool supports(const std::string& estimator, Task task) const {
    auto it = estimator_tasks.find(estimator);
    return it == estimator_tasks.end() || it->second.count(task) > 0;
  }

  static CapabilityRegistry from_json(const nlohmann::json& j) {
    CapabilityRegistry r;
    try {
      r.optimizer_name = j.at("optimizer").get<std::string>();
      for (const auto& p : j.at("preprocessors")) r.preprocessors.insert(p.get<std::string>());
      for (const auto& e : j.at("estimators")) r.estimators.insert(e.get<std::string>());
      if (j.contains("rename")) r.rename = j.at("rename").get<std::map<std::string, std::string>>();
      if (j.contains("estimator_tasks")) {
        for (const auto& [est, tasks] : j.at("estimator_tasks").items()) {
          auto& set = r.estimator_tasks[est];
          for (const auto& t : tasks) set.insert(parse_task(t.get<std::string>()));
          if (set.empty()) throw FormatError("estimator '" + est + "' lists no task");
        }
      }
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(std::string("malformed registry: ") + ex.what());
    }
    if (r.optimizer_name.empty()) throw FormatError("registry has no optimizer name");
    if (r.preprocessors.empty() || r.estimators.empty()) throw FormatError("registry operator sets must be non-empty");
    for (const auto& [from, to] : r.rename) {
      if (!r.preprocessors.count(from) && !r.estimators.count(from)) {
        throw FormatError("registry renames unknown operator '" + from + "'");
      }
    }
    for (const auto& [est, tasks] : r.estimator_tasks) {
      if (!r.estimators.count(est)) throw FormatError("registry assigns tasks to unknown estimator '" + est + "'");
    }
    return r;
  }

  static CapabilityRegistry load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open registry " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError("registry " + path + " is not valid JSON: " + ex.what());
    }
    return from_json(j);
  }
};

struct Accepted {
  PipelineSkeleton skeleton;         // operator names renamed for the optimizer
  std::vector<std::string> dropped;  // unsupported preprocessors, canonical labels
};

struct Rejected {
  std::string reason;
};

using Validation = std::variant<Accepted, Rejected>;

// Unsupported estimators reject the skeleton, as does an estimator the
// registry ties to the other task; unsupported preprocessors are dropped and
// listed.
inline Validation validate_against(const PipelineSkeleton& s, const CapabilityRegistry& r,
                                   std::optional<Task> task = std::nullopt) {
  if (!r.estimators.count(s.estimator)) return Rejected{"estimator_unsupported"};
  if (task && !r.supports(s.estimator, *task)) return Rejected{"task_mismatch"};
  Accepted a{s, {}};
  a.skeleton.preprocessors.clear();
  for (const auto& p : s.preprocessors) {
    if (!r.preprocessors.count(p)) {
      a.dropped.push_back(p);
      continue;
    }
    const auto name = r.renamed(p);
    if (a.skeleton.preprocessors.empty() || a.skeleton.preprocessors.back() != name) a.skeleton.preprocessors.push_back(name);
  }
  a.skeleton.estimator = r.renamed(s.estimator);
  return a;
}

// Merges skeletons with identical preprocessors and estimator (keeping the
// higher log_prob) and sorts by log_prob descending. Equal scores keep input
// order.
inline std::vector<PipelineSkeleton> dedupe_rank(const std::vector<PipelineSkeleton>& in) {
  std::vector<PipelineSkeleton> out;
  std::map<std::pair<std::vector<std::string>, std::string>, std::size_t> index;
  for (const auto& s : in) {
    auto [it, fresh] = index.emplace(std::pair(s.preprocessors, s.estimator), out.size());
    if (fresh) {
      out.push_back(s);
    } else if (s.log_prob > out[it->second].log_prob) {
      out[it->second] = s;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PipelineSkeleton& a, const PipelineSkeleton& b) { return a.log_prob > b.log_prob; });
  return out;
}

// The skeleton file handed to the hyperparameter optimizer.
struct SkeletonDocument {
  static constexpr int kVersion = 1;
  std::string dataset;
  Task task = Task::Classification;
  std::vector<PipelineSkeleton> skeletons;
  std::string registry;

  friend bool operator==(const SkeletonDocument& a, const SkeletonDocument& b) {
    if (a.dataset != b.dataset || a.task != b.task || a.registry != b.registry) return false;
    if (a.skeletons.size() != b.skeletons.size()) return false;
    for (std::size_t i = 0; i < a.skeletons.size(); ++i) {
      const auto& x = a.skeletons[i];
      const auto& y = b.skeletons[i];
      if (x.skeleton_id != y.skeleton_id || x.preprocessors != y.preprocessors || x.estimator != y.estimator ||
          x.log_prob != y.log_prob || x.budget_seconds != y.budget_seconds) {
        return false;
      }
    }
    return true;
  }
};

inline nlohmann::ordered_json to_json(const SkeletonDocument& d) {
  nlohmann::ordered_json j;
  j["version"] = SkeletonDocument::kVersion;
  j["dataset"] = d.dataset;
  j["task"] = to_string(d.task);
  auto& list = j["skeletons"] = nlohmann::ordered_json::array();
  for (const auto& s : d.skeletons) {
    list.push_back({{"id", s.skeleton_id},
                    {"preprocessors", s.preprocessors},
                    {"estimator", s.estimator},
                    {"log_prob", s.log_prob},
                    {"budget_seconds", s.budget_seconds}});
  }
  j["registry"] = d.registry;
  return j;
}

// Strict reader: exact key sets, version 1, typed fields.
inline SkeletonDocument skeleton_document_from_json(const nlohmann::json& j) {
  auto require_keys = [](const nlohmann::json& obj, std::set<std::string> keys, const char* what) {
    if (!obj.is_object()) throw FormatError(std::string(what) + " is not an object");
    std::set<std::string> got;
    for (const auto& [k, v] : obj.items()) got.insert(k);
    if (got != keys) throw FormatError(std::string(what) + " has unexpected or missing keys");
  };
  require_keys(j, {"version", "dataset", "task", "skeletons", "registry"}, "skeleton document");
  try {
    if (j.at("version").get<int>() != SkeletonDocument::kVersion) throw FormatError("unsupported skeleton version");
    SkeletonDocument d;
    d.dataset = j.at("dataset").get<std::string>();
    d.task = parse_task(j.at("task").get<std::string>());
    d.registry = j.at("registry").get<std::string>();
    for (const auto& s : j.at("skeletons")) {
      require_keys(s, {"id", "preprocessors", "estimator", "log_prob", "budget_seconds"}, "skeleton");
      PipelineSkeleton k;
      k.skeleton_id = s.at("id").get<std::string>();
      k.preprocessors = s.at("preprocessors").get<std::vector<std::string>>();
      k.estimator = s.at("estimator").get<std::string>();
      k.log_prob = s.at("log_prob").get<double>();
      k.budget_seconds = s.at("budget_seconds").get<double>();
      if (k.log_prob > 0) throw FormatError("log_prob must be <= 0");
      if (k.budget_seconds < 0) throw FormatError("budget_seconds must be >= 0");
      d.skeletons.push_back(std::move(k));
    }
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed skeleton document: ") + ex.what());
  }
}

}  // namespace pipeforge::skeleton
