#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "pipeforge/core/hash.hpp"
#include "pipeforge/filter/vocabulary.hpp"
#include "pipeforge/generator/generate.hpp"
#include "pipeforge/generator/train.hpp"

namespace testutil {

namespace filter = pipeforge::filter;
namespace generator = pipeforge::generator;
using pipeforge::SplitMix64;

using pipeforge::generator::Decision;
using pipeforge::generator::DecisionScorer;
using pipeforge::generator::GenerationTrace;
using pipeforge::generator::GeneratorParams;
using pipeforge::generator::ModelShape;
using pipeforge::generator::Step;
using pipeforge::generator::PipelineGraph;
using pipeforge::generator::PipelineEdge;

// Random valid pipeline graph with shuffled node ids. Every operator has at
// least one input from an earlier node in a hidden topological order.
inline PipelineGraph random_graph(SplitMix64& rng, int n_ops, int vocab_size) {
  const int n = n_ops + 2;
  std::vector<int> types{filter::kDataset, filter::kReadCsv};
  for (int i = 0; i < n_ops; ++i) {
    types.push_back(filter::kReservedCount + static_cast<int>(rng.below(static_cast<std::uint64_t>(vocab_size - 3))));
  }
  std::vector<std::pair<int, int>> edges{{0, 1}};
  for (int v = 2; v < n; ++v) {
    bool any = false;
    for (int u = 1; u < v; ++u) {
      if (rng.uniform() < 0.35) {
        edges.emplace_back(u, v);
        any = true;
      }
    }
    if (!any) edges.emplace_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(v - 1))), v);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n; i > 1; --i) std::swap(perm[static_cast<std::size_t>(i - 1)], perm[rng.below(static_cast<std::uint64_t>(i))]);
  PipelineGraph g;
  g.graph_id = "r";
  g.dataset_name = "d";
  g.nodes.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.nodes[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = {perm[static_cast<std::size_t>(i)], types[static_cast<std::size_t>(i)]};
  for (const auto& [s, d] : edges) g.edges.push_back({perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(d)]});
  for (int i = static_cast<int>(g.edges.size()); i > 1; --i) {
    std::swap(g.edges[static_cast<std::size_t>(i - 1)], g.edges[rng.below(static_cast<std::uint64_t>(i))]);
  }
  return g;
}

// True when `mapping` (new index -> old id) carries a onto b with identical
// labels and edge sets.
inline bool same_under(const PipelineGraph& a, const PipelineGraph& b, const std::vector<int>& mapping) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  std::vector<int> inverse(a.nodes.size(), -1);
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (b.nodes[i].vocab_id != a.nodes[static_cast<std::size_t>(mapping[i])].vocab_id) return false;
    inverse[static_cast<std::size_t>(mapping[i])] = static_cast<int>(i);
  }
  std::set<PipelineEdge> ea, eb(b.edges.begin(), b.edges.end());
  for (const auto& e : a.edges) ea.insert({inverse[static_cast<std::size_t>(e.src)], inverse[static_cast<std::size_t>(e.dst)]});
  return ea == eb;
}

inline GeneratorParams random_params(int vocab_size, int hidden, int rounds, std::vector<std::string> datasets,
                              std::uint64_t seed, double scale = 0.5) {
  GeneratorParams p(ModelShape{vocab_size, hidden, rounds, std::move(datasets)});
  SplitMix64 rng(seed);
  for (auto& x : p.values()) x = rng.uniform(-scale, scale);
  return p;
}

// Sums the probability of every leaf of the decision tree: natural stops, and
// the prefix mass at the point where the node cap truncates the process.
inline double enumerate_mass(DecisionScorer s, double prob, std::size_t max_nodes, int vocab_size, std::size_t& leaves) {
  switch (s.point()) {
    case Decision::Done:
      ++leaves;
      return prob;
    case Decision::AddNode: {
      if (s.state().size() >= max_nodes) {
        ++leaves;
        return prob;
      }
      double total = 0.0;
      for (int i = 0; i <= vocab_size; ++i) {
        DecisionScorer next = s;
        const double lp = next.apply(i == vocab_size ? Step::stop() : Step::add_node(i));
        total += enumerate_mass(next, prob * std::exp(lp), max_nodes, vocab_size, leaves);
      }
      return total;
    }
    case Decision::AddEdge: {
      double total = 0.0;
      for (bool yes : {false, true}) {
        if (yes && s.eligible_sources().empty()) continue;
        DecisionScorer next = s;
        const double lp = next.apply(yes ? Step::edge_yes() : Step::edge_no());
        total += enumerate_mass(next, prob * std::exp(lp), max_nodes, vocab_size, leaves);
      }
      return total;
    }
    case Decision::PickNode: {
      double total = 0.0;
      for (int u : s.eligible_sources()) {
        DecisionScorer next = s;
        const double lp = next.apply(Step::pick(u));
        total += enumerate_mass(next, prob * std::exp(lp), max_nodes, vocab_size, leaves);
      }
      return total;
    }
  }
  return 0.0;
}

// Largest violation of |analytic - numeric| <= 1e-4 * max(|analytic|, |numeric|) + 1e-9
// over every parameter coordinate, as a multiple of the allowed error; <= 1 passes.
inline double gradient_check_ratio(const GenerationTrace& t, GeneratorParams& p, double step = 1e-5) {
  const auto analytic = generator::trace_nll(t, p);
  double worst = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double x = p.values()[k];
    p.values()[k] = x + step;
    const double up = generator::trace_nll(t, p).nll;
    p.values()[k] = x - step;
    const double down = generator::trace_nll(t, p).nll;
    p.values()[k] = x;
    const double numeric = (up - down) / (2 * step);
    const double a = analytic.grad[k];
    const double allowed = 1e-4 * std::max(std::abs(a), std::abs(numeric)) + 1e-9;
    worst = std::max(worst, std::abs(a - numeric) / allowed);
  }
  return worst;
}

// The six-operator vocabulary used for gradient instances.
inline const filter::NodeVocabulary& gradient_vocab() {
  static const filter::NodeVocabulary v = filter::NodeVocabulary::from_entries(
      {{"a", filter::Category::Preprocessor},
       {"b", filter::Category::Estimator},
       {"c", filter::Category::Other},
       {"e", filter::Category::Estimator},
       {"f", filter::Category::Preprocessor},
       {"g", filter::Category::Other}});
  return v;
}

}  // namespace testutil
