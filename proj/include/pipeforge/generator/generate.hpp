#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/error.hpp"
#include "pipeforge/core/hash.hpp"
#include "pipeforge/filter/pipeline_graph.hpp"
#include "pipeforge/generator/model.hpp"

namespace pipeforge::generator {

enum class GenerationMode { Greedy, Sampled };

struct GenerateOptions {
  std::size_t k = 1;
  std::size_t max_nodes = 16;
  GenerationMode mode = GenerationMode::Greedy;
  std::uint64_t seed = 0;
  std::size_t max_retries = 50;   // extra attempts beyond k
  bool discard_invalid = true;    // false keeps invalid graphs, flagged
  std::function<bool(const PipelineGraph&)> accept;  // extra validity test, e.g. skeleton mappability
};

struct GeneratedGraph {
  PipelineGraph graph;
  double log_prob = 0.0;
  std::size_t decisions = 0;
  bool valid = true;
  std::string invalid_reason;

  double normalized_score() const { return decisions == 0 ? log_prob : log_prob / static_cast<double>(decisions); }
};

struct GenerationResult {
  std::string dataset_name;
  std::vector<GeneratedGraph> graphs;
  double wall_seconds = 0.0;
};

// Runs the decision process from the DATASET -> READ_CSV seed. `choose`
// maps a probability vector to an option index. Once the graph holds
// max_nodes nodes the stop decision is taken, scored by its probability.
template <typename Choose>
GeneratedGraph run_generation(const GeneratorParams& p, int dataset_row, std::size_t max_nodes, Choose&& choose) {
  DecisionScorer scorer(p, dataset_row);
  double lp = 0.0;
  while (scorer.point() != Decision::Done) {
    switch (scorer.point()) {
      case Decision::AddNode: {
        if (scorer.state().size() >= max_nodes) {
          lp += scorer.apply(Step::stop());
          break;
        }
        const std::size_t i = choose(scorer.distribution());
        const int vsize = p.shape().vocab_size;
        lp += scorer.apply(static_cast<int>(i) == vsize ? Step::stop() : Step::add_node(static_cast<int>(i)));
        break;
      }
      case Decision::AddEdge: {
        if (scorer.eligible_sources().empty()) {
          lp += scorer.apply(Step::edge_no());
          break;
        }
        lp += scorer.apply(choose(scorer.distribution()) == 1 ? Step::edge_yes() : Step::edge_no());
        break;
      }
      case Decision::PickNode: {
        const auto eligible = scorer.eligible_sources();
        lp += scorer.apply(Step::pick(eligible[choose(scorer.distribution())]));
        break;
      }
      case Decision::Done:
        break;
    }
  }
  GeneratedGraph out;
  const auto& s = scorer.state();
  for (std::size_t i = 0; i < s.size(); ++i) out.graph.nodes.push_back({static_cast<int>(i), s.types[i]});
  out.graph.edges = s.edges;
  out.log_prob = lp;
  out.decisions = scorer.decisions();
  return out;
}

inline std::size_t argmax_choice(const std::vector<double>& probs) {
  return static_cast<std::size_t>(std::max_element(probs.begin(), probs.end()) - probs.begin());
}

inline std::size_t sample_choice(const std::vector<double>& probs, SplitMix64& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  // Rounding left u past the total: take the last option with mass.
  for (std::size_t i = probs.size(); i > 0; --i) {
    if (probs[i - 1] > 0) return i - 1;
  }
  return 0;
}

// Reason a generated graph is unusable, or empty when it is fine: pipeline
// graph invariants, every node fed from DATASET, at least one estimator.
inline std::string generated_graph_problem(const PipelineGraph& g, const filter::NodeVocabulary& vocab,
                                           std::size_t max_nodes) {
  if (auto why = filter::validate(g, vocab, max_nodes); !why.empty()) return why;
  const auto reach = filter::reachable_from(g, 0);
  if (std::find(reach.begin(), reach.end(), false) != reach.end()) return "node not reachable from DATASET";
  if (filter::count_category(g, vocab, filter::Category::Estimator) == 0) return "no estimator";
  return {};
}

// Top-K conditional generation. Greedy mode takes the argmax decision path
// first and fills the remaining slots by sampling with seed 0; Sampled mode
// samples every candidate. Candidates are deduplicated by canonical decision
// trace and the whole call makes at most k + max_retries attempts.
inline GenerationResult generate(const GeneratorParams& p, const filter::NodeVocabulary& vocab,
                                 const std::string& dataset_name, const GenerateOptions& o) {
  if (o.k < 1) throw InvalidArgument("K must be at least 1");
  if (o.max_nodes < 2) throw InvalidArgument("max_nodes must be at least 2");
  if (static_cast<std::size_t>(p.shape().vocab_size) != vocab.size()) {
    throw VocabMismatch("model vocabulary has " + std::to_string(p.shape().vocab_size) + " entries, vocabulary file " +
                        std::to_string(vocab.size()));
  }
  const auto start = std::chrono::steady_clock::now();
  const int row = p.dataset_row(dataset_name);
  GenerationResult out;
  out.dataset_name = dataset_name;
  SplitMix64 rng(o.mode == GenerationMode::Greedy ? 0 : o.seed);
  std::set<std::string> seen;
  const std::size_t attempts = o.k + o.max_retries;
  for (std::size_t a = 0; a < attempts && out.graphs.size() < o.k; ++a) {
    GeneratedGraph cand = (o.mode == GenerationMode::Greedy && a == 0)
                              ? run_generation(p, row, o.max_nodes, argmax_choice)
                              : run_generation(p, row, o.max_nodes,
                                               [&](const std::vector<double>& pr) { return sample_choice(pr, rng); });
    cand.graph.dataset_name = dataset_name;
    cand.invalid_reason = generated_graph_problem(cand.graph, vocab, o.max_nodes);
    if (cand.invalid_reason.empty() && o.accept && !o.accept(cand.graph)) cand.invalid_reason = "rejected by the caller";
    cand.valid = cand.invalid_reason.empty();
    if (!cand.valid && o.discard_invalid) continue;
    const std::string key =
        cand.valid ? to_string(canonicalize_trace(cand.graph, vocab).steps) : "raw:" + to_json(cand.graph).dump();
    if (!seen.insert(key).second) continue;
    out.graphs.push_back(std::move(cand));
  }
  if (out.graphs.empty()) {
    throw NoValidGraph("no valid graph for dataset '" + dataset_name + "' after " + std::to_string(attempts) +
                       " attempts");
  }
  std::stable_sort(out.graphs.begin(), out.graphs.end(),
                   [](const GeneratedGraph& a, const GeneratedGraph& b) { return a.log_prob > b.log_prob; });
  for (std::size_t i = 0; i < out.graphs.size(); ++i) {
    out.graphs[i].graph.graph_id = dataset_name + "#" + std::to_string(i + 1);
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// Deterministic serialization (wall time left out).
inline nlohmann::ordered_json to_json(const GenerationResult& r) {
  nlohmann::ordered_json graphs = nlohmann::ordered_json::array();
  for (const auto& g : r.graphs) {
    graphs.push_back({{"graph", filter::to_json(g.graph)},
                      {"log_prob", g.log_prob},
                      {"normalized_score", g.normalized_score()},
                      {"valid", g.valid}});
  }
  return {{"dataset_name", r.dataset_name}, {"graphs", graphs}};
}

}  // namespace pipeforge::generator
