#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pipeforge/core/error.hpp"
#include "pipeforge/core/hash.hpp"
#include "pipeforge/core/text.hpp"
#include "pipeforge/filter/graph_filter.hpp"
#include "pipeforge/generator/model.hpp"

namespace pipeforge::generator {

struct TrainConfig {
  int epochs = 15;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint64_t seed = 0;
  int hidden = 32;
  int rounds = 2;
};

struct EpochLog {
  int epoch = 0;
  double mean_nll = 0.0;
  double seconds = 0.0;
};

struct TrainResult {
  GeneratorParams params;
  std::vector<EpochLog> log;
};

// Adam state over a flat parameter vector.
class Adam {
 public:
  Adam(std::size_t n, const TrainConfig& c) : c_(c), m_(n, 0.0), v_(n, 0.0) {}

  void step(std::vector<double>& x, const std::vector<double>& g) {
    ++t_;
    const double bc1 = 1.0 - std::pow(c_.beta1, t_);
    const double bc2 = 1.0 - std::pow(c_.beta2, t_);
    for (std::size_t i = 0; i < x.size(); ++i) {
      m_[i] = c_.beta1 * m_[i] + (1.0 - c_.beta1) * g[i];
      v_[i] = c_.beta2 * v_[i] + (1.0 - c_.beta2) * g[i] * g[i];
      x[i] -= c_.learning_rate * (m_[i] / bc1) / (std::sqrt(v_[i] / bc2) + c_.epsilon);
    }
  }

 private:
  TrainConfig c_;
  std::vector<double> m_, v_;
  int t_ = 0;
};

// Datasets that get a conditioning row: every named dataset in the corpus,
// sorted.
inline std::vector<std::string> corpus_datasets(const std::vector<GenerationTrace>& corpus) {
  std::set<std::string> names;
  for (const auto& t : corpus) {
    if (!t.dataset_name.empty() && t.dataset_name != filter::kUnknownDataset) names.insert(t.dataset_name);
  }
  return {names.begin(), names.end()};
}

// Teacher-forced training, one trace per update, traces shuffled each epoch.
// mean_nll is the average trace NLL seen during the epoch.
inline TrainResult train(const std::vector<GenerationTrace>& corpus, int vocab_size, const TrainConfig& c) {
  if (corpus.empty()) throw InvalidArgument("training corpus is empty");
  if (c.epochs < 0) throw InvalidArgument("epochs must be non-negative");
  ModelShape shape{vocab_size, c.hidden, c.rounds, corpus_datasets(corpus)};
  TrainResult out{GeneratorParams::initialize(shape, c.seed), {}};
  auto& params = out.params;
  Adam adam(params.size(), c);
  SplitMix64 order_rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (int epoch = 1; epoch <= c.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[order_rng.below(i)]);
    double total = 0.0;
    for (std::size_t idx : order) {
      const auto& t = corpus[idx];
      auto loss = trace_nll(t, params);
      if (!std::isfinite(loss.nll)) {
        throw DivergedLoss("non-finite loss on trace " + t.graph_id + " in epoch " + std::to_string(epoch));
      }
      total += loss.nll;
      adam.step(params.values(), loss.grad);
    }
    if (!params.all_finite()) throw DivergedLoss("non-finite weights after epoch " + std::to_string(epoch));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.log.push_back({epoch, total / static_cast<double>(corpus.size()), secs});
  }
  return out;
}

inline void write_loss_log(const std::vector<EpochLog>& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << "epoch,mean_nll,seconds\n";
  for (const auto& e : log) {
    out << e.epoch << ',' << text::format_number(e.mean_nll) << ',' << text::format_number(e.seconds) << '\n';
  }
}

}  // namespace pipeforge::generator
