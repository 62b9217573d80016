#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pipeforge/core/error.hpp"
#include "pipeforge/generator/params.hpp"
#include "pipeforge/generator/trace.hpp"

namespace pipeforge::generator {

// Graph under construction: node types in insertion order and directed edges.
struct GraphState {
  std::vector<VocabId> types;
  std::vector<PipelineEdge> edges;
  int dataset_row = -1;  // conditioning row for node 0, -1 when unknown

  static GraphState seed(int dataset_row = -1) { return {{filter::kDataset, filter::kReadCsv}, {{0, 1}}, dataset_row}; }
  std::size_t size() const { return types.size(); }
};

namespace detail {

inline Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& x) { return 1.0 / (1.0 + (-x).exp()); }

inline double log_sigmoid(double x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); }

inline Eigen::VectorXd log_softmax(const Eigen::VectorXd& logits) {
  const double m = logits.maxCoeff();
  const double lse = m + std::log((logits.array() - m).exp().sum());
  return logits.array() - lse;
}

}  // namespace detail

// Forward pass of the message-passing rounds plus the values the backward
// pass needs. Node embeddings are columns.
struct Propagation {
  struct Round {
    Eigen::MatrixXd h_in;     // h x n
    Eigen::MatrixXd pair;     // 2h x E, [h_src; h_dst]
    Eigen::MatrixXd hid_fwd;  // h x E, hidden layer of the message to dst
    Eigen::MatrixXd hid_bwd;  // h x E, hidden layer of the message to src
    Eigen::MatrixXd agg;      // h x n
    Eigen::ArrayXXd z, r, cand, un_h;
  };
  Eigen::MatrixXd h0;
  std::vector<Round> rounds;
  Eigen::MatrixXd h;  // final node embeddings
  Eigen::ArrayXXd gate, proj;
  Eigen::VectorXd graph;  // h_G, size 2h
};

inline Propagation propagate(const GeneratorParams& p, const GraphState& s) {
  const int hd = p.shape().hidden;
  const auto n = static_cast<Eigen::Index>(s.size());
  const auto ne = static_cast<Eigen::Index>(s.edges.size());
  Propagation f;
  f.h0.resize(hd, n);
  const auto emb = p.matrix(kTypeEmbedding);
  for (Eigen::Index v = 0; v < n; ++v) {
    const int t = s.types[static_cast<std::size_t>(v)];
    if (t < 0 || t >= p.shape().vocab_size) throw VocabMismatch("node type " + std::to_string(t) + " outside the model vocabulary");
    f.h0.col(v) = emb.row(t).transpose();
  }
  if (s.dataset_row >= 0 && n > 0) f.h0.col(0) += p.matrix(kDatasetEmbedding).row(s.dataset_row).transpose();

  const auto w1 = p.matrix(kMsgW1);
  const auto b1 = p.vector(kMsgB1);
  const auto dir = p.vector(kMsgDirection);
  const auto w2 = p.matrix(kMsgW2);
  const auto b2 = p.vector(kMsgB2);
  Eigen::MatrixXd h = f.h0;
  for (int round = 0; round < p.shape().rounds; ++round) {
    Propagation::Round c;
    c.h_in = h;
    c.pair.resize(2 * hd, ne);
    for (Eigen::Index e = 0; e < ne; ++e) {
      const auto& edge = s.edges[static_cast<std::size_t>(e)];
      c.pair.col(e).head(hd) = h.col(edge.src);
      c.pair.col(e).tail(hd) = h.col(edge.dst);
    }
    const Eigen::MatrixXd base = (w1 * c.pair).colwise() + b1;
    c.hid_fwd = (base.colwise() + dir).array().tanh().matrix();
    c.hid_bwd = (base.colwise() - dir).array().tanh().matrix();
    const Eigen::MatrixXd m_fwd = (w2 * c.hid_fwd).colwise() + b2;
    const Eigen::MatrixXd m_bwd = (w2 * c.hid_bwd).colwise() + b2;
    c.agg = Eigen::MatrixXd::Zero(hd, n);
    for (Eigen::Index e = 0; e < ne; ++e) {
      const auto& edge = s.edges[static_cast<std::size_t>(e)];
      c.agg.col(edge.dst) += m_fwd.col(e);
      c.agg.col(edge.src) += m_bwd.col(e);
    }
    c.z = detail::sigmoid(((p.matrix(kGruWz) * c.agg + p.matrix(kGruUz) * h).colwise() + p.vector(kGruBz)).array());
    c.r = detail::sigmoid(((p.matrix(kGruWr) * c.agg + p.matrix(kGruUr) * h).colwise() + p.vector(kGruBr)).array());
    c.un_h = (p.matrix(kGruUn) * h).array();
    c.cand = (((p.matrix(kGruWn) * c.agg).colwise() + p.vector(kGruBn)).array() + c.r * c.un_h).tanh();
    h = ((1.0 - c.z) * c.cand + c.z * h.array()).matrix();
    f.rounds.push_back(std::move(c));
  }
  f.h = h;
  f.gate = detail::sigmoid(((p.matrix(kReadoutGateW) * h).colwise() + p.vector(kReadoutGateB)).array());
  f.proj = ((p.matrix(kReadoutProjW) * h).colwise() + p.vector(kReadoutProjB)).array();
  f.graph = (f.gate * f.proj).rowwise().sum().matrix();
  return f;
}

// Accumulates into `grad` the gradient of a loss whose partial derivatives
// with respect to the final node embeddings and h_G are `dh` and `dgraph`.
inline void backpropagate(const GeneratorParams& p, const GraphState& s, const Propagation& f, Eigen::MatrixXd dh,
                          const Eigen::VectorXd& dgraph, std::vector<double>& grad) {
  const int hd = p.shape().hidden;
  const auto n = static_cast<Eigen::Index>(s.size());
  const auto ne = static_cast<Eigen::Index>(s.edges.size());

  const Eigen::ArrayXXd dgate_pre = (f.proj.colwise() * dgraph.array()) * f.gate * (1.0 - f.gate);
  const Eigen::ArrayXXd dproj = f.gate.colwise() * dgraph.array();
  p.matrix_in(grad, kReadoutGateW) += dgate_pre.matrix() * f.h.transpose();
  p.vector_in(grad, kReadoutGateB) += dgate_pre.rowwise().sum().matrix();
  p.matrix_in(grad, kReadoutProjW) += dproj.matrix() * f.h.transpose();
  p.vector_in(grad, kReadoutProjB) += dproj.rowwise().sum().matrix();
  dh += p.matrix(kReadoutGateW).transpose() * dgate_pre.matrix() + p.matrix(kReadoutProjW).transpose() * dproj.matrix();

  for (auto it = f.rounds.rbegin(); it != f.rounds.rend(); ++it) {
    const auto& c = *it;
    const Eigen::ArrayXXd dout = dh.array();
    Eigen::MatrixXd dprev = (dout * c.z).matrix();
    const Eigen::MatrixXd dcand_pre = (dout * (1.0 - c.z) * (1.0 - c.cand.square())).matrix();
    const Eigen::MatrixXd dz_pre = (dout * (c.h_in.array() - c.cand) * c.z * (1.0 - c.z)).matrix();
    const Eigen::MatrixXd dun_h = (dcand_pre.array() * c.r).matrix();
    const Eigen::MatrixXd dr_pre = (dcand_pre.array() * c.un_h * c.r * (1.0 - c.r)).matrix();

    p.matrix_in(grad, kGruWn) += dcand_pre * c.agg.transpose();
    p.vector_in(grad, kGruBn) += dcand_pre.rowwise().sum();
    p.matrix_in(grad, kGruUn) += dun_h * c.h_in.transpose();
    p.matrix_in(grad, kGruWz) += dz_pre * c.agg.transpose();
    p.matrix_in(grad, kGruUz) += dz_pre * c.h_in.transpose();
    p.vector_in(grad, kGruBz) += dz_pre.rowwise().sum();
    p.matrix_in(grad, kGruWr) += dr_pre * c.agg.transpose();
    p.matrix_in(grad, kGruUr) += dr_pre * c.h_in.transpose();
    p.vector_in(grad, kGruBr) += dr_pre.rowwise().sum();
    dprev += p.matrix(kGruUn).transpose() * dun_h + p.matrix(kGruUz).transpose() * dz_pre +
             p.matrix(kGruUr).transpose() * dr_pre;
    const Eigen::MatrixXd dagg = p.matrix(kGruWn).transpose() * dcand_pre + p.matrix(kGruWz).transpose() * dz_pre +
                                 p.matrix(kGruWr).transpose() * dr_pre;

    Eigen::MatrixXd dm_fwd(hd, ne), dm_bwd(hd, ne);
    for (Eigen::Index e = 0; e < ne; ++e) {
      const auto& edge = s.edges[static_cast<std::size_t>(e)];
      dm_fwd.col(e) = dagg.col(edge.dst);
      dm_bwd.col(e) = dagg.col(edge.src);
    }
    p.matrix_in(grad, kMsgW2) += dm_fwd * c.hid_fwd.transpose() + dm_bwd * c.hid_bwd.transpose();
    p.vector_in(grad, kMsgB2) += dm_fwd.rowwise().sum() + dm_bwd.rowwise().sum();
    const auto w2t = p.matrix(kMsgW2).transpose();
    const Eigen::MatrixXd dpre_fwd = ((w2t * dm_fwd).array() * (1.0 - c.hid_fwd.array().square())).matrix();
    const Eigen::MatrixXd dpre_bwd = ((w2t * dm_bwd).array() * (1.0 - c.hid_bwd.array().square())).matrix();
    const Eigen::MatrixXd dpre = dpre_fwd + dpre_bwd;
    p.matrix_in(grad, kMsgW1) += dpre * c.pair.transpose();
    p.vector_in(grad, kMsgB1) += dpre.rowwise().sum();
    p.vector_in(grad, kMsgDirection) += dpre_fwd.rowwise().sum() - dpre_bwd.rowwise().sum();
    const Eigen::MatrixXd dpair = p.matrix(kMsgW1).transpose() * dpre;
    for (Eigen::Index e = 0; e < ne; ++e) {
      const auto& edge = s.edges[static_cast<std::size_t>(e)];
      dprev.col(edge.src) += dpair.col(e).head(hd);
      dprev.col(edge.dst) += dpair.col(e).tail(hd);
    }
    dh = std::move(dprev);
  }

  auto demb = p.matrix_in(grad, kTypeEmbedding);
  for (Eigen::Index v = 0; v < n; ++v) demb.row(s.types[static_cast<std::size_t>(v)]) += dh.col(v).transpose();
  if (s.dataset_row >= 0 && n > 0) p.matrix_in(grad, kDatasetEmbedding).row(s.dataset_row) += dh.col(0).transpose();
}

enum class Decision { AddNode, AddEdge, PickNode, Done };

// Walks the decision process of the generator one step at a time, scoring
// each step and optionally accumulating the gradient of its negative
// log-probability. Embeddings are recomputed after every structural change
// (a node or an edge added); decisions between two changes share one
// forward pass.
class DecisionScorer {
 public:
  DecisionScorer(const GeneratorParams& p, int dataset_row, std::vector<double>* grad = nullptr)
      : p_(p), state_(GraphState::seed(dataset_row)), grad_(grad) {
    if (dataset_row >= static_cast<int>(p.shape().datasets.size())) throw InvalidArgument("dataset row out of range");
  }

  Decision point() const { return point_; }
  const GraphState& state() const { return state_; }
  std::size_t decisions() const { return decisions_; }

  // Nodes the newest node may still receive an edge from.
  std::vector<int> eligible_sources() const {
    std::vector<int> out;
    const int v = static_cast<int>(state_.size()) - 1;
    std::vector<bool> linked(state_.size(), false);
    for (const auto& e : state_.edges) {
      if (e.dst == v) linked[static_cast<std::size_t>(e.src)] = true;
    }
    for (int u = 0; u < v; ++u) {
      if (!linked[static_cast<std::size_t>(u)]) out.push_back(u);
    }
    return out;
  }

  // Probabilities of the options at the current point: |V|+1 entries (STOP
  // last) for AddNode, {no, yes} for AddEdge, one per eligible_sources()
  // entry for PickNode.
  std::vector<double> distribution() {
    const Eigen::VectorXd lp = log_probs();
    std::vector<double> out(static_cast<std::size_t>(lp.size()));
    for (Eigen::Index i = 0; i < lp.size(); ++i) out[static_cast<std::size_t>(i)] = std::exp(lp[i]);
    return out;
  }

  // Applies a step and returns its log-probability.
  double apply(const Step& step) {
    switch (point_) {
      case Decision::Done:
        throw InvalidTrace("step after StopNodes");
      case Decision::AddNode: {
        const int vsize = p_.shape().vocab_size;
        int option = vsize;
        if (step.kind == StepKind::AddNode) {
          if (step.value < 0 || step.value >= vsize) {
            throw VocabMismatch("AddNode(" + std::to_string(step.value) + ") outside the model vocabulary");
          }
          option = step.value;
        } else if (step.kind != StepKind::StopNodes) {
          throw InvalidTrace("expected AddNode or StopNodes, got " + to_string(step));
        }
        const double lp = score(option);
        flush();
        if (option == vsize) {
          point_ = Decision::Done;
        } else {
          state_.types.push_back(option);
          point_ = Decision::AddEdge;
        }
        return lp;
      }
      case Decision::AddEdge: {
        if (step.kind != StepKind::AddEdgeYes && step.kind != StepKind::AddEdgeNo) {
          throw InvalidTrace("expected an edge decision, got " + to_string(step));
        }
        const bool yes = step.kind == StepKind::AddEdgeYes;
        if (eligible_sources().empty()) {
          if (yes) throw InvalidTrace("AddEdgeYes with no node left to connect");
          ++decisions_;
          point_ = Decision::AddNode;
          return 0.0;
        }
        const double lp = score(yes ? 1 : 0);
        point_ = yes ? Decision::PickNode : Decision::AddNode;
        return lp;
      }
      case Decision::PickNode: {
        if (step.kind != StepKind::PickNode) throw InvalidTrace("expected PickNode, got " + to_string(step));
        const auto eligible = eligible_sources();
        const auto it = std::find(eligible.begin(), eligible.end(), step.value);
        if (it == eligible.end()) throw InvalidTrace("PickNode(" + std::to_string(step.value) + ") is not a valid source");
        const double lp = score(static_cast<int>(it - eligible.begin()));
        flush();
        state_.edges.push_back({step.value, static_cast<int>(state_.size()) - 1});
        point_ = Decision::AddEdge;
        return lp;
      }
    }
    return 0.0;
  }

  // Pushes any pending gradient through the current forward pass.
  void flush() {
    if (fwd_ && grad_ != nullptr && pending_) backpropagate(p_, state_, *fwd_, dh_, dgraph_, *grad_);
    fwd_.reset();
    pending_ = false;
  }

 private:
  const Propagation& forward() {
    if (!fwd_) {
      fwd_ = propagate(p_, state_);
      dh_ = Eigen::MatrixXd::Zero(fwd_->h.rows(), fwd_->h.cols());
      dgraph_ = Eigen::VectorXd::Zero(fwd_->graph.size());
    }
    return *fwd_;
  }

  Eigen::VectorXd logits() {
    const auto& f = forward();
    const int hd = p_.shape().hidden;
    switch (point_) {
      case Decision::AddNode:
        return p_.matrix(kAddNodeW) * f.graph + p_.vector(kAddNodeB);
      case Decision::AddEdge: {
        const auto w = p_.matrix(kAddEdgeW).row(0);
        const double l = w.head(2 * hd).dot(f.graph) + w.tail(hd).dot(f.h.col(f.h.cols() - 1)) + p_.vector(kAddEdgeB)[0];
        return Eigen::Vector2d(0.0, l);
      }
      case Decision::PickNode: {
        const auto eligible = eligible_sources();
        const Eigen::VectorXd mv = p_.matrix(kPickM) * f.h.col(f.h.cols() - 1);
        Eigen::VectorXd out(static_cast<Eigen::Index>(eligible.size()));
        for (std::size_t i = 0; i < eligible.size(); ++i) {
          const auto hu = f.h.col(eligible[i]);
          out[static_cast<Eigen::Index>(i)] = hu.dot(mv) + hu.dot(p_.vector(kPickW));
        }
        return out;
      }
      case Decision::Done:
        break;
    }
    throw InvalidTrace("no decision pending");
  }

  // AddEdge is a two-way softmax over {0, l}, which is the sigmoid of l.
  Eigen::VectorXd log_probs() {
    if (point_ == Decision::AddEdge && eligible_sources().empty()) return Eigen::Vector2d(0.0, -INFINITY);
    return detail::log_softmax(logits());
  }

  double score(int option) {
    const Eigen::VectorXd lp = log_probs();
    ++decisions_;
    if (grad_ != nullptr) accumulate(lp, option);
    return lp[option];
  }

  // d(-log p[option]) / d logits = softmax - onehot, pushed into the head
  // weights and into dh_ / dgraph_.
  void accumulate(const Eigen::VectorXd& lp, int option) {
    const auto& f = *fwd_;
    const int hd = p_.shape().hidden;
    Eigen::VectorXd dl = lp.array().exp();
    dl[option] -= 1.0;
    pending_ = true;
    auto& g = *grad_;
    switch (point_) {
      case Decision::AddNode:
        p_.matrix_in(g, kAddNodeW) += dl * f.graph.transpose();
        p_.vector_in(g, kAddNodeB) += dl;
        dgraph_ += p_.matrix(kAddNodeW).transpose() * dl;
        break;
      case Decision::AddEdge: {
        const double d = dl[1];
        const Eigen::Index v = f.h.cols() - 1;
        auto w = p_.matrix_in(g, kAddEdgeW).row(0);
        w.head(2 * hd) += d * f.graph.transpose();
        w.tail(hd) += d * f.h.col(v).transpose();
        p_.vector_in(g, kAddEdgeB)[0] += d;
        const auto pw = p_.matrix(kAddEdgeW).row(0);
        dgraph_ += d * pw.head(2 * hd).transpose();
        dh_.col(v) += d * pw.tail(hd).transpose();
        break;
      }
      case Decision::PickNode: {
        const auto eligible = eligible_sources();
        const Eigen::Index v = f.h.cols() - 1;
        const auto m = p_.matrix(kPickM);
        const Eigen::VectorXd mv = m * f.h.col(v);
        const auto wp = p_.vector(kPickW);
        auto gm = p_.matrix_in(g, kPickM);
        auto gw = p_.vector_in(g, kPickW);
        for (std::size_t i = 0; i < eligible.size(); ++i) {
          const double d = dl[static_cast<Eigen::Index>(i)];
          const auto hu = f.h.col(eligible[i]);
          gm += d * hu * f.h.col(v).transpose();
          gw += d * hu;
          dh_.col(eligible[i]) += d * (mv + wp);
          dh_.col(v) += d * (m.transpose() * hu);
        }
        break;
      }
      case Decision::Done:
        break;
    }
  }

  const GeneratorParams& p_;
  GraphState state_;
  std::vector<double>* grad_;
  Decision point_ = Decision::AddNode;
  std::size_t decisions_ = 0;
  std::optional<Propagation> fwd_;
  Eigen::MatrixXd dh_;
  Eigen::VectorXd dgraph_;
  bool pending_ = false;
};

struct TraceLoss {
  double nll = 0.0;
  std::vector<double> grad;
};

inline double trace_log_prob(const GenerationTrace& t, const GeneratorParams& p) {
  DecisionScorer scorer(p, p.dataset_row(t.dataset_name));
  double lp = 0.0;
  for (const auto& s : t.steps) lp += scorer.apply(s);
  if (scorer.point() != Decision::Done) throw InvalidTrace("trace does not end with StopNodes");
  return lp;
}

// Teacher-forced negative log-likelihood of a trace and its exact gradient.
inline TraceLoss trace_nll(const GenerationTrace& t, const GeneratorParams& p) {
  TraceLoss out;
  out.grad.assign(p.size(), 0.0);
  DecisionScorer scorer(p, p.dataset_row(t.dataset_name), &out.grad);
  double lp = 0.0;
  for (const auto& s : t.steps) lp += scorer.apply(s);
  if (scorer.point() != Decision::Done) throw InvalidTrace("trace does not end with StopNodes");
  scorer.flush();
  out.nll = -lp;
  return out;
}

}  // namespace pipeforge::generator
