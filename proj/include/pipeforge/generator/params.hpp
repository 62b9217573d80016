#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pipeforge/core/binary_io.hpp"
#include "pipeforge/core/error.hpp"
#include "pipeforge/core/hash.hpp"

namespace pipeforge::generator {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using VectorMap = Eigen::Map<Eigen::VectorXd>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;

struct ModelShape {
  int vocab_size = 0;  // |V|, reserved entries included
  int hidden = 32;     // h
  int rounds = 2;      // R
  std::vector<std::string> datasets;  // one conditioning row each

  friend bool operator==(const ModelShape&, const ModelShape&) = default;
};

// Names of every weight tensor in storage order.
enum Tensor : int {
  kTypeEmbedding,   // |V| x h
  kDatasetEmbedding,  // datasets x h
  kMsgW1,           // h x 2h, input is [h_src; h_dst]
  kMsgB1,           // h
  kMsgDirection,    // h, added for messages to the edge target, subtracted for the source
  kMsgW2,           // h x h
  kMsgB2,           // h
  kGruWz, kGruUz, kGruBz,
  kGruWr, kGruUr, kGruBr,
  kGruWn, kGruUn, kGruBn,
  kReadoutGateW,    // 2h x h
  kReadoutGateB,    // 2h
  kReadoutProjW,    // 2h x h
  kReadoutProjB,    // 2h
  kAddNodeW,        // (|V|+1) x 2h, last row is STOP
  kAddNodeB,        // |V|+1
  kAddEdgeW,        // 1 x 3h, input is [h_G; h_v]
  kAddEdgeB,        // 1
  kPickM,           // h x h, score h_u^T M h_v + w . h_u
  kPickW,           // h
  kTensorCount
};

struct TensorSlot {
  int rows = 0;
  int cols = 0;
  std::size_t offset = 0;
  std::size_t size() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
};

inline std::vector<TensorSlot> tensor_layout(const ModelShape& s) {
  const int v = s.vocab_size;
  const int h = s.hidden;
  const int d = static_cast<int>(s.datasets.size());
  const std::pair<int, int> dims[kTensorCount] = {
      {v, h},     {d, h},     {h, 2 * h}, {h, 1},         {h, 1},         {h, h},         {h, 1},
      {h, h},     {h, h},     {h, 1},     {h, h},         {h, h},         {h, 1},         {h, h},
      {h, h},     {h, 1},     {2 * h, h}, {2 * h, 1},     {2 * h, h},     {2 * h, 1},     {v + 1, 2 * h},
      {v + 1, 1}, {1, 3 * h}, {1, 1},     {h, h},         {h, 1}};
  std::vector<TensorSlot> out;
  std::size_t offset = 0;
  for (const auto& [r, c] : dims) {
    out.push_back({r, c, offset});
    offset += static_cast<std::size_t>(r) * static_cast<std::size_t>(c);
  }
  return out;
}

// Weights of the graph model in one flat buffer; gradients use the same
// layout.
class GeneratorParams {
 public:
  static constexpr std::uint32_t kVersion = 1;

  GeneratorParams() = default;
  explicit GeneratorParams(ModelShape shape) : shape_(std::move(shape)), layout_(tensor_layout(shape_)) {
    if (shape_.vocab_size <= 0 || shape_.hidden <= 0 || shape_.rounds < 0) {
      throw InvalidArgument("model sizes must be positive");
    }
    values_.assign(layout_.back().offset + layout_.back().size(), 0.0);
    for (std::size_t i = 0; i < shape_.datasets.size(); ++i) dataset_rows_.emplace(shape_.datasets[i], static_cast<int>(i));
    if (dataset_rows_.size() != shape_.datasets.size()) throw InvalidArgument("duplicate dataset name");
  }

  // Xavier-uniform matrices, zero vectors, from a seeded stream.
  static GeneratorParams initialize(ModelShape shape, std::uint64_t seed) {
    GeneratorParams p(std::move(shape));
    SplitMix64 rng(seed);
    for (int t = 0; t < kTensorCount; ++t) {
      const auto& slot = p.layout_[static_cast<std::size_t>(t)];
      if (slot.cols == 1 || slot.rows == 1) continue;
      const double limit = std::sqrt(6.0 / static_cast<double>(slot.rows + slot.cols));
      for (std::size_t i = 0; i < slot.size(); ++i) p.values_[slot.offset + i] = rng.uniform(-limit, limit);
    }
    return p;
  }

  const ModelShape& shape() const { return shape_; }
  const std::vector<TensorSlot>& layout() const { return layout_; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  // Row of the dataset conditioning table, or -1 for an unknown dataset.
  int dataset_row(const std::string& name) const {
    auto it = dataset_rows_.find(name);
    return it == dataset_rows_.end() ? -1 : it->second;
  }

  MatrixMap matrix(Tensor t) { return matrix_in(values_, t); }
  ConstMatrixMap matrix(Tensor t) const { return matrix_in(values_, t); }
  VectorMap vector(Tensor t) { return vector_in(values_, t); }
  ConstVectorMap vector(Tensor t) const { return vector_in(values_, t); }

  // Views into any buffer with this layout (parameters or gradients).
  MatrixMap matrix_in(std::vector<double>& buf, Tensor t) const {
    const auto& s = layout_[static_cast<std::size_t>(t)];
    return MatrixMap(buf.data() + s.offset, s.rows, s.cols);
  }
  ConstMatrixMap matrix_in(const std::vector<double>& buf, Tensor t) const {
    const auto& s = layout_[static_cast<std::size_t>(t)];
    return ConstMatrixMap(buf.data() + s.offset, s.rows, s.cols);
  }
  VectorMap vector_in(std::vector<double>& buf, Tensor t) const {
    const auto& s = layout_[static_cast<std::size_t>(t)];
    return VectorMap(buf.data() + s.offset, static_cast<Eigen::Index>(s.size()));
  }
  ConstVectorMap vector_in(const std::vector<double>& buf, Tensor t) const {
    const auto& s = layout_[static_cast<std::size_t>(t)];
    return ConstVectorMap(buf.data() + s.offset, static_cast<Eigen::Index>(s.size()));
  }

  bool all_finite() const {
    for (double x : values_) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  }

  // Binary model file: "PGEN", version, |V|, h, R, dataset names, then each
  // tensor as rows, cols and little-endian float32 values (row-major).
  void save(std::ostream& out) const {
    binary::write_magic(out, "PGEN");
    binary::write_u32(out, kVersion);
    binary::write_u32(out, static_cast<std::uint32_t>(shape_.vocab_size));
    binary::write_u32(out, static_cast<std::uint32_t>(shape_.hidden));
    binary::write_u32(out, static_cast<std::uint32_t>(shape_.rounds));
    binary::write_u32(out, static_cast<std::uint32_t>(shape_.datasets.size()));
    for (const auto& d : shape_.datasets) binary::write_string(out, d);
    for (const auto& slot : layout_) {
      binary::write_u32(out, static_cast<std::uint32_t>(slot.rows));
      binary::write_u32(out, static_cast<std::uint32_t>(slot.cols));
      for (std::size_t i = 0; i < slot.size(); ++i) binary::write_f32(out, static_cast<float>(values_[slot.offset + i]));
    }
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write model " + path);
    save(out);
  }

  static GeneratorParams load(std::istream& in) {
    binary::expect_magic(in, "PGEN");
    if (const auto v = binary::read_u32(in); v != kVersion) {
      throw FormatError("unsupported model version " + std::to_string(v));
    }
    ModelShape shape;
    shape.vocab_size = static_cast<int>(binary::read_u32(in));
    shape.hidden = static_cast<int>(binary::read_u32(in));
    shape.rounds = static_cast<int>(binary::read_u32(in));
    const auto n_datasets = binary::read_u32(in);
    if (shape.vocab_size <= 0 || shape.vocab_size > 100000 || shape.hidden <= 0 || shape.hidden > 4096 ||
        shape.rounds > 64 || n_datasets > 1000000) {
      throw FormatError("model header out of range");
    }
    for (std::uint32_t i = 0; i < n_datasets; ++i) shape.datasets.push_back(binary::read_string(in));
    GeneratorParams p(std::move(shape));
    for (const auto& slot : p.layout_) {
      const auto rows = binary::read_u32(in);
      const auto cols = binary::read_u32(in);
      if (rows != static_cast<std::uint32_t>(slot.rows) || cols != static_cast<std::uint32_t>(slot.cols)) {
        throw FormatError("tensor shape does not match the model header");
      }
      for (std::size_t i = 0; i < slot.size(); ++i) p.values_[slot.offset + i] = binary::read_f32(in);
    }
    if (!p.all_finite()) throw FormatError("model contains non-finite weights");
    return p;
  }

  static GeneratorParams load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open model " + path);
    return load(in);
  }

  friend bool operator==(const GeneratorParams& a, const GeneratorParams& b) {
    return a.shape_ == b.shape_ && a.values_ == b.values_;
  }

 private:
  ModelShape shape_;
  std::vector<TensorSlot> layout_;
  std::vector<double> values_;
  std::map<std::string, int> dataset_rows_;
};

}  // namespace pipeforge::generator
