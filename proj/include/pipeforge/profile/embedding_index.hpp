#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "pipeforge/core/binary_io.hpp"
#include "pipeforge/core/error.hpp"
#include "pipeforge/profile/column_profile.hpp"

namespace pipeforge::profile {

// 1 - cosine similarity, in [0, 2]. Identical vectors give exactly 0; a zero
// vector is at distance 1 from everything else.
inline double cosine_distance(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vectors have different dimensions");
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) {
    if (std::all_of(a.begin(), a.end(), [](float x) { return x == 0.0f; })) return 1.0;
    return 0.0;
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 1.0;
  return std::clamp(1.0 - dot / std::sqrt(na * nb), 0.0, 2.0);
}

struct Neighbor {
  std::string dataset_name;
  double distance = 0.0;
};

// Exact cosine index over table embeddings.
class EmbeddingIndex {
 public:
  static constexpr std::uint32_t kVersion = 1;

  explicit EmbeddingIndex(std::size_t dimension = 256) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<TableEmbedding>& entries() const { return entries_; }

  void add(TableEmbedding e) {
    if (e.vector.size() != dimension_) throw DimensionMismatch("embedding has dimension " + std::to_string(e.vector.size()) + ", index has " + std::to_string(dimension_));
    if (find(e.dataset_name) != nullptr) throw InvalidArgument("dataset '" + e.dataset_name + "' is already indexed");
    entries_.push_back(std::move(e));
  }

  const TableEmbedding* find(const std::string& name) const {
    for (const auto& e : entries_) {
      if (e.dataset_name == name) return &e;
    }
    return nullptr;
  }

  // Exhaustive search; ascending distance, ties by dataset name.
  std::vector<Neighbor> nearest(const TableEmbedding& query, std::size_t k) const {
    if (entries_.empty()) throw EmptyIndex("embedding index is empty");
    if (query.vector.size() != dimension_) throw DimensionMismatch("query dimension does not match the index");
    std::vector<Neighbor> all;
    all.reserve(entries_.size());
    for (const auto& e : entries_) all.push_back({e.dataset_name, cosine_distance(query.vector, e.vector)});
    std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
      if (a.distance != b.distance) return a.distance < b.distance;
      return a.dataset_name < b.dataset_name;
    });
    all.resize(std::min(k, all.size()));
    return all;
  }

  void save(std::ostream& out) const {
    binary::write_magic(out, "PFIX");
    binary::write_u32(out, kVersion);
    binary::write_u32(out, static_cast<std::uint32_t>(dimension_));
    binary::write_u32(out, static_cast<std::uint32_t>(entries_.size()));
    for (const auto& e : entries_) {
      binary::write_string(out, e.dataset_name);
      binary::write_u32(out, e.n_columns);
      for (float x : e.vector) binary::write_f32(out, x);
    }
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write index " + path);
    save(out);
  }

  static EmbeddingIndex load(std::istream& in) {
    binary::expect_magic(in, "PFIX");
    if (const auto v = binary::read_u32(in); v != kVersion) {
      throw FormatError("unsupported index version " + std::to_string(v));
    }
    const std::uint32_t d = binary::read_u32(in);
    const std::uint32_t count = binary::read_u32(in);
    if (d == 0 || d > (1u << 20)) throw FormatError("index dimension out of range");
    EmbeddingIndex index(d);
    for (std::uint32_t i = 0; i < count; ++i) {
      TableEmbedding e;
      e.dataset_name = binary::read_string(in);
      e.n_columns = binary::read_u32(in);
      e.vector.resize(d);
      for (auto& x : e.vector) x = binary::read_f32(in);
      index.add(std::move(e));
    }
    return index;
  }

  static EmbeddingIndex load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open index " + path);
    return load(in);
  }

 private:
  std::size_t dimension_;
  std::vector<TableEmbedding> entries_;
};

}  // namespace pipeforge::profile
