#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pipeforge/core/column_type.hpp"
#include "pipeforge/core/csv.hpp"
#include "pipeforge/core/error.hpp"
#include "pipeforge/core/hash.hpp"
#include "pipeforge/core/text.hpp"

namespace pipeforge::profile {

struct ProfileConfig {
  std::size_t dimension = 256;
  std::uint64_t hash_seed = 0;
  std::size_t max_rows = 10000;
  TypeThresholds types;
};

struct ColumnProfile {
  std::string name;
  ColumnType inferred_type = ColumnType::Numeric;
  std::vector<double> vector;
  bool all_missing = false;  // vector is zero
};

struct TableEmbedding {
  std::string dataset_name;
  std::vector<float> vector;
  std::uint32_t n_columns = 0;

  friend bool operator==(const TableEmbedding&, const TableEmbedding&) = default;
};

namespace detail {

// Feature bag hashed into a fixed number of buckets.
class HashedBag {
 public:
  HashedBag(std::size_t d, std::uint64_t seed) : v_(d, 0.0), seed_(seed) {}

  void add(std::string_view token, double weight = 1.0) {
    v_[fnv1a64(token, seed_) % v_.size()] += weight;
  }

  // Linear interpolation between the two neighbouring bins of `value`, so a
  // small shift in the value moves weight smoothly between buckets.
  void add_soft(const std::string& prefix, double value, double width, double weight = 1.0) {
    const double t = value / width;
    const double lo = std::floor(t);
    const double frac = t - lo;
    const auto bin = static_cast<long long>(lo);
    add(prefix + ":" + std::to_string(bin), weight * (1.0 - frac));
    add(prefix + ":" + std::to_string(bin + 1), weight * frac);
  }

  std::vector<double> normalized() && {
    double norm = 0.0;
    for (double x : v_) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& x : v_) x /= norm;
    }
    return std::move(v_);
  }

 private:
  std::vector<double> v_;
  std::uint64_t seed_;
};

inline double signed_log(double x) { return std::copysign(std::log1p(std::fabs(x)), x); }

// Sorted input, p in [0, 1].
inline double quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline std::vector<double> numeric_vector(const std::vector<std::string>& cells, const ProfileConfig& cfg) {
  std::vector<double> s;
  std::set<double> distinct;
  std::size_t integers = 0;
  for (const auto& c : cells) {
    if (text::is_missing(c)) continue;
    if (auto x = text::parse_number(c)) {
      s.push_back(signed_log(*x));
      distinct.insert(*x);
      if (std::floor(*x) == *x) ++integers;
    }
  }
  HashedBag bag(cfg.dimension, cfg.hash_seed);
  if (s.empty()) return std::move(bag).normalized();
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double mean = 0.0;
  for (double x : s) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : s) var += (x - mean) * (x - mean);
  const double sd = std::sqrt(var / n);

  bag.add("num");
  for (int i = 0; i <= 10; ++i) bag.add_soft("num:q" + std::to_string(i), quantile(s, i / 10.0), 0.5);
  bag.add_soft("num:mean", mean, 0.5);
  bag.add_soft("num:std", sd, 0.25);
  bag.add_soft("num:miss", 1.0 - n / static_cast<double>(cells.size()), 0.1);
  bag.add_soft("num:card", static_cast<double>(distinct.size()) / n, 0.1);
  bag.add_soft("num:int", static_cast<double>(integers) / n, 0.5);
  return std::move(bag).normalized();
}

inline std::vector<double> ngram_vector(const std::vector<std::string>& cells, const ProfileConfig& cfg) {
  HashedBag bag(cfg.dimension, cfg.hash_seed);
  for (const auto& c : cells) {
    if (text::is_missing(c)) continue;
    const std::string padded = "^" + text::lower(text::trim(c)) + "$";
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) bag.add(std::string_view(padded).substr(i, 3));
  }
  return std::move(bag).normalized();
}

// Seeded uniform row sample without replacement, original order kept.
inline std::vector<std::string> sample_rows(const std::vector<std::string>& cells, std::size_t cap,
                                            std::uint64_t seed) {
  if (cells.size() <= cap) return cells;
  std::vector<std::size_t> idx(cells.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < cap; ++i) std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
  idx.resize(cap);
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> out;
  out.reserve(cap);
  for (std::size_t i : idx) out.push_back(cells[i]);
  return out;
}

}  // namespace detail

// Content profile of one column: numeric columns hash a sketch of quantiles,
// moments, missing rate and cardinality; categorical and text columns hash
// their character 3-grams. The vector is L2-normalized, or zero when every
// cell is missing.
inline ColumnProfile profile_column(const std::string& name, const std::vector<std::string>& values,
                                    const ProfileConfig& cfg = {}) {
  if (values.empty()) throw InvalidArgument("column '" + name + "' has no values");
  if (cfg.dimension == 0) throw InvalidArgument("embedding dimension must be positive");
  const auto cells = detail::sample_rows(values, cfg.max_rows, cfg.hash_seed);
  ColumnProfile p;
  p.name = name;
  p.inferred_type = infer_column_type(cells, cfg.types);
  p.vector = p.inferred_type == ColumnType::Numeric ? detail::numeric_vector(cells, cfg)
                                                    : detail::ngram_vector(cells, cfg);
  p.all_missing = std::all_of(p.vector.begin(), p.vector.end(), [](double x) { return x == 0.0; });
  return p;
}

// Mean of the column vectors, renormalized. Columns are summed in a
// content-defined order so the result does not depend on column order.
inline TableEmbedding embed_table(const std::vector<ColumnProfile>& profiles, const std::string& dataset_name) {
  if (profiles.empty()) throw InvalidArgument("table '" + dataset_name + "' has no columns");
  const std::size_t d = profiles.front().vector.size();
  std::vector<const std::vector<double>*> order;
  for (const auto& p : profiles) {
    if (p.vector.size() != d) throw DimensionMismatch("column profiles have different dimensions");
    order.push_back(&p.vector);
  }
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return *a < *b; });
  std::vector<double> sum(d, 0.0);
  for (const auto* v : order) {
    for (std::size_t i = 0; i < d; ++i) sum[i] += (*v)[i];
  }
  double norm = 0.0;
  for (double x : sum) norm += x * x;
  norm = std::sqrt(norm);
  TableEmbedding t;
  t.dataset_name = dataset_name;
  t.n_columns = static_cast<std::uint32_t>(profiles.size());
  t.vector.resize(d);
  for (std::size_t i = 0; i < d; ++i) t.vector[i] = static_cast<float>(norm > 0.0 ? sum[i] / norm : 0.0);
  return t;
}

struct TableProfile {
  std::vector<ColumnProfile> columns;
  TableEmbedding embedding;
};

inline TableProfile profile_table(const Table& table, const ProfileConfig& cfg = {}) {
  TableProfile out;
  for (std::size_t c = 0; c < table.column_count(); ++c) {
    if (table.columns[c].empty()) continue;
    out.columns.push_back(profile_column(table.column_names[c], table.columns[c], cfg));
  }
  out.embedding = embed_table(out.columns, table.name);
  return out;
}

}  // namespace pipeforge::profile
