#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/column_type.hpp"
#include "pipeforge/core/csv.hpp"
#include "pipeforge/core/error.hpp"
#include "pipeforge/core/hash.hpp"
#include "pipeforge/core/task.hpp"
#include "pipeforge/core/text.hpp"

namespace pipeforge::prep {

inline constexpr std::size_t kTextDimension = 64;

// Classification when any value is non-numeric, or when every value is an
// integer and there are at most max(20, 5% of rows) distinct values.
inline Task detect_task(const std::vector<std::string>& values) {
  std::size_t rows = 0;
  bool all_numeric = true;
  bool all_integer = true;
  std::set<double> distinct;
  for (const auto& v : values) {
    if (text::is_missing(v)) continue;
    ++rows;
    const auto x = text::parse_number(v);
    if (!x) {
      all_numeric = false;
      break;
    }
    all_integer = all_integer && std::floor(*x) == *x;
    distinct.insert(*x);
  }
  if (rows == 0) throw EmptyTarget("target column has no values");
  if (!all_numeric) return Task::Classification;
  const double limit = std::max(20.0, 0.05 * static_cast<double>(rows));
  return all_integer && static_cast<double>(distinct.size()) <= limit ? Task::Classification : Task::Regression;
}

inline std::vector<ColumnType> infer_types(const Table& t, const TypeThresholds& th = {}) {
  std::vector<ColumnType> out;
  for (const auto& c : t.columns) out.push_back(infer_column_type(c, th));
  return out;
}

// Lowercased alphanumeric runs.
inline std::vector<std::string> word_tokens(std::string_view cell) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : cell) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) {
      cur += static_cast<char>(std::tolower(u));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Hashed bag of word unigrams per cell, L2-normalized; empty cells map to
// the zero vector.
inline std::vector<std::vector<double>> vectorize_text(const std::vector<std::string>& cells,
                                                       std::size_t dimension = kTextDimension, std::uint64_t seed = 0) {
  std::vector<std::vector<double>> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    std::vector<double> v(dimension, 0.0);
    for (const auto& tok : word_tokens(c)) v[fnv1a64(tok, seed) % dimension] += 1.0;
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 0) {
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
    }
    out.push_back(std::move(v));
  }
  return out;
}

enum class Imputation { None, Median, Mode };

inline const char* to_string(Imputation i) {
  switch (i) {
    case Imputation::None: return "none";
    case Imputation::Median: return "median";
    case Imputation::Mode: return "mode";
  }
  return "";
}

struct ImputedColumn {
  std::vector<std::string> cells;
  Imputation applied = Imputation::None;
};

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

// Most frequent trimmed cell; ties go to the lexicographically smallest.
inline std::string mode(const std::vector<std::string>& cells) {
  std::map<std::string, std::size_t> counts;
  for (const auto& c : cells) {
    if (!text::is_missing(c)) ++counts[std::string(text::trim(c))];
  }
  std::string best;
  std::size_t best_n = 0;
  for (const auto& [k, n] : counts) {
    if (n > best_n) {
      best = k;
      best_n = n;
    }
  }
  return best;
}

// Fills missing cells: median for numeric columns (cells that do not parse
// count as missing), mode otherwise. nullopt when nothing is present.
inline std::optional<ImputedColumn> impute(const std::vector<std::string>& cells, ColumnType type) {
  ImputedColumn out;
  out.cells.reserve(cells.size());
  if (type == ColumnType::Numeric) {
    std::vector<double> present;
    for (const auto& c : cells) {
      if (const auto x = text::parse_number(c)) present.push_back(*x);
    }
    if (present.empty()) return std::nullopt;
    const std::string fill = text::format_number(median(present));
    for (const auto& c : cells) {
      const auto x = text::parse_number(c);
      if (x) {
        out.cells.push_back(text::format_number(*x));
      } else {
        out.cells.push_back(fill);
        out.applied = Imputation::Median;
      }
    }
    return out;
  }
  const std::string fill = mode(cells);
  if (fill.empty()) return std::nullopt;
  for (const auto& c : cells) {
    if (text::is_missing(c)) {
      out.cells.push_back(fill);
      out.applied = Imputation::Mode;
    } else {
      out.cells.push_back(std::string(text::trim(c)));
    }
  }
  return out;
}

// Ordinal codes by descending frequency, ties by label.
inline std::map<std::string, int> frequency_codes(const std::vector<std::string>& cells) {
  std::map<std::string, std::size_t> counts;
  for (const auto& c : cells) ++counts[c];
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < ranked.size(); ++i) out[ranked[i].first] = static_cast<int>(i);
  return out;
}

struct BudgetPlan {
  double total_seconds = 0.0;     // T
  double consumed_seconds = 0.0;  // t
  std::size_t k = 1;
  double per_graph = 0.0;         // (T - t) / K
};

inline BudgetPlan plan_budget(double total, double consumed, std::size_t k) {
  if (!(total > 0) || !(consumed >= 0) || k < 1 || !std::isfinite(total) || !std::isfinite(consumed)) {
    throw InvalidArgument("budget needs T > 0, t >= 0, K >= 1");
  }
  if (consumed >= total) {
    throw BudgetExhausted("generation took " + text::format_number(consumed) + " s of a " + text::format_number(total) +
                          " s budget");
  }
  // Rounded down until K * per_graph + t <= T holds in floating point too.
  const double kd = static_cast<double>(k);
  double per = (total - consumed) / kd;
  while (per > 0 && per * kd + consumed > total) per = std::nextafter(per, 0.0);
  return {total, consumed, k, per};
}

struct PreparedColumn {
  std::string name;
  ColumnType inferred_type = ColumnType::Numeric;
  Imputation imputation = Imputation::None;
};

struct PreparedDataset {
  std::string name;
  std::vector<PreparedColumn> columns;       // source columns kept
  std::vector<std::string> emitted_columns;  // matrix columns, text expanded
  std::string target_column;
  std::size_t target_index = 0;              // into emitted_columns
  Task task = Task::Classification;
  std::size_t row_count = 0;
  std::vector<std::vector<double>> matrix;   // row-major
  std::vector<std::string> warnings;
};

// The four preprocessing steps: task detection on the target, type
// inference, text vectorization and imputation. Rows with a missing target
// are dropped; all-missing feature columns are dropped with a warning.
// Categorical columns (and a non-numeric target) get frequency-rank codes.
inline PreparedDataset prepare_dataset(const Table& t, const std::string& target, const TypeThresholds& th = {}) {
  const std::size_t ti = t.find_column(target);
  if (ti == t.column_count()) throw InvalidArgument("target column '" + target + "' not found");
  PreparedDataset out;
  out.name = t.name;
  out.target_column = target;
  out.task = detect_task(t.columns[ti]);

  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    if (!text::is_missing(t.columns[ti][r])) rows.push_back(r);
  }
  if (rows.size() < t.row_count()) {
    out.warnings.push_back("dropped " + std::to_string(t.row_count() - rows.size()) + " rows with a missing target");
  }
  out.row_count = rows.size();
  out.matrix.assign(rows.size(), {});

  for (std::size_t c = 0; c < t.column_count(); ++c) {
    std::vector<std::string> cells;
    cells.reserve(rows.size());
    for (std::size_t r : rows) cells.push_back(t.columns[c][r]);
    const bool is_target = c == ti;
    ColumnType type = infer_column_type(cells, th);
    if (is_target) {
      const bool numeric = std::all_of(cells.begin(), cells.end(), [](const std::string& s) {
        return text::parse_number(s).has_value();
      });
      type = numeric ? ColumnType::Numeric : ColumnType::Categorical;
    }
    const auto imputed = impute(cells, type);
    if (!imputed) {
      out.warnings.push_back("dropped column '" + t.column_names[c] + "': all values missing");
      continue;
    }
    out.columns.push_back({t.column_names[c], type, imputed->applied});
    if (is_target) out.target_index = out.emitted_columns.size();
    switch (type) {
      case ColumnType::Numeric:
        out.emitted_columns.push_back(t.column_names[c]);
        for (std::size_t r = 0; r < rows.size(); ++r) out.matrix[r].push_back(*text::parse_number(imputed->cells[r]));
        break;
      case ColumnType::Categorical: {
        out.emitted_columns.push_back(t.column_names[c]);
        const auto codes = frequency_codes(imputed->cells);
        for (std::size_t r = 0; r < rows.size(); ++r) out.matrix[r].push_back(codes.at(imputed->cells[r]));
        break;
      }
      case ColumnType::Text: {
        for (std::size_t k = 0; k < kTextDimension; ++k) out.emitted_columns.push_back(t.column_names[c] + "__t" + std::to_string(k));
        const auto vecs = vectorize_text(imputed->cells);
        for (std::size_t r = 0; r < rows.size(); ++r) out.matrix[r].insert(out.matrix[r].end(), vecs[r].begin(), vecs[r].end());
        break;
      }
    }
  }
  return out;
}

// Headerless numeric CSV plus manifest {"columns", "target_index", "task"}.
inline void write_prepared(const PreparedDataset& d, const std::filesystem::path& matrix_path,
                           const std::filesystem::path& manifest_path) {
  std::ofstream m(matrix_path);
  if (!m) throw FormatError("cannot write " + matrix_path.string());
  for (const auto& row : d.matrix) {
    for (std::size_t i = 0; i < row.size(); ++i) m << (i ? "," : "") << text::format_number(row[i]);
    m << '\n';
  }
  nlohmann::ordered_json j;
  j["columns"] = d.emitted_columns;
  j["target_index"] = d.target_index;
  j["task"] = to_string(d.task);
  std::ofstream f(manifest_path);
  if (!f) throw FormatError("cannot write " + manifest_path.string());
  f << j.dump(2) << '\n';
}

}  // namespace pipeforge::prep
