#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pipeforge/core/text.hpp"

namespace pipeforge {

enum class ColumnType { Numeric, Categorical, Text };

inline const char* to_string(ColumnType t) {
  switch (t) {
    case ColumnType::Numeric: return "numeric";
    case ColumnType::Categorical: return "categorical";
    case ColumnType::Text: return "text";
  }
  return "";
}

struct TypeThresholds {
  double numeric_fraction = 0.99;
  double max_distinct_ratio = 0.5;
  double max_mean_length = 32.0;  // characters per cell
};

// Type of a column from its non-missing cells. A column with no usable cells
// is reported as Numeric; callers check for all-missing separately.
inline ColumnType infer_column_type(const std::vector<std::string>& cells, const TypeThresholds& th = {}) {
  std::size_t present = 0;
  std::size_t numeric = 0;
  std::size_t chars = 0;
  std::set<std::string_view> distinct;
  for (const auto& c : cells) {
    if (text::is_missing(c)) continue;
    ++present;
    if (text::parse_number(c)) ++numeric;
    const auto t = text::trim(c);
    chars += t.size();
    distinct.insert(t);
  }
  if (present == 0) return ColumnType::Numeric;
  const double n = static_cast<double>(present);
  if (static_cast<double>(numeric) >= th.numeric_fraction * n) return ColumnType::Numeric;
  if (static_cast<double>(distinct.size()) / n <= th.max_distinct_ratio &&
      static_cast<double>(chars) / n <= th.max_mean_length) {
    return ColumnType::Categorical;
  }
  return ColumnType::Text;
}

}  // namespace pipeforge
