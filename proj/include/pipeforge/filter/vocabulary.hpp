#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/error.hpp"

namespace pipeforge::filter {

enum class Category { Reserved, Preprocessor, Estimator, Other };

inline const char* to_string(Category c) {
  switch (c) {
    case Category::Reserved: return "Reserved";
    case Category::Preprocessor: return "Preprocessor";
    case Category::Estimator: return "Estimator";
    case Category::Other: return "Other";
  }
  return "";
}

inline Category parse_category(const std::string& s) {
  if (s == "Preprocessor") return Category::Preprocessor;
  if (s == "Estimator") return Category::Estimator;
  if (s == "Other") return Category::Other;
  throw FormatError("unknown operator category '" + s + "'");
}

using VocabId = int;

inline constexpr VocabId kDataset = 0;
inline constexpr VocabId kReadCsv = 1;
inline constexpr VocabId kStop = 2;
inline constexpr int kReservedCount = 3;

struct VocabEntry {
  std::string label;
  Category category = Category::Other;
};

// Bijection between canonical operator labels and dense integer ids. Ids 0-2
// are reserved (DATASET, READ_CSV, STOP); whitelisted operators follow in file
// order.
class NodeVocabulary {
 public:
  NodeVocabulary() {
    add({"DATASET", Category::Reserved});
    add({"READ_CSV", Category::Reserved});
    add({"STOP", Category::Reserved});
  }

  static NodeVocabulary from_entries(const std::vector<VocabEntry>& operators) {
    NodeVocabulary v;
    bool has_estimator = false;
    for (const auto& e : operators) {
      if (e.category == Category::Reserved) throw FormatError("operator '" + e.label + "' uses a reserved category");
      if (v.ids_.count(e.label) > 0) throw DuplicateLabel("duplicate operator label '" + e.label + "'");
      v.add(e);
      has_estimator = has_estimator || e.category == Category::Estimator;
    }
    if (!has_estimator) throw MissingEstimatorCategory("vocabulary has no Estimator entry");
    return v;
  }

  static NodeVocabulary from_json(const nlohmann::json& j) {
    std::vector<VocabEntry> entries;
    try {
      for (const auto& op : j.at("operators")) {
        entries.push_back({op.at("label").get<std::string>(), parse_category(op.at("category").get<std::string>())});
      }
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(std::string("malformed vocabulary: ") + ex.what());
    }
    return from_entries(entries);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    auto& ops = j["operators"] = nlohmann::ordered_json::array();
    for (std::size_t i = kReservedCount; i < entries_.size(); ++i) {
      ops.push_back({{"label", entries_[i].label}, {"category", to_string(entries_[i].category)}});
    }
    return j;
  }

  std::size_t size() const { return entries_.size(); }
  const VocabEntry& entry(VocabId id) const { return entries_.at(static_cast<std::size_t>(id)); }
  const std::string& label(VocabId id) const { return entry(id).label; }
  Category category(VocabId id) const { return entry(id).category; }
  bool contains(VocabId id) const { return id >= 0 && static_cast<std::size_t>(id) < entries_.size(); }

  std::optional<VocabId> find(const std::string& label) const {
    if (auto it = ids_.find(label); it != ids_.end()) return it->second;
    return std::nullopt;
  }

  friend bool operator==(const NodeVocabulary& a, const NodeVocabulary& b) { return a.ids_ == b.ids_; }

 private:
  void add(VocabEntry e) {
    ids_.emplace(e.label, static_cast<VocabId>(entries_.size()));
    entries_.push_back(std::move(e));
  }

  std::vector<VocabEntry> entries_;
  std::map<std::string, VocabId> ids_;
};

inline NodeVocabulary build_vocabulary(const std::string& whitelist_file) {
  std::ifstream in(whitelist_file);
  if (!in) throw FormatError("cannot open whitelist " + whitelist_file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError("whitelist " + whitelist_file + " is not valid JSON: " + ex.what());
  }
  return NodeVocabulary::from_json(j);
}

}  // namespace pipeforge::filter
