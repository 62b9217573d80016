#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/csv.hpp"
#include "pipeforge/core/error.hpp"
#include "pipeforge/core/text.hpp"
#include "pipeforge/eval/metrics.hpp"

namespace pipeforge::eval {

struct SkeletonResult {
  std::string skeleton_id;
  std::optional<double> best_score;
  std::string status;
  double wall_seconds = 0.0;
  std::vector<std::string> operators;  // preprocessors then estimator, when the file names them
};

// One optimizer run over a skeleton file: the optimizer's results JSON.
struct RunResult {
  std::string file;
  std::string dataset;
  std::string system = "pipeforge";
  std::string task;
  std::string source;
  std::vector<SkeletonResult> results;  // in skeleton-file order
  std::optional<std::string> best_id;
  std::optional<double> best_score;

  // 1-based position of the best skeleton in the recommended order.
  std::optional<int> best_rank() const {
    if (!best_id) return std::nullopt;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].skeleton_id == *best_id) return static_cast<int>(i + 1);
    }
    return std::nullopt;
  }
};

inline RunResult parse_run_result(const nlohmann::json& j, const std::string& file = {}) {
  RunResult r;
  r.file = file;
  try {
    if (!j.is_object()) throw FormatError("results file is not an object");
    r.dataset = j.value("dataset", std::filesystem::path(file).stem().string());
    r.system = j.value("system", r.system);
    r.task = j.value("task", "");
    r.source = j.value("source", "");
    for (const auto& e : j.at("results")) {
      SkeletonResult s;
      s.skeleton_id = e.at("skeleton_id").get<std::string>();
      s.status = e.at("status").get<std::string>();
      s.wall_seconds = e.value("wall_seconds", 0.0);
      if (e.contains("best_score") && !e.at("best_score").is_null()) s.best_score = e.at("best_score").get<double>();
      if (e.contains("preprocessors")) s.operators = e.at("preprocessors").get<std::vector<std::string>>();
      if (e.contains("estimator")) s.operators.push_back(e.at("estimator").get<std::string>());
      r.results.push_back(std::move(s));
    }
    if (j.contains("best") && !j.at("best").is_null()) {
      r.best_id = j.at("best").at("skeleton_id").get<std::string>();
      r.best_score = j.at("best").at("best_score").get<double>();
    }
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError("malformed results file " + file + ": " + ex.what());
  }
  if (r.best_id && !r.best_rank()) throw FormatError("best skeleton of " + file + " is not among its results");
  if (r.best_score && !std::isfinite(*r.best_score)) throw FormatError("non-finite best score in " + file);
  return r;
}

using CountTable = std::vector<std::pair<std::string, std::size_t>>;  // count descending, then label

struct FrequencyReport {
  CountTable first_position;  // operators of each run's top-ranked pipeline
  CountTable all_positions;   // operators of every recommended pipeline
  CountTable top_model;       // operators of each run's best-scoring pipeline
};

struct RankedPipelines {
  std::vector<std::vector<std::string>> pipelines;  // recommended order
  std::optional<std::size_t> best;                  // index of the best-scoring one
};

inline CountTable ranked(const std::map<std::string, std::size_t>& counts) {
  CountTable out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

inline FrequencyReport frequency_report(const std::vector<RankedPipelines>& runs) {
  std::map<std::string, std::size_t> first, all, top;
  for (const auto& r : runs) {
    for (std::size_t i = 0; i < r.pipelines.size(); ++i) {
      for (const auto& op : r.pipelines[i]) {
        ++all[op];
        if (i == 0) ++first[op];
        if (r.best && *r.best == i) ++top[op];
      }
    }
  }
  return {ranked(first), ranked(all), ranked(top)};
}

inline void write_frequency_csv(const FrequencyReport& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "table,operator,count\n";
  auto dump = [&](const char* name, const CountTable& t) {
    for (const auto& [op, n] : t) out << name << ',' << csv::field(op) << ',' << n << '\n';
  };
  dump("first_position", f.first_position);
  dump("all_positions", f.all_positions);
  dump("top_model", f.top_model);
}

struct ResultRow {
  std::string dataset;
  std::string system;
  double score = 0.0;  // mean best score over runs
  std::string task;
  std::string source;
  std::size_t runs = 0;
};

struct Evaluation {
  std::vector<ResultRow> rows;
  std::vector<int> best_ranks;
  std::optional<double> mrr;
  FrequencyReport frequencies;
  std::size_t failed_runs = 0;  // runs without a best skeleton
};

inline Evaluation evaluate_runs(const std::vector<RunResult>& runs) {
  Evaluation ev;
  std::map<std::pair<std::string, std::string>, std::vector<const RunResult*>> groups;
  std::vector<RankedPipelines> ranked_runs;
  for (const auto& r : runs) {
    groups[{r.dataset, r.system}].push_back(&r);
    if (const auto rank = r.best_rank()) {
      ev.best_ranks.push_back(*rank);
    } else {
      ++ev.failed_runs;
    }
    RankedPipelines rp;
    for (const auto& s : r.results) rp.pipelines.push_back(s.operators);
    if (const auto rank = r.best_rank()) rp.best = static_cast<std::size_t>(*rank - 1);
    ranked_runs.push_back(std::move(rp));
  }
  for (const auto& [key, members] : groups) {
    ResultRow row{key.first, key.second, 0.0, members.front()->task, members.front()->source, 0};
    double sum = 0.0;
    for (const auto* m : members) {
      if (!m->best_score) continue;
      sum += *m->best_score;
      ++row.runs;
    }
    if (row.runs == 0) continue;
    row.score = sum / static_cast<double>(row.runs);
    ev.rows.push_back(std::move(row));
  }
  if (!ev.best_ranks.empty()) ev.mrr = mrr(ev.best_ranks);
  ev.frequencies = frequency_report(ranked_runs);
  return ev;
}

// Every *.json under `dir` (sorted by path) is one run.
inline std::vector<RunResult> load_runs(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw FormatError("results directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RunResult> runs;
  for (const auto& f : files) {
    std::ifstream in(f);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError("results file " + f.string() + " is not valid JSON: " + ex.what());
    }
    runs.push_back(parse_run_result(j, f.string()));
  }
  return runs;
}

// Columns: dataset, system, score, task, source.
inline void write_results_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "dataset,system,score,task,source\n";
  for (const auto& r : rows) {
    out << csv::field(r.dataset) << ',' << csv::field(r.system) << ',' << text::format_number(r.score) << ','
        << r.task << ',' << csv::field(r.source) << '\n';
  }
}

}  // namespace pipeforge::eval
