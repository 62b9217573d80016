#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/csv.hpp"
#include "pipeforge/core/error.hpp"
#include "pipeforge/core/text.hpp"
#include "pipeforge/eval/results.hpp"
#include "pipeforge/filter/graph_filter.hpp"
#include "pipeforge/generator/generate.hpp"
#include "pipeforge/generator/train.hpp"
#include "pipeforge/prep/prepare.hpp"
#include "pipeforge/profile/column_profile.hpp"
#include "pipeforge/profile/embedding_index.hpp"
#include "pipeforge/script/analyzer.hpp"
#include "pipeforge/skeleton/skeleton.hpp"

namespace pipeforge::cli {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDiverged = 3;
inline constexpr int kExitNoGraph = 4;

// File names inside a mined corpus directory.
inline constexpr const char* kCodeGraphsFile = "code_graphs.jsonl";
inline constexpr const char* kPipelineGraphsFile = "pipeline_graphs.jsonl";
inline constexpr const char* kVocabularyFile = "vocabulary.json";
inline constexpr const char* kIndexFile = "index.pfix";
inline constexpr const char* kReportFile = "filter_report.json";

struct Config {
  std::size_t dimension = 256;
  std::uint64_t hash_seed = 0;
  int hidden = 32;
  int rounds = 2;
  std::size_t max_nodes = 16;
  std::size_t k = 3;
  std::size_t retries = 50;
  std::uint64_t seed = 0;
  int epochs = 15;
  double learning_rate = 1e-3;
  std::size_t neighbors = 3;  // nearest datasets tried before giving up
  fs::path corpus_dir = "corpus";
  fs::path model = "model.pgen";
  fs::path index;        // defaults to <corpus_dir>/index.pfix
  fs::path vocabulary;   // defaults to <corpus_dir>/vocabulary.json
  fs::path registry;
  fs::path whitelist;

  fs::path index_path() const { return index.empty() ? corpus_dir / kIndexFile : index; }
  fs::path vocabulary_path() const { return vocabulary.empty() ? corpus_dir / kVocabularyFile : vocabulary; }
};

namespace detail {

template <typename T>
T parse_positive(const std::string& key, const std::string& value) {
  const auto x = text::parse_number(value);
  if (!x || *x <= 0 || (std::is_integral_v<T> && std::floor(*x) != *x)) {
    throw FormatError("config key '" + key + "' needs a positive value, got '" + value + "'");
  }
  return static_cast<T>(*x);
}

inline std::uint64_t parse_seed(const std::string& what, const std::string& value) {
  const auto t = std::string(text::trim(value));
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw FormatError(what + " needs a non-negative integer, got '" + value + "'");
  }
  return out;
}

}  // namespace detail

// key = value lines; '#' starts a comment. Unknown keys are errors.
inline Config parse_config(std::string_view src, Config c = {}) {
  std::istringstream in{std::string(src)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto body = text::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw FormatError("config line " + std::to_string(lineno) + " has no '='");
    const std::string key(text::trim(body.substr(0, eq)));
    const std::string value(text::trim(body.substr(eq + 1)));
    if (key == "dimension") c.dimension = detail::parse_positive<std::size_t>(key, value);
    else if (key == "hash_seed") c.hash_seed = detail::parse_seed(key, value);
    else if (key == "hidden") c.hidden = detail::parse_positive<int>(key, value);
    else if (key == "rounds") c.rounds = detail::parse_positive<int>(key, value);
    else if (key == "max_nodes") c.max_nodes = detail::parse_positive<std::size_t>(key, value);
    else if (key == "k") c.k = detail::parse_positive<std::size_t>(key, value);
    else if (key == "retries") c.retries = detail::parse_positive<std::size_t>(key, value);
    else if (key == "seed") c.seed = detail::parse_seed(key, value);
    else if (key == "epochs") c.epochs = detail::parse_positive<int>(key, value);
    else if (key == "learning_rate") c.learning_rate = detail::parse_positive<double>(key, value);
    else if (key == "neighbors") c.neighbors = detail::parse_positive<std::size_t>(key, value);
    else if (key == "corpus_dir") c.corpus_dir = value;
    else if (key == "model") c.model = value;
    else if (key == "index") c.index = value;
    else if (key == "vocabulary") c.vocabulary = value;
    else if (key == "registry") c.registry = value;
    else if (key == "whitelist") c.whitelist = value;
    else throw FormatError("unknown config key '" + key + "' on line " + std::to_string(lineno));
  }
  return c;
}

inline Config load_config(const fs::path& path, Config c = {}) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(c));
}

// PIPEFORGE_SEED replaces the configured seed.
inline void apply_environment(Config& c) {
  if (const char* s = std::getenv("PIPEFORGE_SEED"); s != nullptr && *s != '\0') {
    c.seed = detail::parse_seed("PIPEFORGE_SEED", s);
  }
}

// Relative paths are taken under the work directory.
inline fs::path under(const fs::path& workdir, const fs::path& p) {
  if (p.empty() || p.is_absolute() || workdir.empty()) return p;
  return workdir / p;
}

inline std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void require_file(const fs::path& p, const char* what) {
  if (p.empty()) throw InvalidArgument(std::string(what) + " path is not set");
  if (!fs::is_regular_file(p)) throw FormatError(std::string(what) + " " + p.string() + " does not exist");
}

inline std::vector<fs::path> files_with_extension(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Maps library failures to process exit codes, printing the message to `err`.
inline int run_guarded(const std::function<void()>& body, std::ostream& err) {
  try {
    body();
    return kExitOk;
  } catch (const DivergedLoss& e) {
    err << "error: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const NoValidGraph& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoGraph;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

// ---- mine

struct MineOptions {
  fs::path scripts_dir;
  fs::path datasets_dir;
  fs::path sidecar;  // optional JSON object: script file name -> dataset name
  fs::path out_dir;
};

struct MineSummary {
  filter::FilterReport report;
  std::size_t lex_errors = 0;
  std::size_t datasets_indexed = 0;
  std::vector<std::string> warnings;

  nlohmann::ordered_json to_json() const {
    auto j = report.to_json();
    j["lex_errors"] = lex_errors;
    j["datasets_indexed"] = datasets_indexed;
    return j;
  }
};

inline filter::DatasetSidecar load_sidecar(const fs::path& p) {
  try {
    return nlohmann::json::parse(read_text(p)).get<filter::DatasetSidecar>();
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError("sidecar " + p.string() + " must map script names to dataset names: " + ex.what());
  }
}

// Table embeddings of every *.csv in `dir`, keyed by normalized file name.
inline profile::EmbeddingIndex index_datasets(const fs::path& dir, const Config& c) {
  profile::ProfileConfig pc;
  pc.dimension = c.dimension;
  pc.hash_seed = c.hash_seed;
  profile::EmbeddingIndex index(c.dimension);
  for (const auto& f : files_with_extension(dir, ".csv")) {
    const auto name = filter::normalize_dataset_name(f.filename().string());
    index.add(profile::profile_table(csv::read_table(f.string(), ',', name), pc).embedding);
  }
  return index;
}

inline MineSummary cmd_mine(const MineOptions& o, const Config& c) {
  if (!fs::is_directory(o.scripts_dir)) throw FormatError("scripts directory " + o.scripts_dir.string() + " does not exist");
  if (!fs::is_directory(o.datasets_dir)) throw FormatError("datasets directory " + o.datasets_dir.string() + " does not exist");
  require_file(c.whitelist, "whitelist");
  const auto vocab = filter::build_vocabulary(c.whitelist.string());
  const auto sidecar = o.sidecar.empty() ? filter::DatasetSidecar{} : load_sidecar(o.sidecar);
  fs::create_directories(o.out_dir);

  MineSummary s;
  std::vector<script::CodeGraph> graphs;
  for (const auto& f : files_with_extension(o.scripts_dir, ".py")) {
    try {
      const auto src = script::ScriptSource::from_text(f.string(), read_text(f));
      graphs.push_back(script::analyze_script(src, f.filename().string()).graph);
    } catch (const LexError& e) {
      ++s.lex_errors;
      s.warnings.push_back("skipped " + f.filename().string() + ": " + e.what());
    }
  }
  if (graphs.empty() && s.lex_errors == 0) s.warnings.push_back("no scripts found in " + o.scripts_dir.string());

  {
    std::ofstream out(o.out_dir / kCodeGraphsFile);
    for (const auto& g : graphs) out << script::to_json(g).dump() << '\n';
  }
  auto filtered = filter::filter_corpus(graphs, vocab, sidecar);
  s.report = filtered.report;
  {
    std::ofstream out(o.out_dir / kPipelineGraphsFile);
    for (const auto& g : filtered.graphs) out << filter::to_json(g).dump() << '\n';
  }
  std::ofstream(o.out_dir / kVocabularyFile) << vocab.to_json().dump(2) << '\n';

  const auto index = index_datasets(o.datasets_dir, c);
  s.datasets_indexed = index.size();
  index.save((o.out_dir / kIndexFile).string());
  std::ofstream(o.out_dir / kReportFile) << s.to_json().dump(2) << '\n';
  return s;
}

// ---- train

struct TrainOptions {
  fs::path corpus;       // pipeline-graph JSON-lines file
  fs::path vocabulary;
  fs::path model_out;
  fs::path loss_out;
  bool include_unknown = false;  // keep UNKNOWN_DATASET graphs
};

struct TrainSummary {
  std::size_t traces = 0;
  std::size_t excluded_unknown = 0;
  std::vector<generator::EpochLog> log;
};

inline std::vector<filter::PipelineGraph> load_pipeline_graphs(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError("cannot read corpus " + p.string());
  std::vector<filter::PipelineGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    try {
      out.push_back(filter::pipeline_graph_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError("corpus line is not valid JSON: " + std::string(ex.what()));
    }
  }
  return out;
}

inline filter::NodeVocabulary load_vocabulary(const fs::path& p) {
  require_file(p, "vocabulary");
  return filter::build_vocabulary(p.string());
}

inline TrainSummary cmd_train(const TrainOptions& o, const Config& c) {
  require_file(o.corpus, "corpus");
  const auto vocab = load_vocabulary(o.vocabulary);
  TrainSummary s;
  std::vector<generator::GenerationTrace> traces;
  for (const auto& g : load_pipeline_graphs(o.corpus)) {
    if (g.dataset_name == filter::kUnknownDataset && !o.include_unknown) {
      ++s.excluded_unknown;
      continue;
    }
    traces.push_back(generator::canonicalize_trace(g, vocab));
  }
  if (traces.empty()) throw InvalidArgument("corpus " + o.corpus.string() + " has no trainable graphs");
  s.traces = traces.size();
  generator::TrainConfig tc;
  tc.epochs = c.epochs;
  tc.learning_rate = c.learning_rate;
  tc.seed = c.seed;
  tc.hidden = c.hidden;
  tc.rounds = c.rounds;
  auto result = generator::train(traces, static_cast<int>(vocab.size()), tc);
  if (!o.model_out.parent_path().empty()) fs::create_directories(o.model_out.parent_path());
  result.params.save(o.model_out.string());
  if (!o.loss_out.empty()) generator::write_loss_log(result.log, o.loss_out.string());
  s.log = std::move(result.log);
  return s;
}

// ---- recommend

struct RecommendOptions {
  fs::path dataset_csv;
  std::string target;
  std::optional<double> budget_seconds;  // T; absent means skeletons only
  generator::GenerationMode mode = generator::GenerationMode::Greedy;
  fs::path prepared_dir;  // D' matrix and manifest land here when set
};

struct RecommendSummary {
  skeleton::SkeletonDocument document;
  std::string dataset;
  std::vector<profile::Neighbor> neighbors;
  std::string seed_dataset;     // neighbor the graphs were generated from
  std::size_t graphs = 0;
  std::optional<prep::BudgetPlan> plan;
  double elapsed_seconds = 0.0;  // t
  std::vector<std::string> warnings;
};

// Registry-valid skeletons of one generated graph for the given task.
inline std::vector<skeleton::PipelineSkeleton> valid_skeletons(const filter::PipelineGraph& g,
                                                                const filter::NodeVocabulary& vocab,
                                                                const skeleton::CapabilityRegistry& reg, Task task,
                                                                double log_prob) {
  std::vector<skeleton::PipelineSkeleton> out;
  for (const auto& s : skeleton::to_skeletons(g, vocab, log_prob)) {
    const auto v = skeleton::validate_against(s, reg, task);
    if (const auto* a = std::get_if<skeleton::Accepted>(&v)) out.push_back(a->skeleton);
  }
  return out;
}

inline RecommendSummary cmd_recommend(const RecommendOptions& o, const Config& c) {
  const auto start = std::chrono::steady_clock::now();
  require_file(o.dataset_csv, "dataset");
  require_file(c.model, "model");
  require_file(c.index_path(), "index");
  require_file(c.registry, "registry");
  if (o.budget_seconds && !(*o.budget_seconds > 0)) throw InvalidArgument("--budget must be positive");

  const auto vocab = load_vocabulary(c.vocabulary_path());
  const auto params = generator::GeneratorParams::load(c.model.string());
  const auto index = profile::EmbeddingIndex::load(c.index_path().string());
  const auto registry = skeleton::CapabilityRegistry::load(c.registry.string());

  RecommendSummary s;
  s.dataset = filter::normalize_dataset_name(o.dataset_csv.filename().string());
  const auto table = csv::read_table(o.dataset_csv.string(), ',', s.dataset);
  const auto prepared = prep::prepare_dataset(table, o.target);
  s.warnings = prepared.warnings;
  if (!o.prepared_dir.empty()) {
    fs::create_directories(o.prepared_dir);
    prep::write_prepared(prepared, o.prepared_dir / (s.dataset + ".csv"), o.prepared_dir / (s.dataset + ".manifest.json"));
  }

  profile::ProfileConfig pc;
  pc.dimension = index.dimension();
  pc.hash_seed = c.hash_seed;
  const auto query = profile::profile_table(table, pc).embedding;
  s.neighbors = index.nearest(query, c.neighbors);

  generator::GenerateOptions go;
  go.k = c.k;
  go.max_nodes = c.max_nodes;
  go.mode = o.mode;
  go.seed = c.seed;
  go.max_retries = c.retries;
  go.accept = [&](const filter::PipelineGraph& g) { return !valid_skeletons(g, vocab, registry, prepared.task, 0.0).empty(); };

  std::optional<generator::GenerationResult> generated;
  for (const auto& n : s.neighbors) {
    try {
      generated = generator::generate(params, vocab, n.dataset_name, go);
      s.seed_dataset = n.dataset_name;
      break;
    } catch (const NoValidGraph& e) {
      s.warnings.push_back(e.what());
    }
  }
  if (!generated) {
    throw NoValidGraph("no valid pipeline from the " + std::to_string(s.neighbors.size()) + " nearest datasets");
  }
  s.graphs = generated->graphs.size();

  std::vector<skeleton::PipelineSkeleton> all;
  for (const auto& g : generated->graphs) {
    for (auto& k : valid_skeletons(g.graph, vocab, registry, prepared.task, g.log_prob)) all.push_back(std::move(k));
  }
  auto ranked = skeleton::dedupe_rank(all);
  if (ranked.size() > c.k) ranked.resize(c.k);

  s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.budget_seconds) {
    s.plan = prep::plan_budget(*o.budget_seconds, s.elapsed_seconds, ranked.size());
    for (auto& k : ranked) k.budget_seconds = s.plan->per_graph;
  }
  s.document = {s.dataset, prepared.task, std::move(ranked), registry.optimizer_name};
  return s;
}

// ---- evaluate

struct EvaluateOptions {
  fs::path results_dir;
  fs::path out_dir;
};

struct EvaluateSummary {
  std::size_t runs = 0;
  eval::Evaluation evaluation;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["runs"] = runs;
    j["failed_runs"] = evaluation.failed_runs;
    j["best_ranks"] = evaluation.best_ranks;
    j["mrr"] = evaluation.mrr ? nlohmann::ordered_json(*evaluation.mrr) : nlohmann::ordered_json();
    auto& rows = j["datasets"] = nlohmann::ordered_json::array();
    for (const auto& r : evaluation.rows) {
      rows.push_back({{"dataset", r.dataset}, {"system", r.system}, {"score", r.score}, {"runs", r.runs}});
    }
    return j;
  }
};

inline EvaluateSummary cmd_evaluate(const EvaluateOptions& o) {
  EvaluateSummary s;
  const auto runs = eval::load_runs(o.results_dir);
  if (runs.empty()) throw FormatError("no result files in " + o.results_dir.string());
  s.runs = runs.size();
  s.evaluation = eval::evaluate_runs(runs);
  fs::create_directories(o.out_dir);
  eval::write_results_csv(s.evaluation.rows, o.out_dir / "results.csv");
  eval::write_frequency_csv(s.evaluation.frequencies, o.out_dir / "frequencies.csv");
  std::ofstream(o.out_dir / "report.json") << s.to_json().dump(2) << '\n';
  return s;
}

}  // namespace pipeforge::cli
