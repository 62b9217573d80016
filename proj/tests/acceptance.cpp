#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generator_oracles.hpp"
#include "pipeforge/cli/commands.hpp"
#include "pipeforge/eval/metrics.hpp"
#include "pipeforge/prep/prepare.hpp"
#include "test_util.hpp"

using namespace pipeforge;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fixed(double x, int digits = 4) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

std::string scientific(double x) {
  std::ostringstream s;
  s.setf(std::ios::scientific);
  s.precision(2);
  s << x;
  return s.str();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

const fs::path& workdir() {
  static const fs::path dir = testutil::scratch_dir("acceptance");
  return dir;
}

const fs::path kFixtures = testutil::data_path("fixtures");
const fs::path kWhitelist = testutil::data_path("whitelist.json");
const fs::path kFlaml = testutil::data_path("registries/flaml.json");
const fs::path kAutosklearn = testutil::data_path("registries/autosklearn.json");

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

// Runs the command-line tool; stdout and stderr go to files under the work directory.
int run_cli(const std::string& args, const std::string& log_name) {
  const auto log = workdir() / log_name;
  const std::string cmd = quote(PIPEFORGE_CLI) + " --workdir " + quote(workdir()) + " " + args + " >" +
                          quote(log.string() + ".out") + " 2>" + quote(log.string() + ".err");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_bytes(const fs::path& p) { return testutil::read_file(p.string()); }

// Mined once and shared by the checks that need a corpus.
struct MinedCorpus {
  std::vector<script::CodeGraph> code_graphs;
  filter::FilteredCorpus filtered;
  filter::NodeVocabulary vocab;
  std::size_t scripts = 0;
  std::size_t lines = 0;
  double seconds = 0.0;
};

const MinedCorpus& mined() {
  static const MinedCorpus m = [] {
    MinedCorpus out;
    const auto start = Clock::now();
    out.vocab = filter::build_vocabulary(kWhitelist.string());
    const auto sidecar = cli::load_sidecar(kFixtures / "corpus/sidecar.json");
    for (const auto& f : cli::files_with_extension(kFixtures / "corpus/scripts", ".py")) {
      const auto text = cli::read_text(f);
      try {
        const auto src = script::ScriptSource::from_text(f.string(), text);
        out.code_graphs.push_back(script::analyze_script(src, f.filename().string()).graph);
        ++out.scripts;
        out.lines += static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
      } catch (const LexError&) {
      }
    }
    out.filtered = filter::filter_corpus(out.code_graphs, out.vocab, sidecar);
    out.seconds = seconds_since(start);
    return out;
  }();
  return m;
}

std::vector<generator::GenerationTrace> training_traces() {
  std::vector<generator::GenerationTrace> traces;
  for (const auto& g : mined().filtered.graphs) {
    if (g.dataset_name != filter::kUnknownDataset) traces.push_back(generator::canonicalize_trace(g, mined().vocab));
  }
  return traces;
}

struct TrainedModel {
  generator::TrainResult result;
  std::size_t traces = 0;
  double seconds = 0.0;
};

const TrainedModel& trained() {
  static const TrainedModel m = [] {
    TrainedModel out;
    const auto traces = training_traces();
    out.traces = traces.size();
    generator::TrainConfig c;
    c.epochs = 15;
    const auto start = Clock::now();
    out.result = generator::train(traces, static_cast<int>(mined().vocab.size()), c);
    out.seconds = seconds_since(start);
    return out;
  }();
  return m;
}

Outcome filtering_reduction() {
  const auto& m = mined();
  const auto& r = m.filtered.report;
  bool clean = true;
  for (const auto& g : m.filtered.graphs) {
    bool has_dataset = false;
    for (const auto& n : g.nodes) {
      if (n.vocab_id < 0 || static_cast<std::size_t>(n.vocab_id) >= m.vocab.size()) clean = false;
      if (n.vocab_id == filter::kDataset) has_dataset = true;
    }
    if (!has_dataset) clean = false;
  }
  const double rate = r.reduction_rate_combined();
  const double mean_loc = static_cast<double>(m.lines) / static_cast<double>(m.scripts);
  return {m.scripts >= 20 && clean && rate >= 0.90 && m.seconds < 10.0,
          std::to_string(m.scripts) + " scripts (mean " + fixed(mean_loc, 1) + " lines), " +
              std::to_string(r.nodes_before) + "->" + std::to_string(r.nodes_after) + " nodes, " +
              std::to_string(r.edges_before) + "->" + std::to_string(r.edges_after) + " edges, combined reduction " +
              fixed(100 * rate, 2) + "%, vocabulary-only " + (clean ? "yes" : "no") + ", " + fixed(m.seconds, 3) +
              " s"};
}

Outcome trace_round_trip() {
  std::size_t ok = 0;
  const auto& graphs = mined().filtered.graphs;
  for (const auto& g : graphs) {
    const auto t = generator::canonicalize_trace(g, mined().vocab);
    const auto back = generator::replay(t);
    if (back.dataset_name == g.dataset_name && testutil::same_under(g, back, generator::canonical_order(g))) ++ok;
  }
  return {!graphs.empty() && ok == graphs.size(), std::to_string(ok) + "/" + std::to_string(graphs.size()) + " graphs"};
}

Outcome probability_normalization() {
  double worst = 0.0;
  std::size_t leaves = 0;
  int cases = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = testutil::random_params(5, 4, 2, {"d"}, seed, 1.0);
    for (int row : {-1, 0}) {
      std::size_t n = 0;
      const double mass = testutil::enumerate_mass(generator::DecisionScorer(p, row), 1.0, 4, 5, n);
      worst = std::max(worst, std::abs(mass - 1.0));
      leaves += n;
      ++cases;
    }
  }
  return {worst <= 1e-6, std::to_string(cases) + " models, V=5, max 4 nodes, " + std::to_string(leaves) +
                             " sequences, max |mass - 1| = " + scientific(worst)};
}

Outcome gradient_check() {
  SplitMix64 rng(2024);
  int instances = 0;
  int passed = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 24; ++trial) {
    const int vocab = 6 + static_cast<int>(rng.below(3));
    const int hidden = 2 + static_cast<int>(rng.below(3));
    const int rounds = static_cast<int>(rng.below(3));
    auto p = testutil::random_params(vocab, hidden, rounds, {"d", "e"}, 5000 + static_cast<std::uint64_t>(trial));
    auto t = generator::canonicalize_trace(testutil::random_graph(rng, 1 + static_cast<int>(rng.below(4)), vocab),
                                           testutil::gradient_vocab());
    t.dataset_name = trial % 3 == 0 ? "unknown" : (trial % 3 == 1 ? "d" : "e");
    const double ratio = testutil::gradient_check_ratio(t, p);
    worst = std::max(worst, ratio);
    if (ratio <= 1.0) ++passed;
    ++instances;
  }
  return {instances >= 20 && passed == instances,
          std::to_string(passed) + "/" + std::to_string(instances) +
              " instances within 1e-4 relative, worst error at " + fixed(worst, 3) + " of the allowance"};
}

Outcome training() {
  const auto& t = trained();
  const auto& log = t.result.log;
  if (log.size() != 15) return {false, "expected 15 epochs, got " + std::to_string(log.size())};
  const double ratio = log.back().mean_nll / log.front().mean_nll;

  generator::TrainConfig c;
  c.epochs = 200;
  // Documented scaler -> logistic chain, memorized alone: in the five-entry
  // oracle vocabulary (the gate) and in the full whitelist vocabulary.
  auto chain_nll = [&](const filter::NodeVocabulary& vocab) {
    const filter::PipelineGraph chain{"chain", "heart",
                                      {{0, filter::kDataset}, {1, filter::kReadCsv},
                                       {2, vocab.find("StandardScaler").value()},
                                       {3, vocab.find("LogisticRegression").value()}},
                                      {{0, 1}, {1, 2}, {2, 3}}};
    const auto single = generator::canonicalize_trace(chain, vocab);
    return generator::trace_nll(single, generator::train({single}, static_cast<int>(vocab.size()), c).params).nll;
  };
  const auto tiny = filter::NodeVocabulary::from_entries(
      {{"StandardScaler", filter::Category::Preprocessor}, {"LogisticRegression", filter::Category::Estimator}});
  const double single_nll = chain_nll(tiny);
  const double full_nll = chain_nll(mined().vocab);

  std::size_t memorized = 0;
  const auto traces = training_traces();
  for (const auto& tr : traces) {
    const auto r = generator::train({tr}, static_cast<int>(mined().vocab.size()), c);
    if (generator::trace_nll(tr, r.params).nll < 0.1) ++memorized;
  }

  return {t.traces >= 80 && t.seconds <= 300.0 && ratio <= 0.6 && single_nll < 0.1,
          std::to_string(t.traces) + " traces, 15 epochs in " + fixed(t.seconds, 2) + " s, NLL " +
              fixed(log.front().mean_nll, 3) + " -> " + fixed(log.back().mean_nll, 3) + " (ratio " + fixed(ratio, 3) +
              "); single trace after 200 epochs: chain NLL " + fixed(single_nll, 4) + " (|V|=5), " +
              fixed(full_nll, 4) + " (|V|=" + std::to_string(mined().vocab.size()) + "), corpus traces below 0.1 " +
              std::to_string(memorized) + "/" + std::to_string(traces.size())};
}

struct ValidCount {
  std::size_t requested = 0;
  std::size_t valid = 0;
  std::size_t exhausted = 0;
  std::size_t raw_total = 0;
  std::size_t raw_valid = 0;

  double rate() const { return static_cast<double>(valid) / static_cast<double>(std::max<std::size_t>(requested, 1)); }
  double raw_rate() const {
    return static_cast<double>(raw_valid) / static_cast<double>(std::max<std::size_t>(raw_total, 1));
  }
};

// K requested graphs per corpus dataset and K in {3,5,7}, sampled with the
// retry policy; a slot counts when it is filled by a graph with at least one
// registry-valid skeleton for the dataset's task.
ValidCount count_valid(const fs::path& registry) {
  const auto& vocab = mined().vocab;
  const auto& params = trained().result.params;
  const auto reg = skeleton::CapabilityRegistry::load(registry.string());
  ValidCount n;
  for (const auto& f : cli::files_with_extension(kFixtures / "corpus/datasets", ".csv")) {
    const auto name = filter::normalize_dataset_name(f.filename().string());
    const auto table = csv::read_table(f.string(), ',', name);
    const auto task = prep::prepare_dataset(table, table.column_names.back()).task;
    auto mappable = [&](const filter::PipelineGraph& g) {
      return !cli::valid_skeletons(g, vocab, reg, task, 0.0).empty();
    };
    for (std::size_t k : {3u, 5u, 7u}) {
      generator::GenerateOptions o;
      o.k = k;
      o.mode = generator::GenerationMode::Sampled;
      o.seed = 17 + k;
      n.requested += k;

      // Before the retry policy: the first K samples, mappable or not.
      auto raw = o;
      raw.discard_invalid = false;
      raw.max_retries = 0;
      for (const auto& g : generator::generate(params, vocab, name, raw).graphs) {
        ++n.raw_total;
        if (g.valid && mappable(g.graph)) ++n.raw_valid;
      }

      o.accept = mappable;
      try {
        for (const auto& g : generator::generate(params, vocab, name, o).graphs) {
          if (mappable(g.graph)) ++n.valid;
        }
      } catch (const NoValidGraph&) {
        ++n.exhausted;
      }
    }
  }
  return n;
}

Outcome valid_skeleton_rate() {
  const auto flaml = count_valid(kFlaml);
  const auto autosk = count_valid(kAutosklearn);
  return {flaml.rate() >= 0.9,
          "flaml " + std::to_string(flaml.valid) + "/" + std::to_string(flaml.requested) + " requested graphs valid (" +
              fixed(100 * flaml.rate(), 1) + "%, " + fixed(100 * flaml.raw_rate(), 1) + "% before retries, " +
              std::to_string(flaml.exhausted) + " requests exhausted) over 12 datasets, K in {3,5,7}; autosklearn " +
              fixed(100 * autosk.rate(), 1) + "% (" + fixed(100 * autosk.raw_rate(), 1) + "% before retries)"};
}

Outcome embedding_laws() {
  const auto table = csv::read_table((kFixtures / "toy/clinic_visits.csv").string(), ',', "clinic_visits");
  auto shuffled = table;
  shuffled.name = "clinic_visits";
  std::vector<std::size_t> order(table.column_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  std::swap(order[0], order[order.size() / 2]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    shuffled.column_names[i] = table.column_names[order[i]];
    shuffled.columns[i] = table.columns[order[i]];
  }
  const auto a = profile::profile_table(table).embedding;
  const bool permutation = a == profile::profile_table(shuffled).embedding;

  profile::EmbeddingIndex index;
  for (const auto& f : cli::files_with_extension(kFixtures / "corpus/datasets", ".csv")) {
    const auto name = filter::normalize_dataset_name(f.filename().string());
    index.add(profile::profile_table(csv::read_table(f.string(), ',', name)).embedding);
  }
  std::size_t self_hits = 0;
  for (const auto& e : index.entries()) {
    const auto top = index.nearest(e, 1).front();
    if (top.dataset_name == e.dataset_name && top.distance == 0.0) ++self_hits;
  }

  const auto big = csv::read_table((kFixtures / "toy/sensor_log.csv").string(), ',', "sensor_log");
  auto sample = big;
  SplitMix64 rng(31);
  std::vector<std::size_t> rows(big.row_count());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t i = 0; i < 1000; ++i) std::swap(rows[i], rows[i + rng.below(rows.size() - i)]);
  rows.resize(1000);
  std::sort(rows.begin(), rows.end());
  for (std::size_t c = 0; c < big.column_count(); ++c) {
    sample.columns[c].clear();
    for (std::size_t r : rows) sample.columns[c].push_back(big.columns[c][r]);
  }
  const double cosine = 1.0 - profile::cosine_distance(profile::profile_table(big).embedding.vector,
                                                       profile::profile_table(sample).embedding.vector);

  return {permutation && self_hits == index.size() && big.row_count() == 10000 && cosine >= 0.95,
          std::string("permutation ") + (permutation ? "exact" : "differs") + ", self-retrieval " +
              std::to_string(self_hits) + "/" + std::to_string(index.size()) + " at rank 1 distance 0, " +
              std::to_string(big.row_count()) + "-row vs 1000-row cosine " + fixed(cosine, 4)};
}

Outcome budget_arithmetic() {
  const double example = prep::plan_budget(3600, 60, 3).per_graph;
  SplitMix64 rng(4242);
  std::size_t violations = 0;
  const std::size_t trials = 200000;
  for (std::size_t i = 0; i < trials; ++i) {
    const double total = rng.uniform(1e-3, 1e6);
    const double used = rng.uniform() * total * 0.999;
    const std::size_t k = 1 + rng.below(64);
    const auto p = prep::plan_budget(total, used, k);
    if (!(p.per_graph > 0) || static_cast<double>(k) * p.per_graph + used > total) ++violations;
  }
  return {example == 1180.0 && violations == 0, "plan_budget(3600, 60, 3) = " + text::format_number(example) + "; " +
                                                    std::to_string(violations) + " violations of K*per+t <= T in " +
                                                    std::to_string(trials) + " random cases"};
}

Outcome metrics_oracles() {
  struct Case {
    const char* name;
    double got;
    double want;
  };
  using S = std::vector<std::string>;
  const std::vector<Case> cases{
      {"macro_f1 perfect, 3 classes", eval::macro_f1(S{"A", "B", "C", "A"}, S{"A", "B", "C", "A"}), 1.0},
      {"macro_f1 [A,B,A,B] vs [A,A,B,B]", eval::macro_f1(S{"A", "B", "A", "B"}, S{"A", "A", "B", "B"}), 0.5},
      {"macro_f1 all one class", eval::macro_f1(S{"A", "A", "A", "A"}, S{"A", "A", "B", "B"}), 1.0 / 3.0},
      {"r2 perfect", eval::r2({1, 2, 3}, {1, 2, 3}), 1.0},
      {"r2 mean predictor", eval::r2({2, 2, 2}, {1, 2, 3}), 0.0},
      {"r2 [1,2,4] vs [1,2,3]", eval::r2({1, 2, 4}, {1, 2, 3}), 0.5},
      {"mrr all ones", eval::mrr({1, 1, 1}), 1.0},
      {"mrr [1,2,4]", eval::mrr({1, 2, 4}), 1.75 / 3.0},
  };
  std::size_t ok = 0;
  std::string misses;
  for (const auto& c : cases) {
    if (std::abs(c.got - c.want) <= 1e-9) {
      ++ok;
    } else {
      misses += std::string(" ") + c.name + "=" + text::format_number(c.got);
    }
  }
  return {ok == cases.size(), std::to_string(ok) + "/" + std::to_string(cases.size()) + " within 1e-9" + misses};
}

// Mines the fixture corpus and trains a model in the work directory, once.
bool prepare_cli_corpus(std::string& why) {
  static int state = 0;  // 0 not run, 1 ready, 2 failed
  static std::string failure;
  if (state == 0) {
    const int mine = run_cli("mine --scripts " + quote(kFixtures / "corpus/scripts") + " --datasets " +
                                 quote(kFixtures / "corpus/datasets") + " --sidecar " +
                                 quote(kFixtures / "corpus/sidecar.json") + " --whitelist " + quote(kWhitelist),
                             "mine");
    const int train = mine == 0 ? run_cli("train --seed 7 --out model_a.pgen", "train_a") : -1;
    state = mine == 0 && train == 0 ? 1 : 2;
    if (state == 2) failure = "mine exit " + std::to_string(mine) + ", train exit " + std::to_string(train);
  }
  why = failure;
  return state == 1;
}

// The epoch and mean_nll columns of a loss log; the seconds column is wall time.
std::vector<std::string> loss_values(const fs::path& p) {
  std::vector<std::string> out;
  std::istringstream in(read_bytes(p));
  std::string line;
  while (std::getline(in, line)) out.push_back(line.substr(0, line.rfind(',')));
  return out;
}

std::string recommend_args(const std::string& model, const std::string& out) {
  return "recommend " + quote(kFixtures / "toy/clinic_visits.csv") + " --target disease --registry " + quote(kFlaml) +
         " --model " + model + " --mode greedy --seed 7 --out " + out;
}

Outcome recommend_latency() {
  std::string why;
  if (!prepare_cli_corpus(why)) return {false, why};
  const auto start = Clock::now();
  const int code = run_cli(recommend_args("model_a.pgen", "latency.json"), "latency");
  const double seconds = seconds_since(start);
  std::size_t skeletons = 0;
  if (code == 0) skeletons = testutil::read_json((workdir() / "latency.json").string()).at("skeletons").size();
  return {code == 0 && skeletons > 0 && seconds < 30.0,
          "5000-row CSV, exit " + std::to_string(code) + ", " + std::to_string(skeletons) + " skeletons in " +
              fixed(seconds, 3) + " s end to end"};
}

Outcome determinism() {
  std::string why;
  if (!prepare_cli_corpus(why)) return {false, why};
  const int train = run_cli("train --seed 7 --out model_b.pgen", "train_b");
  if (train != 0) return {false, "second train exit " + std::to_string(train)};
  const bool model_same = read_bytes(workdir() / "model_a.pgen") == read_bytes(workdir() / "model_b.pgen");
  const auto loss_a = loss_values(workdir() / "model_a.pgen.loss.csv");
  const bool loss_same = loss_a.size() == 16 && loss_a == loss_values(workdir() / "model_b.pgen.loss.csv");
  const int r1 = run_cli(recommend_args("model_a.pgen", "rec_a.json"), "rec_a");
  const int r2 = run_cli(recommend_args("model_a.pgen", "rec_b.json"), "rec_b");
  const bool rec_same = r1 == 0 && r2 == 0 &&
                        read_bytes(workdir() / "rec_a.json") == read_bytes(workdir() / "rec_b.json") &&
                        !read_bytes(workdir() / "rec_a.json").empty();
  auto yn = [](bool b) { return b ? "identical" : "differ"; };
  return {model_same && loss_same && rec_same, std::string("model bytes ") + yn(model_same) + ", loss values " +
                                                   yn(loss_same) + ", greedy recommendation " + yn(rec_same)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"filtering-reduction", filtering_reduction},
      {"trace-round-trip", trace_round_trip},
      {"probability-normalization", probability_normalization},
      {"gradient-check", gradient_check},
      {"training", training},
      {"valid-skeleton-rate", valid_skeleton_rate},
      {"embedding-laws", embedding_laws},
      {"budget-arithmetic", budget_arithmetic},
      {"metrics-oracles", metrics_oracles},
      {"recommend-latency", recommend_latency},
      {"determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
