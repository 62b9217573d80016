#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pipeforge/cli/commands.hpp"

using namespace pipeforge;
using namespace pipeforge::cli;

namespace {

struct Globals {
  fs::path workdir = ".";
  fs::path config_file;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> epochs;
  std::optional<std::size_t> k;
  fs::path model, index, vocabulary, registry, whitelist;
};

Config resolve_config(const Globals& g, const Overrides& o) {
  Config c;
#ifdef PIPEFORGE_DEFAULT_WHITELIST
  c.whitelist = PIPEFORGE_DEFAULT_WHITELIST;
#endif
#ifdef PIPEFORGE_DEFAULT_REGISTRY
  c.registry = PIPEFORGE_DEFAULT_REGISTRY;
#endif
  if (!g.config_file.empty()) c = load_config(under(g.workdir, g.config_file), c);
  apply_environment(c);
  if (o.seed) c.seed = *o.seed;
  if (o.epochs) c.epochs = *o.epochs;
  if (o.k) c.k = *o.k;
  if (!o.model.empty()) c.model = o.model;
  if (!o.index.empty()) c.index = o.index;
  if (!o.vocabulary.empty()) c.vocabulary = o.vocabulary;
  if (!o.registry.empty()) c.registry = o.registry;
  if (!o.whitelist.empty()) c.whitelist = o.whitelist;
  c.corpus_dir = under(g.workdir, c.corpus_dir);
  c.model = under(g.workdir, c.model);
  c.index = under(g.workdir, c.index);
  c.vocabulary = under(g.workdir, c.vocabulary);
  c.registry = under(g.workdir, c.registry);
  c.whitelist = under(g.workdir, c.whitelist);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pipeforge: mine ML scripts, train a pipeline graph generator, recommend skeletons"};
  app.require_subcommand(1);
  Globals g;
  Overrides ov;
  app.add_option("--workdir", g.workdir, "Root for every relative path");
  app.add_option("--config", g.config_file, "key=value configuration file");

  MineOptions mine;
  auto* mine_cmd = app.add_subcommand("mine", "Analyze scripts, filter graphs and index datasets");
  mine_cmd->add_option("--scripts", mine.scripts_dir, "Directory of *.py scripts")->required();
  mine_cmd->add_option("--datasets", mine.datasets_dir, "Directory of *.csv datasets")->required();
  mine_cmd->add_option("--sidecar", mine.sidecar, "JSON object mapping script file names to dataset names");
  mine_cmd->add_option("--whitelist", ov.whitelist, "Operator whitelist JSON");
  mine_cmd->add_option("--out", mine.out_dir, "Corpus output directory (default: corpus_dir)");

  TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "Train the graph generator on a mined corpus");
  train_cmd->add_option("--corpus", train.corpus, "Pipeline-graph JSON-lines file");
  train_cmd->add_option("--vocabulary", ov.vocabulary, "Vocabulary JSON");
  train_cmd->add_option("--epochs", ov.epochs, "Training epochs")->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--seed", ov.seed, "Random seed");
  train_cmd->add_option("--out", ov.model, "Model file to write");
  train_cmd->add_option("--loss", train.loss_out, "Loss CSV (default: <model>.loss.csv)");
  train_cmd->add_flag("--include-unknown", train.include_unknown, "Train on graphs without a dataset name too");

  RecommendOptions rec;
  std::string mode = "greedy";
  double budget = 0.0;
  fs::path rec_out;
  auto* rec_cmd = app.add_subcommand("recommend", "Recommend pipeline skeletons for a dataset");
  rec_cmd->add_option("dataset", rec.dataset_csv, "Dataset CSV with a header row")->required();
  rec_cmd->add_option("--target", rec.target, "Target column")->required();
  auto* budget_opt = rec_cmd->add_option("--budget", budget, "Total time budget T in seconds");
  rec_cmd->add_option("--k", ov.k, "Number of graphs K")->check(CLI::PositiveNumber);
  rec_cmd->add_option("--registry", ov.registry, "Capability registry JSON (default: FLAML)");
  rec_cmd->add_option("--model", ov.model, "Model file");
  rec_cmd->add_option("--index", ov.index, "Embedding index file");
  rec_cmd->add_option("--vocabulary", ov.vocabulary, "Vocabulary JSON");
  rec_cmd->add_option("--mode", mode, "greedy or sampled")->check(CLI::IsMember({"greedy", "sampled"}));
  rec_cmd->add_option("--seed", ov.seed, "Sampling seed");
  rec_cmd->add_option("--out", rec_out, "Skeleton JSON file (default: standard output)");
  rec_cmd->add_option("--prepared-dir", rec.prepared_dir, "Directory for the prepared matrix and manifest");

  EvaluateOptions ev;
  auto* ev_cmd = app.add_subcommand("evaluate", "Summarize optimizer result files");
  ev_cmd->add_option("results", ev.results_dir, "Directory of results JSON files")->required();
  ev_cmd->add_option("--out", ev.out_dir, "Output directory (default: evaluation)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  return run_guarded(
      [&] {
        const Config c = resolve_config(g, ov);
        if (mine_cmd->parsed()) {
          mine.scripts_dir = under(g.workdir, mine.scripts_dir);
          mine.datasets_dir = under(g.workdir, mine.datasets_dir);
          mine.sidecar = under(g.workdir, mine.sidecar);
          mine.out_dir = mine.out_dir.empty() ? c.corpus_dir : under(g.workdir, mine.out_dir);
          const auto s = cmd_mine(mine, c);
          for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
          std::cout << s.to_json().dump(2) << '\n';
        } else if (train_cmd->parsed()) {
          train.corpus = train.corpus.empty() ? c.corpus_dir / kPipelineGraphsFile : under(g.workdir, train.corpus);
          train.vocabulary = c.vocabulary_path();
          train.model_out = c.model;
          train.loss_out = train.loss_out.empty() ? fs::path(c.model.string() + ".loss.csv")
                                                  : under(g.workdir, train.loss_out);
          const auto s = cmd_train(train, c);
          if (s.excluded_unknown > 0) {
            std::cerr << "excluded " << s.excluded_unknown << " graphs without a dataset name\n";
          }
          for (const auto& e : s.log) {
            std::cerr << "epoch " << e.epoch << " mean_nll " << text::format_number(e.mean_nll) << '\n';
          }
          const double final_nll = s.log.empty() ? 0.0 : s.log.back().mean_nll;
          std::cout << "trained on " << s.traces << " traces; final mean NLL " << text::format_number(final_nll)
                    << '\n';
        } else if (rec_cmd->parsed()) {
          rec.dataset_csv = under(g.workdir, rec.dataset_csv);
          rec.prepared_dir = under(g.workdir, rec.prepared_dir);
          if (*budget_opt) rec.budget_seconds = budget;
          rec.mode = mode == "sampled" ? generator::GenerationMode::Sampled : generator::GenerationMode::Greedy;
          const auto s = cmd_recommend(rec, c);
          for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
          std::cerr << "seeded from '" << s.seed_dataset << "'; " << s.document.skeletons.size()
                    << " skeletons; t = " << text::format_number(s.elapsed_seconds) << " s\n";
          const std::string doc = skeleton::to_json(s.document).dump(2) + "\n";
          if (rec_out.empty()) {
            std::cout << doc;
          } else {
            const auto path = under(g.workdir, rec_out);
            if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
            std::ofstream out(path, std::ios::binary);
            if (!out) throw FormatError("cannot write " + path.string());
            out << doc;
          }
        } else if (ev_cmd->parsed()) {
          ev.results_dir = under(g.workdir, ev.results_dir);
          ev.out_dir = under(g.workdir, ev.out_dir.empty() ? fs::path("evaluation") : ev.out_dir);
          std::cout << cmd_evaluate(ev).to_json().dump(2) << '\n';
        }
      },
      std::cerr);
}
