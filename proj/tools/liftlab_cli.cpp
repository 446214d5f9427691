// liftlab: random lifts of join graphs, their three-colouring, and the
// Monte Carlo checks behind it.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "liftlab/base_graph.hpp"
#include "liftlab/trials.hpp"

using namespace liftlab::cli;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIFTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "liftlab: ignoring unparsable LIFTLAB_SEED='" << env << "'\n";
    }
  }
  return 0;
}

void add_graph_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--k", c.k, "cycle length (>= 3)")->capture_default_str();
  cmd->add_option("--s", c.s, "stable set size (>= 1)")->capture_default_str();
  cmd->add_option("--seed", c.seed, "random seed (default: $LIFTLAB_SEED or 0)");
}

void add_output_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--format", c.format, "jsonl or csv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"jsonl", Format::Jsonl}, {"csv", Format::Csv}}));
  cmd->add_option("--output,-o", c.output, "write to file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  config.seed = default_seed();

  CLI::App app{"liftlab - random lifts of C_k joined with a stable set, and their 3-colouring"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "emit a random lift (one permutation per base edge)");
  add_graph_options(gen, config);
  gen->add_option("--h", config.h, "fibre size")->capture_default_str();
  gen->add_flag("--edge-list", config.edge_list, "emit 'u v' lift edges instead");
  gen->add_flag("--upfront", config.upfront, "draw every permutation upfront");
  gen->add_option("--output,-o", config.output, "write to file instead of standard output");

  auto* colour = app.add_subcommand("colour", "run the three-colouring procedure once");
  add_graph_options(colour, config);
  add_output_options(colour, config);
  colour->add_option("--h", config.h, "fibre size")->capture_default_str();
  colour->add_flag("--timing", config.timing, "report wall-clock millis (otherwise 0)");
  colour->add_flag("--upfront", config.upfront, "draw every permutation upfront");
  colour->add_option("--chunk-graph", config.chunk_graph, "write the final chunk graph JSON here");

  auto* oracle = app.add_subcommand("oracle", "exact chromatic number of a given or generated lift");
  add_graph_options(oracle, config);
  oracle->add_option("--h", config.h, "fibre size of the generated lift")->capture_default_str();
  oracle->add_option("--input", config.input, "lift serialization or 'u v' edge list")->check(CLI::ExistingFile);
  oracle->add_option("--cap", config.oracle_cap, "largest colour count tried")->capture_default_str();
  oracle->add_option("--max-vertices", config.oracle_max_vertices, "refuse larger graphs")->capture_default_str();
  oracle->add_flag("--force", config.force, "run even above --max-vertices");
  oracle->add_option("--output,-o", config.output, "write to file instead of standard output");

  auto* sweep = app.add_subcommand("sweep", "many trials over a list of fibre sizes");
  add_graph_options(sweep, config);
  add_output_options(sweep, config);
  sweep->add_option("--h-list", config.h_list, "fibre sizes")->delimiter(',')->required();
  sweep->add_option("--trials", config.trials, "trials per fibre size")->capture_default_str();
  sweep->add_option("--workers", config.workers, "worker threads")->capture_default_str();
  sweep->add_option("--summary", config.summary, "write per-h summary JSON lines here");
  sweep->add_flag("--summary-only", config.summary_only, "print summaries instead of trial records");
  sweep->add_flag("--timing", config.timing, "report wall-clock millis (otherwise 0)");
  sweep->add_flag("--upfront", config.upfront, "draw every permutation upfront");

  auto* lemma = app.add_subcommand("lemma", "run one of the distributional experiments");
  lemma->add_option("name", config.lemma, "experiment")
      ->required()
      ->check(CLI::IsMember({"cycles", "gaps-cont", "gaps-disc", "subset-gaps", "max-chunk", "chunk-cycles"}));
  add_graph_options(lemma, config);
  add_output_options(lemma, config);
  lemma->add_option("--h", config.h, "fibre size (cycles)")->capture_default_str();
  lemma->add_option("--h-list", config.h_list, "fibre sizes (max-chunk, chunk-cycles)")->delimiter(',');
  lemma->add_option("--trials", config.trials, "trials")->capture_default_str();
  lemma->add_option("--n", config.n, "points per sample (gap experiments)")->capture_default_str();
  lemma->add_option("--samples", config.samples, "samples (gap experiments)")->capture_default_str();
  lemma->add_option("--N", config.N_list, "ground set sizes (discrete gaps)")->delimiter(',');
  lemma->add_option("--calibrate-a", config.calibration_a, "a grid used to fit c")->delimiter(',');
  lemma->add_option("--check-a", config.held_out_a, "held-out a grid")->delimiter(',');
  lemma->add_option("--workers", config.workers, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (config.N_list.empty()) config.N_list = {1000, 10000};
  if (config.calibration_a.empty()) config.calibration_a = {1.0, 3.0, 6.0};
  if (config.held_out_a.empty()) config.held_out_a = {2.0, 4.0, 8.0};
  if (config.lemma == "max-chunk" || config.lemma == "chunk-cycles")
    if (config.h_list.empty()) config.h_list = {1000, 10000, 100000};

  for (auto* cmd : app.get_subcommands()) config.subcommand = cmd->get_name();

  std::ofstream file;
  std::ostream* out = &std::cout;
  try {
    validate(config);
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw ConfigError("cannot write " + config.output);
      out = &file;
    }
    if (config.subcommand == "gen") return run_gen(config, *out);
    if (config.subcommand == "colour") return run_colour(config, *out);
    if (config.subcommand == "oracle") return run_oracle(config, *out);
    if (config.subcommand == "sweep") return run_sweep(config, *out);
    return run_lemma(config, *out);
  } catch (const ConfigError& e) {
    std::cerr << "liftlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const liftlab::ParseError& e) {
    std::cerr << "liftlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const liftlab::ResourceCapExceeded& e) {
    std::cerr << "liftlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "liftlab: " << e.what() << '\n';
    return kExitUsage;
  }
}
