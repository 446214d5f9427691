#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftlab::cli {

enum class Format { Jsonl, Csv };

struct RunConfig {
  std::string subcommand;
  std::string lemma;  // experiment name for `lemma`
  int k = 3;
  int s = 2;
  std::size_t h = 1000;
  std::vector<std::size_t> h_list;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string output;   // empty: stdout
  std::string summary;  // sweep summary file
  std::string chunk_graph;  // colour: chunk graph JSON file
  bool summary_only = false;
  Format format = Format::Jsonl;
  int oracle_cap = 5;
  std::size_t oracle_max_vertices = 60;
  bool force = false;
  std::string input;  // oracle input file
  std::size_t workers = 1;
  bool timing = false;
  bool upfront = false;
  bool edge_list = false;  // gen: emit a plain edge list
  // gap experiments
  std::size_t n = 100;
  std::size_t samples = 10000;
  std::vector<std::int64_t> N_list;
  std::vector<double> calibration_a;
  std::vector<double> held_out_a;
};

/// Thrown for configurations rejected before any sampling (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exit codes: 0 ok, 2 usage/config error, 3 experiment assertion failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAssertion = 3;

void validate(const RunConfig& config);

int run_gen(const RunConfig& config, std::ostream& out);
int run_colour(const RunConfig& config, std::ostream& out);
int run_oracle(const RunConfig& config, std::ostream& out);
int run_sweep(const RunConfig& config, std::ostream& out);
int run_lemma(const RunConfig& config, std::ostream& out);

}  // namespace liftlab::cli
