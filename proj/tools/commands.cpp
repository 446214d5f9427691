#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liftlab/base_graph.hpp"
#include "liftlab/colouring.hpp"
#include "liftlab/experiments.hpp"
#include "liftlab/exposure.hpp"
#include "liftlab/json_io.hpp"
#include "liftlab/oracle.hpp"
#include "liftlab/trials.hpp"

namespace liftlab::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* csv_field(const Json& v, std::string& scratch) {
  scratch = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
  return scratch.c_str();
}

void write_csv_row(std::ostream& out, const Json& row, bool header) {
  std::string scratch;
  bool first = true;
  for (const auto& [key, value] : row.items()) {
    out << (first ? "" : ",") << (header ? key.c_str() : csv_field(value, scratch));
    first = false;
  }
  out << '\n';
}

void emit(std::ostream& out, const Json& row, Format format, bool& header_done) {
  if (format == Format::Csv) {
    if (!header_done) write_csv_row(out, row, true);
    header_done = true;
    write_csv_row(out, row, false);
  } else {
    out << row.dump() << '\n';
  }
}

LiftGraph generate_lift(const RunConfig& c) {
  ExposureState state(BaseGraph::join(c.k, c.s), c.h, c.seed,
                      c.upfront ? ExposureSchedule::Upfront : ExposureSchedule::Lazy);
  return state.expose_all();
}

Json bound_point_json(const BoundPoint& p, double c) {
  Json j;
  j["a"] = p.a;
  j["N"] = p.N;
  j["empirical"] = p.frequency;
  j["bound"] = bound_value(p, c);
  return j;
}

Json bound_check_json(const std::string& name, const RunConfig& config, const BoundCheck& check) {
  Json j;
  j["experiment"] = name;
  j["seed"] = config.seed;
  j["n"] = config.n;
  j["samples"] = config.samples;
  j["c"] = check.c;
  Json cal = Json::array();
  for (const auto& p : check.calibration) cal.push_back(bound_point_json(p, check.c));
  Json held = Json::array();
  for (const auto& p : check.held_out) held.push_back(bound_point_json(p, check.c));
  j["calibration"] = std::move(cal);
  j["held_out"] = std::move(held);
  j["violations"] = check.violations;
  j["passed"] = check.violations == 0;
  return j;
}

int emit_bound_check(const std::string& name, const RunConfig& config, const BoundCheck& check,
                     std::ostream& out) {
  if (config.format == Format::Csv) {
    out << "a,N,empirical,exact_or_bound\n";
    for (const auto& p : check.held_out)
      out << p.a << ',' << p.N << ',' << p.frequency << ',' << bound_value(p, check.c) << '\n';
  } else {
    out << bound_check_json(name, config, check).dump() << '\n';
  }
  return check.violations == 0 ? kExitOk : kExitAssertion;
}

SweepConfig sweep_config(const RunConfig& c) {
  SweepConfig sc;
  sc.k = c.k;
  sc.s = c.s;
  sc.h_values = c.h_list.empty() ? std::vector<std::size_t>{c.h} : c.h_list;
  sc.trials = c.trials;
  sc.master_seed = c.seed;
  sc.workers = c.workers;
  sc.run_options.timing = c.timing;
  sc.run_options.schedule = c.upfront ? ExposureSchedule::Upfront : ExposureSchedule::Lazy;
  return sc;
}

int trend_lemma(const std::string& name, const RunConfig& config, std::ostream& out) {
  const auto summaries = run_trials(sweep_config(config));
  std::vector<EstimateCI> rates;
  Json per_h = Json::array();
  for (const auto& s : summaries) {
    const EstimateCI rate = name == "max-chunk" ? s.max_chunk_violation_rate()
                                                : wilson_interval(s.chunk_cyclic, s.chunk_trials);
    rates.push_back(rate);
    Json row;
    row["h"] = s.h;
    row["chunk_trials"] = s.chunk_trials;
    row["rate"] = estimate_to_json(rate);
    if (name == "max-chunk")
      row["mean_max_chunk"] = s.max_chunk.mean();
    else
      row["mean_chunk_cycles"] = s.chunk_cycles.mean();
    per_h.push_back(std::move(row));
  }
  const bool ok = nonincreasing_up_to_overlap(rates);
  Json j;
  j["experiment"] = name;
  j["seed"] = config.seed;
  j["k"] = config.k;
  j["s"] = config.s;
  j["trials"] = config.trials;
  j["per_h"] = std::move(per_h);
  j["passed"] = ok;
  out << j.dump() << '\n';
  return ok ? kExitOk : kExitAssertion;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.k < 3) throw ConfigError("--k must be at least 3");
  if (c.s < 1) throw ConfigError("--s must be at least 1");
  if (c.h < 1) throw ConfigError("--h must be positive");
  if (std::find(c.h_list.begin(), c.h_list.end(), std::size_t{0}) != c.h_list.end())
    throw ConfigError("--h-list entries must be positive");
  if (c.trials < 1) throw ConfigError("--trials must be positive");
  if (c.workers < 1) throw ConfigError("--workers must be positive");
  if (c.oracle_cap < 1) throw ConfigError("--cap must be positive");
  if (c.n < 1) throw ConfigError("--n must be positive");
  if (c.samples < 30) throw ConfigError("--samples must be at least 30");
  for (auto N : c.N_list)
    if (N < static_cast<std::int64_t>(c.n)) throw ConfigError("every N must be at least n");
  for (double a : c.calibration_a)
    if (!(a > 0)) throw ConfigError("calibration a values must be positive");
  for (double a : c.held_out_a)
    if (!(a > 0)) throw ConfigError("held-out a values must be positive");
}

int run_gen(const RunConfig& c, std::ostream& out) {
  const LiftGraph lift = generate_lift(c);
  if (c.edge_list) {
    lift.for_each_edge([&](LiftVertex a, LiftVertex b) { out << a << ' ' << b << '\n'; });
  } else {
    out << lift.serialize();
  }
  return kExitOk;
}

int run_colour(const RunConfig& c, std::ostream& out) {
  RunOptions options;
  options.timing = c.timing;
  options.schedule = c.upfront ? ExposureSchedule::Upfront : ExposureSchedule::Lazy;
  options.keep_chunk_graph = !c.chunk_graph.empty();
  const TrialOutcome outcome = run(BaseGraph::join(c.k, c.s), c.h, c.seed, options);
  if (options.keep_chunk_graph) {
    std::ofstream file(c.chunk_graph);
    if (!file) throw ConfigError("cannot write " + c.chunk_graph);
    file << (outcome.chunk_graph ? chunk_graph_to_json(*outcome.chunk_graph) : Json(nullptr)).dump() << '\n';
  }
  bool header = false;
  emit(out, trial_to_json(outcome), c.format, header);
  return kExitOk;
}

int run_oracle(const RunConfig& c, std::ostream& out) {
  SimpleGraph graph;
  Json j;
  if (!c.input.empty()) {
    const std::string text = read_file(c.input);
    if (text.find(':') != std::string::npos)
      graph = SimpleGraph::from_lift(LiftGraph::parse(text, BaseGraph::join(c.k, c.s)));
    else
      graph = SimpleGraph::parse_edge_list(text);
    j["input"] = c.input;
  } else {
    graph = SimpleGraph::from_lift(generate_lift(c));
    j["seed"] = c.seed;
    j["h"] = c.h;
    j["k"] = c.k;
    j["s"] = c.s;
  }
  if (graph.vertex_count() > c.oracle_max_vertices && !c.force)
    throw ConfigError("graph has " + std::to_string(graph.vertex_count()) +
                      " vertices; the exact oracle is limited to " + std::to_string(c.oracle_max_vertices) +
                      " (pass --force to override)");
  const auto chi = chromatic_number(graph, c.oracle_cap);
  j["vertices"] = graph.vertex_count();
  j["edges"] = graph.edge_count();
  j["cap"] = c.oracle_cap;
  j["chromatic_number"] = chi ? Json(*chi) : Json(nullptr);
  j["exceeds_cap"] = !chi.has_value();
  out << j.dump() << '\n';
  return kExitOk;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  const SweepConfig sc = sweep_config(c);
  bool header = false;
  std::function<void(const TrialOutcome&)> sink;
  if (!c.summary_only) sink = [&](const TrialOutcome& o) { emit(out, trial_to_json(o), c.format, header); };
  const auto summaries = run_trials(sc, sink);

  std::ofstream summary_file;
  if (!c.summary.empty()) {
    summary_file.open(c.summary);
    if (!summary_file) throw ConfigError("cannot write " + c.summary);
  }
  for (const auto& s : summaries) {
    const Json j = summary_to_json(s, c.k, c.s);
    if (c.summary_only) out << j.dump() << '\n';
    if (summary_file.is_open()) summary_file << j.dump() << '\n';
  }
  return kExitOk;
}

int run_lemma(const RunConfig& c, std::ostream& out) {
  const std::string& name = c.lemma;
  if (name == "cycles") {
    const auto r = cycle_count_experiment(c.h, c.trials, c.k, c.seed, c.workers);
    const bool ok = std::abs(r.z) <= 3.0;
    Json j;
    j["experiment"] = name;
    j["seed"] = c.seed;
    j["h"] = r.h;
    j["trials"] = r.trials;
    j["mean"] = r.mean;
    j["standard_error"] = r.standard_error;
    j["expected"] = r.expected;
    j["z"] = std::isfinite(r.z) ? Json(r.z) : Json(nullptr);
    j["passed"] = ok;
    out << j.dump() << '\n';
    return ok ? kExitOk : kExitAssertion;
  }
  if (name == "gaps-cont") {
    const auto r = continuous_gap_experiment(c.n, c.samples, c.seed, c.workers);
    const bool ok = r.min_p > 0.01;
    if (c.format == Format::Csv) {
      out << "a,empirical,exact_or_bound\n";
      for (const auto& p : r.curve) out << p.a << ',' << p.empirical << ',' << p.reference << '\n';
    } else {
      Json j;
      j["experiment"] = name;
      j["seed"] = c.seed;
      j["n"] = r.n;
      j["samples"] = r.samples;
      j["min_p"] = r.min_p;
      Json ps = Json::array();
      for (const auto& t : r.per_gap) ps.push_back(t.p_value);
      j["p_values"] = std::move(ps);
      j["exchangeability_p"] = r.exchangeability.p_value;
      j["passed"] = ok;
      out << j.dump() << '\n';
    }
    return ok ? kExitOk : kExitAssertion;
  }
  if (name == "gaps-disc" || name == "subset-gaps") {
    const bool subset = name == "subset-gaps";
    auto measure = [&](const std::vector<double>& as, std::uint64_t salt) {
      return subset ? subset_gap_frequencies(c.n, c.N_list, as, c.samples, c.seed ^ salt, c.workers)
                    : discrete_gap_frequencies(c.n, c.N_list, as, c.samples, c.seed ^ salt, c.workers);
    };
    const BoundCheck check = check_bound(measure(c.calibration_a, 0xCA11), measure(c.held_out_a, 0x4E1D));
    return emit_bound_check(name, c, check, out);
  }
  if (name == "max-chunk" || name == "chunk-cycles") return trend_lemma(name, c, out);
  throw ConfigError("unknown experiment '" + name + "'");
}

}  // namespace liftlab::cli
