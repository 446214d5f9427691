#include "liftlab/json_io.hpp"

namespace liftlab {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json trial_to_json(const TrialOutcome& o) {
  Json j;
  j["seed"] = o.seed;
  j["h"] = o.h;
  j["k"] = o.k;
  j["s"] = o.s;
  j["status"] = std::string(to_string(o.status));
  j["cycles"] = o.stats.cycles;
  j["r0"] = o.stats.r0;
  j["T"] = o.stats.iterations;
  j["pT"] = o.stats.pale_final;
  j["chunks"] = optional_json(o.stats.chunks);
  j["max_chunk"] = optional_json(o.stats.max_chunk);
  j["chunk_cycles"] = optional_json(o.stats.chunk_cycles);
  j["millis"] = o.millis;
  return j;
}

Json chunk_graph_to_json(const ChunkGraph& graph) {
  Json sizes = Json::array();
  Json ids = Json::array();
  for (const auto& c : graph.chunks) {
    sizes.push_back(c.size);
    ids.push_back(c.id);
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    Json ends = Json::array();
    for (auto end : e.ends) ends.push_back(graph.chunks[end].id);
    edges.push_back(std::move(ends));
  }
  Json j;
  j["chunks"] = std::move(sizes);
  j["ids"] = std::move(ids);
  j["edges"] = std::move(edges);
  return j;
}

Json estimate_to_json(const EstimateCI& ci) {
  Json j;
  j["estimate"] = ci.estimate;
  j["lower"] = ci.lower;
  j["upper"] = ci.upper;
  j["count"] = ci.successes;
  j["trials"] = ci.trials;
  return j;
}

Json summary_to_json(const HSummary& s, int k, int stable) {
  Json j;
  j["h"] = s.h;
  j["k"] = k;
  j["s"] = stable;
  j["trials"] = s.trials;
  j["success"] = estimate_to_json(s.rate(TrialStatus::Success));
  Json failures;
  for (std::size_t i = 1; i < kTrialStatusCount; ++i) {
    const auto status = static_cast<TrialStatus>(i);
    failures[std::string(to_string(status))] = estimate_to_json(s.rate(status));
  }
  j["failures"] = std::move(failures);
  j["mean_cycles"] = s.cycles.mean();
  j["cycles_se"] = s.cycles.standard_error();
  j["mean_T"] = s.iterations.mean();
  j["chunk_trials"] = s.chunk_trials;
  j["mean_max_chunk"] = s.max_chunk.mean();
  j["mean_chunk_cycles"] = s.chunk_cycles.mean();
  j["chunk_cycle_frequency"] = estimate_to_json(wilson_interval(s.chunk_cyclic, s.chunk_trials));
  j["max_chunk_violations"] = estimate_to_json(s.max_chunk_violation_rate());
  j["early_stops"] = s.early_stops;
  j["improper_successes"] = s.improper_successes;
  return j;
}

}  // namespace liftlab
