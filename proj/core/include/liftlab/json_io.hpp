#pragma once

#include <nlohmann/json.hpp>

#include "liftlab/chunk_graph.hpp"
#include "liftlab/colouring.hpp"
#include "liftlab/stats.hpp"
#include "liftlab/trials.hpp"

namespace liftlab {

using Json = nlohmann::ordered_json;

/// {seed, h, k, s, status, cycles, r0, T, pT, chunks, max_chunk,
///  chunk_cycles, millis}; chunk fields are null when Phase II did not
/// complete.
Json trial_to_json(const TrialOutcome& outcome);

/// {chunks: [sizes], ids: [chunk ids], edges: [[id, id, ...], ...]}
Json chunk_graph_to_json(const ChunkGraph& graph);

Json estimate_to_json(const EstimateCI& ci);

/// Per-h aggregate: rates with Wilson intervals, failure breakdown and
/// means.
Json summary_to_json(const HSummary& summary, int k, int s);

}  // namespace liftlab
