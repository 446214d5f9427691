#include "liftlab/colouring.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "liftlab/union_find.hpp"

namespace liftlab {

namespace {

constexpr std::array<std::string_view, kTrialStatusCount> kStatusNames = {
    "Success",         "FailPhase1TooManyCycles", "FailStep3DoubleRed",
    "FailStep43PaleCollision", "FailAdjacentReds", "FailStep7Cycle",
};

// Exposes the join edges of cycle-side vertex u (all of them, or all but
// the one towards stable fibre `skip`) and returns the stable-side
// endpoints in base-edge order.
std::vector<LiftVertex> expose_join_edges(ExposureState& state, LiftVertex u, int skip) {
  const BaseGraph& base = state.base();
  const int i = state.project(u);
  const std::uint32_t j = state.fibre_index(u);
  std::vector<LiftVertex> out;
  for (int b = 0; b < base.stable_size(); ++b) {
    if (b == skip) continue;
    const std::uint32_t q = state.expose(base.join_edge(i, b), Side::Tail, j);
    out.push_back(state.vertex(base.stable_vertex(b), q));
  }
  return out;
}

DrawRecord draw_record(const ExposureState& state, const ColouringState& colouring, LiftVertex u) {
  const int fibre = state.project(u);
  const std::uint32_t j = state.fibre_index(u);
  std::uint32_t below = 0;
  std::uint32_t reds = 0;
  for (std::uint32_t q = 0; q < state.fibre_size(); ++q) {
    if (!colouring.is_red(state.vertex(fibre, q))) continue;
    ++reds;
    below += q < j;
  }
  return {fibre, j, j - below, static_cast<std::uint32_t>(state.fibre_size()) - reds};
}

}  // namespace

std::string_view to_string(TrialStatus status) {
  return kStatusNames[static_cast<std::size_t>(status)];
}

std::optional<TrialStatus> parse_status(std::string_view name) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i)
    if (kStatusNames[i] == name) return static_cast<TrialStatus>(i);
  return std::nullopt;
}

void ColouringState::paint(LiftVertex v, Colour c) {
  if (colour_[v] != Colour::None) throw std::logic_error("vertex recoloured");
  colour_[v] = c;
}

std::size_t loop_iterations(std::size_t h) {
  auto t = static_cast<std::size_t>(std::cbrt(static_cast<double>(h)));
  while (t > 0 && t * t * t > h) --t;
  while ((t + 1) * (t + 1) * (t + 1) <= h) ++t;
  return t;
}

double cycle_threshold(std::size_t h) {
  const double l = std::log(static_cast<double>(h));
  return l * l;
}

std::optional<TrialStatus> phase1(ExposureState& state, ColouringState& colouring) {
  const BaseGraph& base = state.base();
  const std::size_t h = state.fibre_size();
  for (int i = 0; i < base.cycle_length(); ++i)
    if (!state.is_complete(base.cycle_edge(i)))
      throw std::logic_error("cycle edges must be fully exposed before phase 1");

  // Walk once around the cycle fibres from x_1; each orbit of the walk map
  // is one cycle of the lifted cycle part, entered first at its smallest
  // index over x_1.
  std::vector<bool> seen(h, false);
  std::vector<LiftVertex> reds;
  for (std::uint32_t start = 0; start < h; ++start) {
    if (seen[start]) continue;
    reds.push_back(state.vertex(base.cycle_vertex(0), start));
    LiftVertex v = state.vertex(base.cycle_vertex(0), start);
    do {
      seen[state.fibre_index(v)] = true;
      for (int i = 0; i < base.cycle_length(); ++i) v = state.cycle_next(v);
    } while (!seen[state.fibre_index(v)]);
  }

  colouring.cycle_count = reds.size();
  colouring.cycle_threshold = cycle_threshold(h);
  if (static_cast<double>(reds.size()) > colouring.cycle_threshold)
    return TrialStatus::FailPhase1TooManyCycles;

  for (LiftVertex r : reds) colouring.paint(r, Colour::Red);
  colouring.initial_reds = std::move(reds);
  return std::nullopt;
}

std::optional<TrialStatus> phase2_setup(ExposureState& state, ColouringState& colouring) {
  if (colouring.initial_reds.empty())
    throw std::logic_error("phase 2 needs at least one phase-1 red vertex");
  for (LiftVertex r : colouring.initial_reds) {
    for (LiftVertex y : expose_join_edges(state, r, -1)) {
      if (++colouring.red_neighbours[y] >= 2) return TrialStatus::FailStep3DoubleRed;
      colouring.make_pale(y);
    }
  }
  colouring.pale_trace.push_back(colouring.pale.size());
  return std::nullopt;
}

std::optional<TrialStatus> phase2_loop(ExposureState& state, ColouringState& colouring) {
  const BaseGraph& base = state.base();
  const int k = base.cycle_length();
  const std::size_t rounds = loop_iterations(state.fibre_size());

  for (std::size_t t = 1; t <= rounds; ++t) {
    if (colouring.pale.empty()) {
      colouring.stopped_early = true;
      break;
    }
    const LiftVertex v = colouring.pale.front();
    colouring.pale.pop_front();
    colouring.pale_flag[v] = 0;

    const int b = state.project(v) - k;
    const std::uint32_t q = state.fibre_index(v);
    int via = -1;
    for (int i = 0; i < k; ++i) {
      if (!state.is_exposed(base.join_edge(i, b), Side::Head, q)) {
        via = i;
        break;
      }
    }
    if (via < 0) throw std::logic_error("pale vertex has no unexposed edge");

    const std::uint32_t j = state.expose(base.join_edge(via, b), Side::Head, q);
    const LiftVertex u = state.vertex(base.cycle_vertex(via), j);
    // Reds have every incident edge exposed, so u cannot be red.
    if (colouring.colour(u) != Colour::None) throw std::logic_error("drew a coloured vertex");
    if (colouring.record_draws) colouring.draws.push_back(draw_record(state, colouring, u));
    ++colouring.red_neighbours[v];

    for (LiftVertex y : expose_join_edges(state, u, b)) {
      ++colouring.red_neighbours[y];
      if (colouring.ever_pale[y]) return TrialStatus::FailStep43PaleCollision;
      colouring.make_pale(y);
    }
    colouring.paint(u, Colour::Red);
    colouring.loop_reds.push_back(u);
    ++colouring.iterations;
    colouring.pale_trace.push_back(colouring.pale.size());
  }

  auto adjacent_red = [&](LiftVertex r) { return colouring.is_red(state.cycle_next(r)); };
  if (std::any_of(colouring.initial_reds.begin(), colouring.initial_reds.end(), adjacent_red) ||
      std::any_of(colouring.loop_reds.begin(), colouring.loop_reds.end(), adjacent_red))
    return TrialStatus::FailAdjacentReds;
  return std::nullopt;
}

Phase3Result phase3(ExposureState& state, ColouringState& colouring) {
  LiftGraph lift = state.expose_all();
  const BaseGraph& base = lift.base();
  const auto cycle_vertices =
      static_cast<LiftVertex>(static_cast<std::size_t>(base.cycle_length()) * lift.fibre_size());
  const auto n = static_cast<LiftVertex>(lift.vertex_count());

  for (LiftVertex v = cycle_vertices; v < n; ++v) {
    bool has_red = false;
    lift.for_each_neighbour(v, [&](LiftVertex u) { has_red = has_red || colouring.is_red(u); });
    if (!has_red) colouring.paint(v, Colour::Red);
  }

  UnionFind forest(n);
  bool cyclic = false;
  lift.for_each_edge([&](LiftVertex a, LiftVertex b) {
    if (cyclic || colouring.is_red(a) || colouring.is_red(b)) return;
    cyclic = !forest.unite(a, b);
  });
  if (cyclic) return {TrialStatus::FailStep7Cycle, std::move(lift)};

  std::vector<LiftVertex> stack;
  for (LiftVertex root = 0; root < n; ++root) {
    if (colouring.colour(root) != Colour::None) continue;
    colouring.paint(root, Colour::Black);
    stack.push_back(root);
    while (!stack.empty()) {
      const LiftVertex v = stack.back();
      stack.pop_back();
      const Colour other = colouring.colour(v) == Colour::Black ? Colour::White : Colour::Black;
      lift.for_each_neighbour(v, [&](LiftVertex u) {
        if (colouring.colour(u) != Colour::None) return;
        colouring.paint(u, other);
        stack.push_back(u);
      });
    }
  }
  return {std::nullopt, std::move(lift)};
}

namespace {

void record_chunks(TrialOutcome& out, const LiftGraph& lift, const ColouringState& colouring, bool keep) {
  TrialStats& stats = out.stats;
  const auto pale = colouring.pale_vertices();
  ChunkGraph graph = extract_chunks(lift, colouring.colours(), pale);
  const std::size_t reds = colouring.initial_reds.size() + colouring.loop_reds.size();
  stats.chunks = graph.chunks.size();
  stats.max_chunk = max_chunk_size(graph);
  stats.chunk_cycles = independent_cycle_count(graph);
  stats.chunk_graph_cyclic = has_cycle(graph);
  stats.max_chunk_bound = max_chunk_bound(lift.fibre_size(), reds, lift.base().cycle_length());
  stats.max_chunk_exceeds = static_cast<double>(*stats.max_chunk) > *stats.max_chunk_bound;
  if (keep) out.chunk_graph = std::move(graph);
}

void copy_phase_stats(TrialStats& stats, const ColouringState& colouring) {
  stats.cycles = colouring.cycle_count;
  stats.r0 = colouring.initial_reds.size();
  stats.iterations = colouring.iterations;
  stats.pale_final = colouring.pale.size();
  stats.stopped_early = colouring.stopped_early;
  stats.pale_trace = colouring.pale_trace;
}

}  // namespace

TrialOutcome run(const BaseGraph& base, std::size_t h, std::uint64_t seed, const RunOptions& options) {
  if (h == 0) throw std::invalid_argument("lift fibre size must be positive");
  return run(ExposureState(base, h, seed, options.schedule), seed, options);
}

TrialOutcome run(ExposureState state, std::uint64_t seed, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const BaseGraph base = state.base();
  TrialOutcome out;
  out.seed = seed;
  out.h = state.fibre_size();
  out.k = base.cycle_length();
  out.s = base.stable_size();

  ColouringState colouring(static_cast<std::size_t>(base.vertex_count()) * state.fibre_size());
  colouring.record_draws = options.record_draws;

  auto finish = [&](TrialStatus status) -> TrialOutcome {
    out.status = status;
    copy_phase_stats(out.stats, colouring);
    if (options.keep_lift && !out.lift) out.lift = state.expose_all();
    out.draws = std::move(colouring.draws);
    if (options.timing)
      out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return std::move(out);
  };

  if (auto fail = phase1(state, colouring)) return finish(*fail);
  if (auto fail = phase2_setup(state, colouring)) return finish(*fail);

  if (options.snapshot_setup) {
    ExposureState scratch = state;
    const LiftGraph lift = scratch.expose_all();
    const auto pale = colouring.pale_vertices();
    const ChunkGraph graph = extract_chunks(lift, colouring.colours(), pale);
    out.stats.setup_chunks = graph.chunks.size();
    out.stats.setup_chunk_edges = graph.edges.size();
  }

  if (auto fail = phase2_loop(state, colouring)) {
    if (*fail == TrialStatus::FailAdjacentReds) {
      const LiftGraph lift = state.expose_all();
      record_chunks(out, lift, colouring, options.keep_chunk_graph);
      if (options.keep_lift) out.lift = lift;
    }
    return finish(*fail);
  }

  Phase3Result result = phase3(state, colouring);
  record_chunks(out, result.lift, colouring, options.keep_chunk_graph);

  // With k = 3 the non-red graph is the chunk graph plus pendant vertices,
  // so step 7 fails exactly when the chunk graph has a cycle. For larger k
  // a chunk-graph cycle still forces a failure.
  const bool step7_failed = result.failure.has_value();
  const bool chunk_cycle = *out.stats.chunk_graph_cyclic;
  if ((chunk_cycle && !step7_failed) || (base.cycle_length() == 3 && chunk_cycle != step7_failed))
    throw std::logic_error("chunk graph disagrees with the step-7 acyclicity test");

  if (options.keep_lift) out.lift = result.lift;
  if (result.failure) return finish(*result.failure);

  out.stats.verified_proper = verify_proper(result.lift, colouring.colours());
  out.stats.colours_used = colours_used(colouring.colours());
  if (options.keep_colouring) out.colouring = std::move(colouring).release_colours();
  return finish(TrialStatus::Success);
}

std::string_view to_string(Colour c) {
  switch (c) {
    case Colour::None: return "none";
    case Colour::Red: return "red";
    case Colour::Black: return "black";
    case Colour::White: return "white";
  }
  return "?";
}

bool verify_proper(const LiftGraph& lift, std::span<const Colour> colouring) {
  if (colouring.size() != lift.vertex_count()) throw std::invalid_argument("colouring size mismatch");
  if (std::find(colouring.begin(), colouring.end(), Colour::None) != colouring.end())
    throw std::invalid_argument("colouring leaves a vertex uncoloured");
  bool proper = true;
  lift.for_each_edge([&](LiftVertex a, LiftVertex b) { proper = proper && colouring[a] != colouring[b]; });
  return proper;
}

int colours_used(std::span<const Colour> colouring) {
  std::array<bool, 4> present{};
  for (Colour c : colouring) present[static_cast<std::size_t>(c)] = true;
  return static_cast<int>(std::count(present.begin() + 1, present.end(), true));
}

}  // namespace liftlab
