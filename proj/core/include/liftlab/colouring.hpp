#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liftlab/base_graph.hpp"
#include "liftlab/chunk_graph.hpp"
#include "liftlab/colour.hpp"
#include "liftlab/exposure.hpp"
#include "liftlab/lift_graph.hpp"

namespace liftlab {

enum class TrialStatus : std::uint8_t {
  Success,
  FailPhase1TooManyCycles,
  FailStep3DoubleRed,
  FailStep43PaleCollision,
  FailAdjacentReds,
  FailStep7Cycle,
};

inline constexpr std::size_t kTrialStatusCount = 6;

std::string_view to_string(TrialStatus status);
std::optional<TrialStatus> parse_status(std::string_view name);

/// One Phase II draw of a cycle-side vertex u, kept for uniformity checks.
/// `rank` is u's position among the non-red indices of its fibre at the
/// time of the draw and `available` their number.
struct DrawRecord {
  int fibre;
  std::uint32_t index;
  std::uint32_t rank;
  std::uint32_t available;
};

/// Colours and pale bookkeeping for one run of the three-colouring
/// procedure. Colours are write-once.
class ColouringState {
 public:
  explicit ColouringState(std::size_t vertex_count)
      : red_neighbours(vertex_count, 0),
        pale_flag(vertex_count, 0),
        ever_pale(vertex_count, 0),
        colour_(vertex_count, Colour::None) {}

  Colour colour(LiftVertex v) const { return colour_[v]; }
  bool is_red(LiftVertex v) const { return colour_[v] == Colour::Red; }
  std::span<const Colour> colours() const { return colour_; }
  std::vector<Colour> release_colours() && { return std::move(colour_); }

  /// Throws std::logic_error if v already has a colour.
  void paint(LiftVertex v, Colour c);

  void make_pale(LiftVertex v) {
    pale.push_back(v);
    pale_flag[v] = 1;
    ever_pale[v] = 1;
  }

  std::vector<LiftVertex> pale_vertices() const { return {pale.begin(), pale.end()}; }

  std::vector<std::uint8_t> red_neighbours;  // over exposed edges
  std::deque<LiftVertex> pale;               // FIFO order
  std::vector<std::uint8_t> pale_flag;
  std::vector<std::uint8_t> ever_pale;

  std::size_t cycle_count = 0;
  double cycle_threshold = 0.0;
  std::vector<LiftVertex> initial_reds;  // R(0)
  std::vector<LiftVertex> loop_reds;     // R(T) \ R(0), in colouring order
  std::size_t iterations = 0;            // T
  bool stopped_early = false;            // pale set ran dry (s = 1)
  std::vector<std::size_t> pale_trace;   // |P(t)| for t = 0..T

  bool record_draws = false;
  std::vector<DrawRecord> draws;

 private:
  std::vector<Colour> colour_;
};

/// floor(cbrt(h)), exact for all h.
std::size_t loop_iterations(std::size_t h);

/// (ln h)^2.
double cycle_threshold(std::size_t h);

/// Steps 1-2. Counts the cycles of the lifted cycle part and fails when
/// there are more than (ln h)^2 of them; otherwise colours red, in each
/// cycle, its vertex over x_1 with the smallest fibre index.
std::optional<TrialStatus> phase1(ExposureState& state, ColouringState& colouring);

/// Step 3. Exposes every join edge at the Phase I reds; each exposed
/// stable-side endpoint becomes pale. Fails if one gets two red neighbours.
/// Throws std::logic_error when Phase I coloured nothing.
std::optional<TrialStatus> phase2_setup(ExposureState& state, ColouringState& colouring);

/// Step 4, floor(h^(1/3)) iterations. Each pops the oldest pale vertex v,
/// exposes its lowest-index unexposed join edge to reach an uncoloured u,
/// exposes u's other s-1 join edges, fails if any endpoint was ever pale,
/// and otherwise makes those endpoints pale and colours u red. Stops early
/// (not a failure) if the pale set empties. Afterwards fails if two reds
/// are adjacent.
std::optional<TrialStatus> phase2_loop(ExposureState& state, ColouringState& colouring);

struct Phase3Result {
  std::optional<TrialStatus> failure;
  LiftGraph lift;
};

/// Steps 5-7. Exposes everything, colours red each stable-side vertex with
/// no red neighbour, and two-colours the non-red graph black/white if it is
/// a forest.
Phase3Result phase3(ExposureState& state, ColouringState& colouring);

struct TrialStats {
  std::size_t cycles = 0;
  std::size_t r0 = 0;
  std::size_t iterations = 0;  // T
  std::size_t pale_final = 0;  // p(T)
  bool stopped_early = false;
  std::vector<std::size_t> pale_trace;

  // Present once Phase II has run to completion.
  std::optional<std::size_t> chunks;
  std::optional<std::size_t> max_chunk;
  std::optional<std::size_t> chunk_cycles;
  std::optional<bool> chunk_graph_cyclic;
  std::optional<double> max_chunk_bound;
  std::optional<bool> max_chunk_exceeds;

  // Chunk graph right after step 3, when requested.
  std::optional<std::size_t> setup_chunks;
  std::optional<std::size_t> setup_chunk_edges;

  int colours_used = 0;
  bool verified_proper = false;
};

struct RunOptions {
  ExposureSchedule schedule = ExposureSchedule::Lazy;
  bool snapshot_setup = false;  // extract the chunk graph right after step 3
  bool record_draws = false;
  bool keep_colouring = false;
  bool keep_lift = false;  // completes the lift even when a trial fails early
  bool keep_chunk_graph = false;
  bool timing = false;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::size_t h = 0;
  int k = 0;
  int s = 0;
  TrialStatus status = TrialStatus::Success;
  TrialStats stats;
  double millis = 0.0;
  std::optional<std::vector<Colour>> colouring;
  std::optional<LiftGraph> lift;
  std::optional<ChunkGraph> chunk_graph;  // final chunk graph, when Phase II completed
  std::vector<DrawRecord> draws;
};

/// Runs all phases on a fresh random h-lift seeded by `seed`. Failures are
/// reported through the status; a Success colouring has been checked proper.
/// Throws std::invalid_argument for h == 0.
TrialOutcome run(const BaseGraph& base, std::size_t h, std::uint64_t seed,
                 const RunOptions& options = {});

/// Same, on a caller-prepared exposure state (e.g. with forced
/// permutations).
TrialOutcome run(ExposureState state, std::uint64_t seed, const RunOptions& options = {});

}  // namespace liftlab
