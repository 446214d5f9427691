#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "liftlab/base_graph.hpp"
#include "liftlab/lift_graph.hpp"
#include "liftlab/permutation.hpp"
#include "liftlab/rng.hpp"

namespace liftlab {

enum class Side : std::uint8_t { Tail, Head };

/// Lazy: join-edge permutations are revealed one pair at a time, each pair
/// uniform over the still-unmatched indices. Upfront: every permutation is
/// drawn in full at construction and exposure merely reads it. Both give
/// the same law for the final lift.
enum class ExposureSchedule : std::uint8_t { Lazy, Upfront };

struct ExposureEvent {
  int edge;
  Side side;
  std::uint32_t from;
  std::uint32_t to;

  friend bool operator==(const ExposureEvent&, const ExposureEvent&) = default;
};

/// Partially revealed random h-lift. Cycle-edge permutations are fully
/// exposed on construction; join edges start unexposed.
///
/// Each edge keeps its revealed pairs as a partial injection plus
/// swap-remove pools of unmatched tails and heads, so a lazy draw is O(1).
/// The pools and the generator are part of the copyable state: a copy
/// replays identically.
class ExposureState {
 public:
  static constexpr std::uint32_t kUnexposed = std::numeric_limits<std::uint32_t>::max();

  /// Throws std::invalid_argument for h == 0.
  ExposureState(BaseGraph base, std::size_t h, std::uint64_t seed,
                ExposureSchedule schedule = ExposureSchedule::Lazy);

  const BaseGraph& base() const { return base_; }
  std::size_t fibre_size() const { return h_; }
  ExposureSchedule schedule() const { return schedule_; }
  Rng& rng() { return rng_; }

  LiftVertex vertex(int base_vertex, std::uint32_t j) const {
    return static_cast<LiftVertex>(static_cast<std::size_t>(base_vertex) * h_ + j);
  }
  int project(LiftVertex v) const { return static_cast<int>(v / h_); }
  std::uint32_t fibre_index(LiftVertex v) const { return static_cast<std::uint32_t>(v % h_); }

  /// Neighbours of a cycle-fibre vertex along the lifted cycle: (x_i, j) is
  /// followed by (x_{i+1}, sigma_i(j)). Cycle edges are always exposed.
  LiftVertex cycle_next(LiftVertex v) const {
    const int i = project(v);
    const int k = base_.cycle_length();
    return vertex((i + 1) % k, edges_[idx(base_.cycle_edge(i))].forward[fibre_index(v)]);
  }
  LiftVertex cycle_prev(LiftVertex v) const {
    const int i = project(v);
    const int k = base_.cycle_length();
    const int e = base_.cycle_edge((i + k - 1) % k);
    return vertex((i + k - 1) % k, edges_[idx(e)].backward[fibre_index(v)]);
  }

  /// Reveals the partner of fibre index `index` on `side` of `edge`.
  /// Throws std::logic_error if that pair is already exposed.
  std::uint32_t expose(int edge, Side side, std::uint32_t index);

  std::optional<std::uint32_t> partner(int edge, Side side, std::uint32_t index) const {
    const auto& map = side == Side::Tail ? edges_[idx(edge)].forward : edges_[idx(edge)].backward;
    if (map[index] == kUnexposed) return std::nullopt;
    return map[index];
  }
  bool is_exposed(int edge, Side side, std::uint32_t index) const {
    return partner(edge, side, index).has_value();
  }
  std::size_t exposed_count(int edge) const { return edges_[idx(edge)].exposed; }
  bool is_complete(int edge) const { return exposed_count(edge) == h_; }

  /// Replaces the permutation of `edge` wholesale, fully exposing it. Only
  /// valid before any expose() call; used to build deterministic lifts.
  void force_permutation(int edge, const Permutation& p);

  /// Completes every permutation uniformly given the pairs revealed so far
  /// and returns the resulting lift. The state stays usable: all pairs are
  /// then exposed.
  LiftGraph expose_all();

  /// Pairs revealed by expose(), in call order.
  std::span<const ExposureEvent> transcript() const { return transcript_; }

 private:
  struct EdgeState {
    std::vector<std::uint32_t> forward;   // tail index -> head index
    std::vector<std::uint32_t> backward;  // head index -> tail index
    std::vector<std::uint32_t> hidden;  // upfront schedule only
    std::vector<std::uint32_t> hidden_inverse;
    std::vector<std::uint32_t> free_tails, tail_pos;
    std::vector<std::uint32_t> free_heads, head_pos;
    std::size_t exposed = 0;
  };

  static std::size_t idx(int edge) { return static_cast<std::size_t>(edge); }
  void ensure_pools(EdgeState& es) const;
  void record(EdgeState& es, std::uint32_t tail, std::uint32_t head);
  void fill_from(EdgeState& es, const Permutation& p);

  BaseGraph base_;
  std::size_t h_;
  ExposureSchedule schedule_;
  Rng rng_;
  std::vector<EdgeState> edges_;
  std::vector<ExposureEvent> transcript_;
};

}  // namespace liftlab
