#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "liftlab/lift_graph.hpp"

namespace liftlab {

/// Undirected simple graph with sorted neighbour lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  SimpleGraph(std::size_t vertex_count, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  static SimpleGraph from_lift(const LiftGraph& lift);

  /// Whitespace-separated "u v" integer pairs, one per line. The vertex
  /// count is one more than the largest id. Throws ParseError.
  static SimpleGraph parse_edge_list(std::string_view text);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  std::span<const std::uint32_t> neighbours(std::uint32_t v) const { return adjacency_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// A proper colouring with colours 0..q-1, if one exists. Backtracking
/// that branches on the uncoloured vertex of highest saturation (ties:
/// highest degree) and opens at most one fresh colour per node, which
/// also fixes the first vertex's colour.
std::optional<std::vector<int>> find_colouring(const SimpleGraph& g, int q);

bool is_k_colourable(const SimpleGraph& g, int q);

/// Smallest q <= cap admitting a proper colouring; nullopt means "> cap".
/// An empty graph has chromatic number 0.
std::optional<int> chromatic_number(const SimpleGraph& g, int cap);

}  // namespace liftlab
