#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liftlab/base_graph.hpp"
#include "liftlab/permutation.hpp"

namespace liftlab {

using LiftVertex = std::uint32_t;

/// A fully realised h-lift: vertex (x, j) has id x*h + j, and base edge e
/// with permutation sigma_e contributes (tail, j) -- (head, sigma_e(j)) for
/// every j.
class LiftGraph {
 public:
  /// Throws std::invalid_argument unless there is one permutation per base
  /// edge, all of the same positive size.
  LiftGraph(BaseGraph base, std::vector<Permutation> perms);

  /// Reads the "edge_index: j0 j1 ... j_{h-1}" serialization. Throws
  /// ParseError.
  static LiftGraph parse(std::string_view text, const BaseGraph& base);

  const BaseGraph& base() const { return base_; }
  std::size_t fibre_size() const { return h_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(base_.vertex_count()) * h_; }
  std::size_t edge_count() const { return static_cast<std::size_t>(base_.edge_count()) * h_; }

  LiftVertex vertex(int base_vertex, std::uint32_t j) const {
    return static_cast<LiftVertex>(static_cast<std::size_t>(base_vertex) * h_ + j);
  }
  int project(LiftVertex v) const { return static_cast<int>(v / h_); }
  std::uint32_t fibre_index(LiftVertex v) const { return static_cast<std::uint32_t>(v % h_); }

  const Permutation& permutation(int e) const { return perms_[static_cast<std::size_t>(e)]; }

  /// The neighbour of `v` along base edge `e`, which must be incident to
  /// project(v).
  LiftVertex neighbour(LiftVertex v, int e) const {
    const BaseEdge& be = base_.edge(e);
    const std::uint32_t j = fibre_index(v);
    if (project(v) == be.tail) return vertex(be.head, perms_[static_cast<std::size_t>(e)](j));
    return vertex(be.tail, inverses_[static_cast<std::size_t>(e)](j));
  }

  template <class F>
  void for_each_neighbour(LiftVertex v, F&& f) const {
    for (int e : base_.incident_edges(project(v))) f(neighbour(v, e));
  }

  /// Calls f(u, v) once per lift edge, in base-edge then fibre order.
  template <class F>
  void for_each_edge(F&& f) const {
    for (const BaseEdge& be : base_.edges()) {
      const Permutation& p = perms_[static_cast<std::size_t>(be.index)];
      for (std::uint32_t j = 0; j < h_; ++j) f(vertex(be.tail, j), vertex(be.head, p(j)));
    }
  }

  /// True iff every vertex's neighbourhood maps one-to-one onto its base
  /// vertex's neighbourhood.
  bool is_covering() const;

  std::string serialize() const;

 private:
  BaseGraph base_;
  std::size_t h_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
};

}  // namespace liftlab
