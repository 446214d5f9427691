#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liftlab {

/// An oriented base-graph edge. `index` equals the position in
/// BaseGraph::edges().
struct BaseEdge {
  int tail;
  int head;
  int index;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The join of a k-cycle C = [x_0..x_{k-1}] with a stable set
/// S = {y_0..y_{s-1}}. G(3,2) is K5 minus an edge.
///
/// Vertex numbering: cycle vertices 0..k-1, then stable vertices k..k+s-1.
/// Edge numbering: cycle edges x_i -> x_{(i+1) mod k} occupy 0..k-1, then
/// join edges x_i -> y_j at index k + i*s + j. Text labels are 1-based
/// ("x1", "y2") to match the edge-list format.
///
/// Immutable after construction.
class BaseGraph {
 public:
  /// Throws std::domain_error when k < 3 or s < 1.
  static BaseGraph join(int k, int s);

  /// Parses "tail head" lines (labels x1..xk, y1..ys). Accepts exactly the
  /// edge sets of some G(k,s) under the canonical labelling; either
  /// orientation of a line is accepted. Blank lines and '#' comments are
  /// skipped. Throws ParseError.
  static BaseGraph parse_edge_list(std::string_view text);

  int cycle_length() const { return k_; }
  int stable_size() const { return s_; }
  int vertex_count() const { return k_ + s_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int cycle_vertex(int i) const { return i; }
  int stable_vertex(int j) const { return k_ + j; }
  bool is_stable(int v) const { return v >= k_; }

  int cycle_edge(int i) const { return i; }
  int join_edge(int i, int j) const { return k_ + i * s_ + j; }
  bool is_cycle_edge(int e) const { return e < k_; }

  std::span<const BaseEdge> edges() const { return edges_; }
  const BaseEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  /// Incident edge indices in increasing order.
  std::span<const int> incident_edges(int v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

  std::string label(int v) const;

  /// Canonical "tail head" lines in edge-index order.
  std::string to_edge_list() const;

  friend bool operator==(const BaseGraph& a, const BaseGraph& b) {
    return a.k_ == b.k_ && a.s_ == b.s_;
  }

 private:
  BaseGraph(int k, int s);

  int k_;
  int s_;
  std::vector<BaseEdge> edges_;
  std::vector<std::vector<int>> incidence_;
};

}  // namespace liftlab
