#include "liftlab/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "liftlab/base_graph.hpp"

namespace liftlab {

SimpleGraph::SimpleGraph(std::size_t vertex_count,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> edges)
    : adjacency_(vertex_count) {
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

SimpleGraph SimpleGraph::from_lift(const LiftGraph& lift) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(lift.edge_count());
  lift.for_each_edge([&](LiftVertex a, LiftVertex b) { edges.emplace_back(a, b); });
  return SimpleGraph(lift.vertex_count(), edges);
}

SimpleGraph SimpleGraph::parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::uint32_t top = 0;
  bool any = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!(fields >> a)) continue;
    std::string extra;
    if (!(fields >> b) || (fields >> extra) || a < 0 || b < 0 || a == b)
      throw ParseError("line " + std::to_string(line_no) + ": expected two distinct vertex ids");
    edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    top = std::max({top, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    any = true;
  }
  return SimpleGraph(any ? top + 1 : 0, edges);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

namespace {

class Colourer {
 public:
  Colourer(const SimpleGraph& g, int q)
      : g_(g),
        q_(q),
        colour_(g.vertex_count(), -1),
        forbidden_(g.vertex_count(), std::vector<int>(static_cast<std::size_t>(q), 0)),
        saturation_(g.vertex_count(), 0) {}

  bool solve() { return search(0, 0); }
  std::vector<int> colours() const { return colour_; }

 private:
  std::uint32_t pick() const {
    std::uint32_t best = 0;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::uint32_t v = 0; v < g_.vertex_count(); ++v) {
      if (colour_[v] >= 0) continue;
      const std::size_t deg = g_.neighbours(v).size();
      if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(std::uint32_t v, int c, int delta) {
    for (std::uint32_t u : g_.neighbours(v)) {
      int& count = forbidden_[u][static_cast<std::size_t>(c)];
      if (delta > 0 && count++ == 0) ++saturation_[u];
      if (delta < 0 && --count == 0) --saturation_[u];
    }
  }

  bool search(std::size_t coloured, int used) {
    if (coloured == g_.vertex_count()) return true;
    const std::uint32_t v = pick();
    if (saturation_[v] >= q_) return false;
    const int limit = std::min(q_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_[v][static_cast<std::size_t>(c)] > 0) continue;
      colour_[v] = c;
      assign(v, c, +1);
      if (search(coloured + 1, std::max(used, c + 1))) return true;
      assign(v, c, -1);
      colour_[v] = -1;
    }
    return false;
  }

  const SimpleGraph& g_;
  int q_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> forbidden_;
  std::vector<int> saturation_;
};

}  // namespace

std::optional<std::vector<int>> find_colouring(const SimpleGraph& g, int q) {
  if (q < 1) return g.vertex_count() == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
  Colourer c(g, q);
  if (!c.solve()) return std::nullopt;
  return c.colours();
}

bool is_k_colourable(const SimpleGraph& g, int q) { return find_colouring(g, q).has_value(); }

std::optional<int> chromatic_number(const SimpleGraph& g, int cap) {
  for (int q = 0; q <= cap; ++q)
    if (is_k_colourable(g, q)) return q;
  return std::nullopt;
}

}  // namespace liftlab
