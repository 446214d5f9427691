#include "liftlab/chunk_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "liftlab/union_find.hpp"

namespace liftlab {

namespace {

constexpr std::size_t kNoChunk = std::numeric_limits<std::size_t>::max();

bool uncoloured(std::span<const Colour> colouring, LiftVertex v) {
  return colouring[v] != Colour::Red;
}

}  // namespace

ChunkGraph extract_chunks(const LiftGraph& lift, std::span<const Colour> colouring,
                          std::span<const LiftVertex> pale) {
  const BaseGraph& base = lift.base();
  const int k = base.cycle_length();
  const auto cycle_vertices = static_cast<LiftVertex>(static_cast<std::size_t>(k) * lift.fibre_size());
  auto next = [&](LiftVertex v) { return lift.neighbour(v, base.cycle_edge(lift.project(v))); };
  auto prev = [&](LiftVertex v) {
    return lift.neighbour(v, base.cycle_edge((lift.project(v) + k - 1) % k));
  };

  ChunkGraph graph;
  std::vector<std::size_t> chunk_of(cycle_vertices, kNoChunk);
  for (LiftVertex v = 0; v < cycle_vertices; ++v) {
    if (!uncoloured(colouring, v) || chunk_of[v] != kNoChunk) continue;
    const std::size_t c = graph.chunks.size();
    std::size_t size = 1;
    chunk_of[v] = c;
    for (LiftVertex u = next(v); u != v && uncoloured(colouring, u); u = next(u)) {
      chunk_of[u] = c;
      ++size;
    }
    for (LiftVertex u = prev(v); chunk_of[u] == kNoChunk && uncoloured(colouring, u); u = prev(u)) {
      chunk_of[u] = c;
      ++size;
    }
    // v is the first vertex reached in index order, hence the smallest.
    graph.chunks.push_back({v, size});
  }

  graph.edges.reserve(pale.size());
  for (LiftVertex p : pale) {
    ChunkEdge edge{p, {}};
    lift.for_each_neighbour(p, [&](LiftVertex u) {
      if (u < cycle_vertices && uncoloured(colouring, u)) edge.ends.push_back(chunk_of[u]);
    });
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

bool has_cycle(const ChunkGraph& graph) {
  const std::size_t n = graph.chunks.size();
  UnionFind uf(n + graph.edges.size());
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto node = static_cast<std::uint32_t>(n + i);
    for (std::size_t end : graph.edges[i].ends)
      if (!uf.unite(node, static_cast<std::uint32_t>(end))) return true;
  }
  return false;
}

std::size_t independent_cycle_count(const ChunkGraph& graph) {
  const std::size_t n = graph.chunks.size();
  const std::size_t nodes = n + graph.edges.size();
  UnionFind uf(nodes);
  std::size_t incidences = 0;
  std::size_t components = nodes;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    for (std::size_t end : graph.edges[i].ends) {
      ++incidences;
      if (uf.unite(static_cast<std::uint32_t>(n + i), static_cast<std::uint32_t>(end))) --components;
    }
  }
  return incidences + components - nodes;
}

std::size_t max_chunk_size(const ChunkGraph& graph) {
  std::size_t best = 0;
  for (const auto& c : graph.chunks) best = std::max(best, c.size);
  return best;
}

double max_chunk_bound(std::size_t h, std::size_t red_count, int k) {
  if (red_count == 0) return std::numeric_limits<double>::infinity();
  const auto hd = static_cast<double>(h);
  const auto n = static_cast<double>(red_count);
  const double omega = std::log(std::log(hd));
  return 2.0 * k * (omega + std::log(n)) * hd / n;
}

std::vector<std::pair<double, double>> chunk_size_degrees(const ChunkGraph& graph) {
  std::vector<double> degree(graph.chunks.size(), 0.0);
  for (const auto& e : graph.edges)
    for (std::size_t end : e.ends) degree[end] += 1.0;
  std::vector<std::pair<double, double>> out;
  out.reserve(graph.chunks.size());
  for (std::size_t c = 0; c < graph.chunks.size(); ++c)
    out.emplace_back(static_cast<double>(graph.chunks[c].size), degree[c]);
  return out;
}

}  // namespace liftlab
