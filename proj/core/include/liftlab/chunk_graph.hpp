#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "liftlab/colour.hpp"
#include "liftlab/lift_graph.hpp"

namespace liftlab {

/// A maximal uncoloured path of the lifted cycle part. `id` is the smallest
/// lift vertex it contains.
struct Chunk {
  LiftVertex id;
  std::size_t size;
};

/// A pale vertex seen as an edge between the chunks holding its uncoloured
/// cycle-side neighbours. `ends` index ChunkGraph::chunks; with k = 3 there
/// are exactly two ends, possibly equal (a loop). For k > 3 a pale vertex
/// has k - 1 ends and acts as a hyperedge.
struct ChunkEdge {
  LiftVertex pale_vertex;
  std::vector<std::size_t> ends;
};

/// Multigraph of chunks and pale vertices. Loops and parallel edges are
/// kept. Chunks are sorted by id.
struct ChunkGraph {
  std::vector<Chunk> chunks;
  std::vector<ChunkEdge> edges;
};

/// Chunks are the components of the lifted cycle part after deleting red
/// vertices; each vertex of `pale` contributes one edge. The lift must be
/// fully realised.
ChunkGraph extract_chunks(const LiftGraph& lift, std::span<const Colour> colouring,
                          std::span<const LiftVertex> pale);

/// True iff the graph has a cycle: a loop, a parallel pair, or a longer
/// cycle. Hyperedges count as stars on their ends.
bool has_cycle(const ChunkGraph& graph);

/// Cyclomatic number of the chunk/edge incidence structure; equals
/// m - n + components when every edge has two ends.
std::size_t independent_cycle_count(const ChunkGraph& graph);

std::size_t max_chunk_size(const ChunkGraph& graph);

/// Chunk-size ceiling 2k (omega + ln n) h / n with omega = ln ln h, where
/// n is the number of red cycle-side vertices. For k = 3 this is
/// 6 (omega + ln n) h / n. Returns +infinity when n == 0.
double max_chunk_bound(std::size_t h, std::size_t red_count, int k);

/// (size, endpoint count) for every chunk.
std::vector<std::pair<double, double>> chunk_size_degrees(const ChunkGraph& graph);

}  // namespace liftlab
