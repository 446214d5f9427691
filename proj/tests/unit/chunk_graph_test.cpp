#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "liftlab/chunk_graph.hpp"
#include "liftlab/colouring.hpp"

namespace liftlab {
namespace {

const BaseGraph kK5e = BaseGraph::join(3, 2);

ChunkGraph make_graph(std::size_t chunks, std::vector<std::vector<std::size_t>> edges) {
  ChunkGraph g;
  for (std::size_t c = 0; c < chunks; ++c) g.chunks.push_back({static_cast<LiftVertex>(c), 1});
  for (std::size_t i = 0; i < edges.size(); ++i)
    g.edges.push_back({static_cast<LiftVertex>(100 + i), std::move(edges[i])});
  return g;
}

TEST(ChunkGraph, LoopIsACycle) {
  const ChunkGraph g = make_graph(1, {{0, 0}});
  EXPECT_TRUE(has_cycle(g));
  EXPECT_EQ(independent_cycle_count(g), 1U);
}

TEST(ChunkGraph, ParallelEdgesFormACycle) {
  const ChunkGraph g = make_graph(2, {{0, 1}, {1, 0}});
  EXPECT_TRUE(has_cycle(g));
  EXPECT_EQ(independent_cycle_count(g), 1U);
}

TEST(ChunkGraph, PathIsAcyclic) {
  const ChunkGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_FALSE(has_cycle(g));
  EXPECT_EQ(independent_cycle_count(g), 0U);
}

TEST(ChunkGraph, CycleCountMatchesEdgesMinusVerticesPlusComponents) {
  // Triangle plus a separate loop plus an isolated chunk: m=4, n=5, c=3.
  const ChunkGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 3}});
  EXPECT_EQ(independent_cycle_count(g), 4U - 5U + 3U);
}

TEST(ChunkGraph, HyperedgesActAsStars) {
  EXPECT_FALSE(has_cycle(make_graph(4, {{0, 1, 2}, {2, 3}})));
  EXPECT_TRUE(has_cycle(make_graph(3, {{0, 1, 2}, {2, 0}})));
  EXPECT_EQ(independent_cycle_count(make_graph(3, {{0, 1, 2}, {0, 1, 2}})), 2U);
}

TEST(ChunkGraph, PaleVertexOnOneChunkGivesALoop) {
  ExposureState state(kK5e, 1, 0);
  const LiftGraph lift = state.expose_all();
  std::vector<Colour> colouring(5, Colour::None);
  colouring[0] = Colour::Red;
  const std::vector<LiftVertex> pale = {3};
  const ChunkGraph g = extract_chunks(lift, colouring, pale);
  ASSERT_EQ(g.chunks.size(), 1U);
  EXPECT_EQ(g.chunks[0].size, 2U);
  EXPECT_EQ(g.chunks[0].id, 1U);
  ASSERT_EQ(g.edges.size(), 1U);
  EXPECT_EQ(g.edges[0].ends, (std::vector<std::size_t>{0, 0}));
  EXPECT_TRUE(has_cycle(g));
}

TEST(ChunkGraph, OneRedOnALongCycle) {
  constexpr std::size_t h = 5;
  std::vector<Permutation> perms(9, Permutation::identity(h));
  perms[0] = Permutation::rotation(h);
  const LiftGraph lift(kK5e, perms);
  std::vector<Colour> colouring(lift.vertex_count(), Colour::None);
  colouring[lift.vertex(0, 2)] = Colour::Red;
  const ChunkGraph g = extract_chunks(lift, colouring, {});
  ASSERT_EQ(g.chunks.size(), 1U);
  EXPECT_EQ(max_chunk_size(g), 3 * h - 1);
}

TEST(ChunkGraph, AllRedHasNoChunks) {
  ExposureState state(kK5e, 4, 2);
  const LiftGraph lift = state.expose_all();
  std::vector<Colour> colouring(lift.vertex_count(), Colour::None);
  for (LiftVertex v = 0; v < 12; ++v) colouring[v] = Colour::Red;
  const ChunkGraph g = extract_chunks(lift, colouring, {});
  EXPECT_TRUE(g.chunks.empty());
  EXPECT_EQ(max_chunk_size(g), 0U);
}

TEST(ChunkGraph, ChunksAndRedsPartitionTheCyclePart) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t h = 3000;
    ExposureState state(kK5e, h, derive_seed(8, h, seed));
    ColouringState colouring(5 * h);
    if (phase1(state, colouring) || phase2_setup(state, colouring)) continue;
    phase2_loop(state, colouring);
    const LiftGraph lift = state.expose_all();
    const auto pale = colouring.pale_vertices();
    const ChunkGraph g = extract_chunks(lift, colouring.colours(), pale);
    std::size_t total = 0;
    for (const auto& c : g.chunks) total += c.size;
    const std::size_t reds = colouring.initial_reds.size() + colouring.loop_reds.size();
    EXPECT_EQ(total + reds, 3 * h);
    for (std::size_t i = 1; i < g.chunks.size(); ++i) EXPECT_LT(g.chunks[i - 1].id, g.chunks[i].id);
    EXPECT_EQ(g.edges.size(), pale.size());
    for (const auto& e : g.edges) EXPECT_EQ(e.ends.size(), 2U);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(ChunkGraph, SetupSnapshotHasTwiceAsManyEdgesAsChunks) {
  RunOptions options;
  options.snapshot_setup = true;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TrialOutcome out = run(kK5e, 1000, derive_seed(9, 1000, seed), options);
    if (!out.stats.setup_chunks) continue;
    EXPECT_EQ(*out.stats.setup_chunks, out.stats.r0);
    EXPECT_EQ(*out.stats.setup_chunk_edges, 2 * *out.stats.setup_chunks);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(ChunkGraph, MaxChunkBound) {
  const double h = 10000.0;
  const double expected = 6.0 * (std::log(std::log(h)) + std::log(20.0)) * h / 20.0;
  EXPECT_NEAR(max_chunk_bound(10000, 20, 3), expected, 1e-9 * expected);
  EXPECT_TRUE(std::isinf(max_chunk_bound(10000, 0, 3)));
}

TEST(ChunkGraph, SizeDegreePairs) {
  const ChunkGraph g = make_graph(3, {{0, 1}, {1, 1}});
  const auto pairs = chunk_size_degrees(g);
  ASSERT_EQ(pairs.size(), 3U);
  EXPECT_EQ(pairs[0].second, 1.0);
  EXPECT_EQ(pairs[1].second, 3.0);
  EXPECT_EQ(pairs[2].second, 0.0);
}

}  // namespace
}  // namespace liftlab
