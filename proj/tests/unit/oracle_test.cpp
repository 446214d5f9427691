#include <gtest/gtest.h>

#include <functional>

#include "liftlab/exposure.hpp"
#include "liftlab/oracle.hpp"

namespace liftlab {
namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Exhaustive search over all q^n assignments.
bool brute_force_colourable(const SimpleGraph& g, int q) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b : g.neighbours(a))
          if (colour[a] == colour[b]) return false;
      return true;
    }
    for (int c = 0; c < q; ++c) {
      colour[v] = c;
      if (go(v + 1)) return true;
    }
    return false;
  };
  return go(0);
}

bool is_proper(const SimpleGraph& g, const std::vector<int>& colour, int q) {
  for (std::uint32_t a = 0; a < g.vertex_count(); ++a) {
    if (colour[a] < 0 || colour[a] >= q) return false;
    for (std::uint32_t b : g.neighbours(a))
      if (colour[a] == colour[b]) return false;
  }
  return true;
}

SimpleGraph cycle(std::uint32_t n) {
  EdgeList edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, edges);
}

SimpleGraph k5_minus_edge() {
  ExposureState state(BaseGraph::join(3, 2), 1, 0);
  return SimpleGraph::from_lift(state.expose_all());
}

TEST(Oracle, K5MinusEdgeIsFourChromatic) {
  const SimpleGraph g = k5_minus_edge();
  EXPECT_EQ(g.edge_count(), 9U);
  EXPECT_FALSE(brute_force_colourable(g, 3));
  EXPECT_TRUE(brute_force_colourable(g, 4));
  EXPECT_FALSE(is_k_colourable(g, 3));
  EXPECT_TRUE(is_k_colourable(g, 4));
  EXPECT_EQ(chromatic_number(g, 5), 4);
  EXPECT_EQ(chromatic_number(g, 3), std::nullopt);
}

TEST(Oracle, Cycles) {
  EXPECT_FALSE(is_k_colourable(cycle(7), 2));
  EXPECT_TRUE(is_k_colourable(cycle(7), 3));
  EXPECT_EQ(chromatic_number(cycle(3), 5), 3);
  for (std::uint32_t n : {4U, 10U, 60U}) EXPECT_EQ(chromatic_number(cycle(n), 5), 2);
}

TEST(Oracle, IdentityTwoLiftKeepsChromaticNumber) {
  const BaseGraph base = BaseGraph::join(3, 2);
  const LiftGraph lift(base, std::vector<Permutation>(9, Permutation::identity(2)));
  const SimpleGraph g = SimpleGraph::from_lift(lift);
  EXPECT_FALSE(is_k_colourable(g, 3));
  EXPECT_EQ(chromatic_number(g, 5), 4);
}

TEST(Oracle, EdgeCases) {
  EXPECT_EQ(chromatic_number(SimpleGraph(), 5), 0);
  EXPECT_EQ(chromatic_number(SimpleGraph(3, EdgeList{}), 5), 1);
  const EdgeList loop = {{1, 1}};
  EXPECT_THROW(SimpleGraph(3, loop), std::invalid_argument);
  const EdgeList out_of_range = {{0, 3}};
  EXPECT_THROW(SimpleGraph(3, out_of_range), std::invalid_argument);
  const EdgeList dup = {{0, 1}, {1, 0}};
  EXPECT_EQ(SimpleGraph(2, dup).edge_count(), 1U);
}

TEST(Oracle, ParseEdgeList) {
  const SimpleGraph g = SimpleGraph::parse_edge_list("0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.vertex_count(), 3U);
  EXPECT_EQ(chromatic_number(g, 5), 3);
  EXPECT_THROW(SimpleGraph::parse_edge_list("0\n"), ParseError);
  EXPECT_THROW(SimpleGraph::parse_edge_list("0 x\n"), ParseError);
}

TEST(Oracle, AgreesWithBruteForceOnSmallLifts) {
  const BaseGraph base = BaseGraph::join(3, 2);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    ExposureState state(base, 2, seed);
    const SimpleGraph g = SimpleGraph::from_lift(state.expose_all());
    for (int q = 2; q <= 4; ++q) EXPECT_EQ(is_k_colourable(g, q), brute_force_colourable(g, q));
  }
}

TEST(Oracle, RandomFourLiftsLieBetweenThreeAndFour) {
  const BaseGraph base = BaseGraph::join(3, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ExposureState state(base, 4, derive_seed(3, 4, seed));
    const SimpleGraph g = SimpleGraph::from_lift(state.expose_all());
    const auto chi = chromatic_number(g, 5);
    ASSERT_TRUE(chi);
    EXPECT_GE(*chi, 2);
    EXPECT_LE(*chi, 4);
  }
}

TEST(Oracle, MonotoneAndWitnessesAreProper) {
  const BaseGraph base = BaseGraph::join(3, 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    ExposureState state(base, 2 + seed % 7, derive_seed(4, 0, seed));
    const SimpleGraph g = SimpleGraph::from_lift(state.expose_all());
    bool previous = false;
    for (int q = 1; q <= 5; ++q) {
      const auto witness = find_colouring(g, q);
      if (previous) EXPECT_TRUE(witness);
      if (witness) EXPECT_TRUE(is_proper(g, *witness, q));
      previous = witness.has_value();
    }
    EXPECT_TRUE(previous);
  }
}

}  // namespace
}  // namespace liftlab
