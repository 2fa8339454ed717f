#include <gtest/gtest.h>

#include <random>

#include "distrig/census.hpp"
#include "distrig/graph_enum.hpp"
#include "oracles.hpp"

using namespace distrig;
using oracle::points;

namespace {

const Graph kK2 = complete_graph(2);
const Graph kTriangle = complete_graph(3);
const Graph kHinge(3, {{1, 2}, {1, 3}});
const Graph kP3(3, {{1, 2}, {2, 3}});

std::uint64_t max_richness(const PointSet& e) {
  std::uint64_t best = 0;
  for (std::size_t x = 0; x < e.size(); ++x) best = std::max<std::uint64_t>(best, pinned_distance_set(e, e[x]).size());
  return best;
}

}  // namespace

TEST(GraphDistanceCensus, Examples) {
  const auto lattice = lattice_point_set(2);
  EXPECT_EQ(graph_distance_census(kK2, lattice).count, 6u);
  CensusOptions nodeg;
  nodeg.include_degenerate = false;
  EXPECT_EQ(graph_distance_census(kK2, lattice, nodeg).count, 5u);
  const auto square = lattice_point_set(1);
  EXPECT_EQ(graph_distance_census(kTriangle, square).count, 10u);
  EXPECT_EQ(graph_distance_census(kP3, square).count, 9u);
  EXPECT_EQ(graph_distance_census(kHinge, square).count, 9u);
}

TEST(GraphDistanceCensus, FibersMatchBruteForce) {
  CensusOptions opt;
  opt.collect_fibers = true;
  const auto rep = graph_distance_census(kTriangle, lattice_point_set(1), opt);
  const auto slow = oracle::graph_census(kTriangle, lattice_point_set(1));
  ASSERT_TRUE(rep.fibers.has_value());
  ASSERT_EQ(rep.fibers->size(), slow.size());
  std::size_t i = 0;
  for (const auto& [key, count] : slow) {
    EXPECT_EQ((*rep.fibers)[i].first, key);
    EXPECT_EQ((*rep.fibers)[i].second, count);
    ++i;
  }
  EXPECT_EQ(rep.fibers->front().first, (std::vector<Rational>{0, 0, 0}));
  EXPECT_EQ(rep.fibers->front().second, 4u);
}

TEST(GraphDistanceCensus, RandomInstancesMatchBruteForce) {
  std::mt19937_64 rng(1);
  const GraphCensus graphs(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = 2 + trial % 3;
    const auto gs = graphs.graphs(v);
    const Graph& g = gs[rng() % gs.size()];
    const auto e = random_point_set(3 + trial % 6, 1 + trial % 3, 5, rng());
    for (bool degenerate : {true, false}) {
      CensusOptions opt;
      opt.include_degenerate = degenerate;
      opt.threads = 1 + trial % 3;
      const auto rep = graph_distance_census(g, e, opt);
      const auto slow = oracle::graph_census(g, e, degenerate);
      EXPECT_EQ(rep.count, slow.size()) << g.str();
      std::uint64_t total = 0;
      for (const auto& [k, c] : slow) total += c;
      EXPECT_EQ(rep.tuples, total);
    }
  }
}

TEST(GraphDistanceCensus, WideKeysMatchBruteForce) {
  // 15 components over 29 distinct values need 75 bits.
  const Graph k6 = complete_graph(6);
  const auto e = random_point_set(8, 2, 1000, 3);
  ASSERT_EQ(DistanceTable(e).distinct(), 29u);
  EXPECT_FALSE(KeyLayout(k6.num_edges(), 29).packable());
  CensusOptions opt;
  opt.threads = 3;
  EXPECT_EQ(graph_distance_census(k6, e, opt).count, oracle::graph_census(k6, e).size());
}

TEST(GraphDistanceCensus, FiberConservation) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_point_set(5 + trial, 2, 4, rng());
    const auto rep = graph_distance_census(kTriangle, e);
    EXPECT_EQ(rep.tuples, tuple_count(e.size(), 3));
  }
}

TEST(GraphDistanceCensus, BudgetExceeded) {
  CensusOptions opt;
  opt.budget = 100;
  try {
    graph_distance_census(kTriangle, lattice_point_set(4), opt);
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.required(), 15625u);
    EXPECT_EQ(e.budget(), 100u);
  }
}

TEST(GraphDistanceCensus, ThreadCountDoesNotChangeFibers) {
  CensusOptions one, many;
  one.collect_fibers = many.collect_fibers = true;
  many.threads = 4;
  const auto e = random_point_set(25, 2, 6, 12);
  const auto a = graph_distance_census(kTriangle, e, one), b = graph_distance_census(kTriangle, e, many);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(*a.fibers, *b.fibers);
}

TEST(PinnedDistanceSet, Examples) {
  const auto lattice = lattice_point_set(2);
  EXPECT_EQ(pinned_distance_set(lattice, Point{0, 0}), (std::vector<Rational>{1, 2, 4, 5, 8}));
  EXPECT_EQ(pinned_distance_set(lattice, Point{1, 1}), (std::vector<Rational>{1, 2}));
  const auto two = points({{0, 0}, {3, 4}});
  EXPECT_EQ(pinned_distance_set(two, Point{0, 0}).size(), 1u);
  EXPECT_EQ(pinned_distance_set(two, Point{3, 4}).size(), 1u);
  EXPECT_THROW(pinned_distance_set(two, Point{1, 1}), PreconditionError);
}

TEST(RichPins, Examples) {
  auto richness = [](const PinReport& r) {
    std::vector<std::size_t> out;
    for (const auto& p : r.pins) out.push_back(p.richness);
    return out;
  };
  EXPECT_EQ(richness(rich_pins_greedy(lattice_point_set(1), 3)), (std::vector<std::size_t>{2, 2, 1}));
  const auto line = points({{0, 0}, {1, 0}, {2, 0}});
  const auto rep = rich_pins_greedy(line, 2);
  EXPECT_EQ(richness(rep), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(rep.pins[0].point, (Point{0, 0}));
  const auto lattice = lattice_point_set(2);
  const auto first = rich_pins_greedy(lattice, 1);
  EXPECT_EQ(first.pins[0].richness, 5u);
  EXPECT_EQ(first.pins[0].point, (Point{0, 0}));
  EXPECT_THROW(rich_pins_greedy(line, 3), PreconditionError);
  EXPECT_THROW(rich_pins_greedy(line, 0), PreconditionError);
}

TEST(RichPins, ProceduralProperties) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = random_point_set(10 + trial, 2, 5, rng());
    const auto rep = rich_pins_greedy(e, e.size() - 1);
    ASSERT_EQ(rep.pins.size(), e.size() - 1);
    EXPECT_EQ(rep.pins[0].richness, max_richness(e));
    for (std::size_t i = 0; i < rep.pins.size(); ++i) {
      EXPECT_GE(rep.pins[i].richness, 1u);
      EXPECT_LE(rep.pins[i].richness, e.size() - 1);
      if (i) {
        EXPECT_LE(rep.pins[i].richness, rep.pins[i - 1].richness);
      }
    }
    EXPECT_EQ(rep.pins.back().richness, 1u);
    const auto again = rich_pins_greedy(e, e.size() - 1);
    for (std::size_t i = 0; i < rep.pins.size(); ++i) EXPECT_EQ(rep.pins[i].index, again.pins[i].index);
  }
}

TEST(DistanceEnergy, Examples) {
  const auto line = distance_energy(points({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(line.quadruples, 20u);
  EXPECT_EQ(line.pair_count, 6u);
  EXPECT_EQ(line.distinct_nonzero, 2u);
  const auto square = distance_energy(lattice_point_set(1));
  EXPECT_EQ(square.quadruples, 80u);
  EXPECT_EQ(square.pair_count * square.pair_count, 144u);
  EXPECT_EQ(square.distinct_nonzero * square.quadruples, 160u);
  EXPECT_EQ(distance_energy(points({{0, 0}, {1, 1}})).quadruples, 4u);
  EXPECT_THROW(distance_energy(points({{0, 0}})), PreconditionError);
}

TEST(DistanceEnergy, MatchesQuadrupleLoop) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = random_point_set(4 + trial % 10, 1 + trial % 3, 8, rng());
    EXPECT_EQ(distance_energy(e).quadruples, oracle::energy(e));
  }
}

TEST(TreeProjection, Examples) {
  const auto square = lattice_point_set(1);
  const auto tri = tree_projection_bound(kTriangle, square);
  EXPECT_EQ(tri.tree_count, 9u);
  EXPECT_EQ(tri.full_count, 10u);
  const auto tree = tree_projection_bound(kP3, square);
  EXPECT_EQ(tree.tree_count, tree.full_count);
  const auto e = random_point_set(4, 2, 10, 3);
  const auto k4 = tree_projection_bound(complete_graph(4), e);
  EXPECT_LE(k4.tree_count, k4.full_count);
  EXPECT_THROW(tree_projection_bound(Graph(3, {{1, 2}}), square), PreconditionError);
}

TEST(CensusInvariants, RandomSetsAndGraphPairs) {
  std::mt19937_64 rng(27);
  const GraphCensus graphs(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int v = 3 + trial % 2;
    const auto gs = graphs.connected_graphs(v);
    const Graph& g = gs[rng() % gs.size()];
    const auto e = random_point_set(6 + trial % 8, 2, 3, rng());
    const auto full = graph_distance_census(g, e).count;
    const auto nonzero = DistanceTable(e).distinct() - 1;
    // Subgraph: drop a random edge.
    const Graph h = g.without_edge(rng() % g.num_edges());
    EXPECT_LE(graph_distance_census(h, e).count, full);
    // Product bound.
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < g.num_edges(); ++i) bound *= nonzero + 1;
    EXPECT_LE(full, bound);
    // Hinge vs best pin.
    const auto r = max_richness(e);
    EXPECT_GE(graph_distance_census(kHinge, e).count, r * r);
    const auto en = distance_energy(e);
    EXPECT_LE(en.pair_count * en.pair_count, en.distinct_nonzero * en.quadruples);
  }
}
