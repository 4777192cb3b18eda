#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "gtest_helpers.hpp"
#include "oracles.hpp"

namespace orbitcount {
namespace {

TEST(EnumeratePaths, CompositionsOfOneAndTwo) {
  const PathEnumeration e = enumerate_paths(testing::two_loops(1.0, 2.0), 0, {5.0, 1000});
  EXPECT_FALSE(e.overflow);
  EXPECT_EQ(e.atoms.size(), 20u);
}

TEST(EnumeratePaths, BelowShortestEdgeOnlyEmptyPath) {
  const PathEnumeration e = enumerate_paths(testing::two_vertex_graph(), 0, {0.5, 1000});
  ASSERT_EQ(e.atoms.size(), 1u);
  EXPECT_EQ(e.atoms[0].length, 0.0);
  EXPECT_EQ(e.atoms[0].edge_count, 0u);
}

TEST(EnumeratePaths, TwoVertexFromSecondVertex) {
  const PathEnumeration e = enumerate_paths(testing::two_vertex_graph(), 1, {std::log(2.0), 1000});
  ASSERT_EQ(e.atoms.size(), 2u);
  EXPECT_EQ(e.atoms[1].terminal, 0u);
  EXPECT_NEAR(e.atoms[1].length, std::log(1.5), 1e-15);
}

TEST(EnumeratePaths, NonDecreasingOrderAndOverflowFlag) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedDigraph g = testing::random_strong_graph(rng);
    PathStream stream(g, 0, {4.0, 5000});
    double last = -1.0;
    while (auto atom = stream.next()) {
      EXPECT_GE(atom->length, last);
      last = atom->length;
    }
    const PathEnumeration capped = enumerate_paths(g, 0, {50.0, 10});
    EXPECT_TRUE(capped.overflow);
    EXPECT_EQ(capped.atoms.size(), 10u);
  }
}

TEST(CountPaths, Examples) {
  const WeightedDigraph loops = testing::two_loops(1.0, 2.0);
  EXPECT_EQ(count_paths_exact(loops, 0, 0, 5.0), 20u);
  const WeightedDigraph g = testing::two_vertex_graph();
  EXPECT_EQ(count_paths_exact(g, 0, 1, std::log(2.0) + 1e-9), 1u);
  EXPECT_EQ(count_paths_exact(g, 0, 1, -1.0), 0u);
  EXPECT_EQ(count_paths_exact(g, 0, 0, 0.0), 1u);
}

TEST(CountPaths, AgreesWithDepthFirstOracle) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> xd(0.0, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedDigraph g = testing::random_strong_graph(rng);
    const double x = xd(rng);
    const PathOracle oracle(g, 0, {x, kDefaultMaxPaths});
    for (VertexId j = 0; j < g.vertex_count(); ++j) {
      EXPECT_EQ(oracle.count_paths(j, x), testing::count_paths_dfs(g, 0, j, x));
    }
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
      EXPECT_EQ(oracle.count_edge_hits(a, x), testing::edge_hits_dfs(g, 0, a, x));
    }
  }
}

TEST(CountPaths, MonotoneInLength) {
  const PathOracle oracle(testing::two_vertex_graph(), 0, {10.0, kDefaultMaxPaths});
  std::uint64_t last = 0;
  for (double x = 0.0; x <= 10.0; x += 0.05) {
    const std::uint64_t a = oracle.count_paths(0, x);
    EXPECT_GE(a, last);
    last = a;
  }
}

TEST(EdgeHits, Examples) {
  const WeightedDigraph g = testing::two_vertex_graph();
  EXPECT_EQ(count_edge_hits_exact(g, 0, 0, 0.0), 1u);
  // Paths 1 -> 2 of length <= log 5 are beta (log 2) and alpha beta (log 4); both still sit on gamma2 at log 5.
  EXPECT_EQ(count_edge_hits_exact(g, 0, 3, std::log(5.0)), 2u);
  EXPECT_EQ(count_edge_hits_exact(g, 0, 3, std::log(3.5)), 1u);
  EXPECT_EQ(count_edge_hits_exact(g, 0, 3, -0.1), 0u);
}

// Each path of length <= x and each edge leaving its end either still contains x (a hit) or gives a
// longer path of length <= x. So sum_a B_a(x) = sum_j outdeg(j) A_j(x) - (sum_j A_j(x) - 1).
TEST(EdgeHits, ReconcileWithCounts) {
  const WeightedDigraph g = testing::two_vertex_graph();
  const PathOracle oracle(g, 0, {9.0, kDefaultMaxPaths});
  for (double x = 0.03; x < 9.0; x += 0.173) {
    std::uint64_t hits = 0;
    for (EdgeId a = 0; a < g.edge_count(); ++a) hits += oracle.count_edge_hits(a, x);
    std::uint64_t weighted = 0;
    std::uint64_t paths = 0;
    for (VertexId j = 0; j < g.vertex_count(); ++j) {
      weighted += g.out_edges(j).size() * oracle.count_paths(j, x);
      paths += oracle.count_paths(j, x);
    }
    EXPECT_EQ(hits, weighted - (paths - 1)) << x;
  }
}

TEST(VertexProbability, LoopAtoms) {
  EXPECT_DOUBLE_EQ(vertex_probability_atoms(testing::single_loop(1.0, 1.0), 0, 0, 3.0, 0.0), 1.0);
  const WeightedDigraph half = testing::single_loop(1.0, 0.5);
  for (int k = 0; k <= 10; ++k) {
    EXPECT_DOUBLE_EQ(vertex_probability_atoms(half, 0, 0, k, 0.0), std::ldexp(1.0, -k));
  }
  EXPECT_EQ(vertex_probability_atoms(half, 0, 0, 2.5, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(vertex_probability_atoms(half, 0, 0, 2.5, 1.0), 0.25);
}

TEST(EdgeProbability, Examples) {
  EXPECT_DOUBLE_EQ(edge_probability_exact(testing::single_loop(2.0, 1.0), 0, 0, 7.3), 1.0);
  EXPECT_DOUBLE_EQ(edge_probability_exact(testing::single_loop(1.0, 0.5), 0, 0, 2.5), 0.125);
  EXPECT_DOUBLE_EQ(survival_exact(testing::single_loop(1.0, 0.5), 0, 2.5), 0.125);
  EXPECT_EQ(survival_exact(testing::single_loop(1.0, 0.5), 0, -1.0), 0.0);
}

TEST(EdgeProbability, AgreesWithDepthFirstOracle) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> td(0.0, 5.0);
  testing::RandomGraphOptions opt;
  opt.probabilities = true;
  for (int trial = 0; trial < 30; ++trial) {
    GraphSpec spec = testing::random_strong_graph(rng, opt).to_spec();
    for (auto& e : spec.edges) *e.probability *= 0.9;
    const WeightedDigraph g = WeightedDigraph::build(spec);
    const double t = td(rng);
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
      EXPECT_NEAR(edge_probability_exact(g, 0, a, t), testing::edge_probability_dfs(g, 0, a, t), 1e-14);
    }
  }
}

TEST(Survival, StochasticGraphsKeepFullMass) {
  std::mt19937_64 rng(6);
  testing::RandomGraphOptions opt;
  opt.probabilities = true;
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedDigraph g = testing::random_strong_graph(rng, opt);
    const PathOracle oracle(g, 0, {6.0, kDefaultMaxPaths});
    for (double t : {0.0, 1.3, 4.4, 5.9}) EXPECT_NEAR(oracle.survival(t), 1.0, 1e-12);
  }
}

TEST(Survival, EqualsTotalEdgeMass) {
  // Half-open intervals put a walker that reaches a vertex at exactly t onto its next edge already,
  // so survival is the total edge mass at every t, atomic or not; C carries the same atoms separately.
  const WeightedDigraph g = testing::single_loop(1.0, 0.5);
  const PathOracle oracle(g, 0, {5.0, kDefaultMaxPaths});
  for (double t : {1.0, 2.0, 2.5, 3.7}) {
    double edges = 0.0;
    for (EdgeId a = 0; a < g.edge_count(); ++a) edges += oracle.edge_probability(a, t);
    EXPECT_DOUBLE_EQ(oracle.survival(t), edges);
    if (t == std::floor(t)) {
      EXPECT_DOUBLE_EQ(oracle.vertex_probability(0, t, 0.0), 2.0 * edges);
    }
  }
  GraphSpec spec = testing::two_vertex_spec(0.4);
  const WeightedDigraph w = WeightedDigraph::build(spec);
  const PathOracle wo(w, 0, {6.0, kDefaultMaxPaths});
  for (double t = 0.05; t < 6.0; t += 0.37) {
    double edges = 0.0;
    for (EdgeId a = 0; a < w.edge_count(); ++a) edges += wo.edge_probability(a, t);
    EXPECT_NEAR(wo.survival(t), edges, 1e-15);
    EXPECT_GE(wo.survival(t), 0.0);
  }
}

TEST(PathOracle, LaplaceSumConverges) {
  const WeightedDigraph g = testing::two_vertex_graph();
  const PathOracle oracle(g, 0, {20.0, kDefaultMaxPaths});
  EXPECT_NEAR(oracle.laplace_sum(0, 2.0), 18.0 / 11.0, 1e-4 * 18.0 / 11.0);
  EXPECT_NEAR(oracle.laplace_sum(0, 2.0), testing::laplace_sum_dfs(g, 0, 0, 2.0, 12.0), 1e-3);
}

TEST(PathOracle, DomainAndBudget) {
  const WeightedDigraph g = testing::two_vertex_graph();
  const PathOracle oracle(g, 0, {3.0, kDefaultMaxPaths});
  EXPECT_ERROR_CODE(oracle.count_paths(0, 3.5), ErrorCode::DomainError);
  EXPECT_ERROR_CODE(oracle.survival(1.0), ErrorCode::MissingProbabilities);
  EXPECT_ERROR_CODE(PathOracle(g, 0, {30.0, 100}), ErrorCode::BudgetOverflow);
  EXPECT_ERROR_CODE(PathOracle(g, 5, {1.0, 100}), ErrorCode::IndexOutOfRange);
}

TEST(PathOracle, ClassesAggregateMultiplicity) {
  const PathOracle oracle(testing::two_loops(1.0, 2.0), 0, {5.0, kDefaultMaxPaths});
  std::uint64_t total = 0;
  for (const PathClass& c : oracle.classes()) total += c.multiplicity;
  EXPECT_EQ(total, 20u);
  EXPECT_EQ(oracle.path_count(), 20u);
  EXPECT_LT(oracle.classes().size(), 20u);
}

}  // namespace
}  // namespace orbitcount
