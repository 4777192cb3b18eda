#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "gtest_helpers.hpp"

namespace orbitcount {
namespace {

using testing::two_vertex_spec;

TEST(BuildGraph, TwoVertexExampleHasFourEdges) {
  const WeightedDigraph g = WeightedDigraph::build(two_vertex_spec());
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_FALSE(g.has_probabilities());
  EXPECT_DOUBLE_EQ(g.min_edge_length(), std::log(1.5));
  EXPECT_EQ(g.out_edges(0).size(), 2u);
  EXPECT_EQ(g.out_edges(1).size(), 2u);
  EXPECT_EQ(g.edge(1).from, 0u);
  EXPECT_EQ(g.edge(1).to, 1u);
}

TEST(BuildGraph, SingleLoopIsValid) {
  const WeightedDigraph g = testing::single_loop(1.0);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, ZeroLengthRejected) {
  EXPECT_ERROR_CODE(WeightedDigraph::build({1, {{1, 1, 0.0, {}, ""}}}), ErrorCode::NonPositiveLength);
  EXPECT_ERROR_CODE(WeightedDigraph::build({1, {{1, 1, -2.0, {}, ""}}}), ErrorCode::NonPositiveLength);
  EXPECT_ERROR_CODE(WeightedDigraph::build({1, {{1, 1, INFINITY, {}, ""}}}), ErrorCode::NonPositiveLength);
}

TEST(BuildGraph, EndpointOutOfRange) {
  EXPECT_ERROR_CODE(WeightedDigraph::build({2, {{1, 3, 1.0, {}, ""}}}), ErrorCode::IndexOutOfRange);
  EXPECT_ERROR_CODE(WeightedDigraph::build({2, {{0, 1, 1.0, {}, ""}}}), ErrorCode::IndexOutOfRange);
  EXPECT_ERROR_CODE(WeightedDigraph::build({0, {}}), ErrorCode::IndexOutOfRange);
}

TEST(BuildGraph, ProbabilityRules) {
  EXPECT_ERROR_CODE(WeightedDigraph::build({1, {{1, 1, 1.0, 0.7, ""}, {1, 1, 2.0, 0.6, ""}}}),
                    ErrorCode::ProbabilitySumExceedsOne);
  EXPECT_ERROR_CODE(WeightedDigraph::build({1, {{1, 1, 1.0, 0.5, ""}, {1, 1, 2.0, {}, ""}}}),
                    ErrorCode::MixedProbabilityAnnotation);
  EXPECT_ERROR_CODE(WeightedDigraph::build({1, {{1, 1, 1.0, 0.0, ""}}}), ErrorCode::MalformedInput);
  const WeightedDigraph g = testing::two_vertex_stochastic();
  EXPECT_TRUE(g.has_probabilities());
  EXPECT_DOUBLE_EQ(g.outgoing_probability(0), 1.0);
}

TEST(EdgeLabels, NamesAndOccurrenceIndex) {
  GraphSpec spec = two_vertex_spec();
  for (auto& e : spec.edges) e.name.clear();
  const WeightedDigraph g = WeightedDigraph::build(spec);
  EXPECT_EQ(g.find_edge("2-1#1"), std::optional<EdgeId>(2));
  EXPECT_EQ(g.find_edge("2-1#2"), std::optional<EdgeId>(3));
  EXPECT_EQ(g.find_edge("2-1#3"), std::nullopt);
  EXPECT_EQ(g.find_edge("nonsense"), std::nullopt);
  for (EdgeId id = 0; id < g.edge_count(); ++id) EXPECT_EQ(g.find_edge(g.edge_label(id)), id);

  const WeightedDigraph named = testing::two_vertex_graph();
  EXPECT_EQ(named.find_edge("gamma2"), std::optional<EdgeId>(3));
  EXPECT_EQ(named.find_edge("1-1#1"), std::optional<EdgeId>(0));
}

TEST(GraphJson, ParsesLogLengthsAndNames) {
  const WeightedDigraph g = load_graph(std::string(ORBITCOUNT_DATA_DIR) + "/fig1.json");
  EXPECT_EQ(g, testing::two_vertex_graph());
}

TEST(GraphJson, MalformedInputs) {
  EXPECT_ERROR_CODE(parse_graph("{"), ErrorCode::MalformedInput);
  EXPECT_ERROR_CODE(parse_graph(R"({"vertices": 1})"), ErrorCode::MalformedInput);
  EXPECT_ERROR_CODE(parse_graph(R"({"vertices": 1, "edges": [{"from": 1, "to": 1}]})"), ErrorCode::MalformedInput);
  EXPECT_ERROR_CODE(parse_graph(R"({"vertices": 1, "edges": [{"from": 1, "to": 1, "length": 0}]})"),
                    ErrorCode::NonPositiveLength);
}

TEST(GraphJson, RoundTripRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    testing::RandomGraphOptions opt;
    opt.probabilities = trial % 2 == 0;
    const WeightedDigraph g = testing::random_strong_graph(rng, opt);
    const WeightedDigraph back = parse_graph(graph_to_json(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.to_spec().edges.size(), g.edge_count());
  }
}

TEST(Errors, CategoriesMapToExitClasses) {
  EXPECT_EQ(category_of(ErrorCode::NonPositiveLength), ErrorCategory::Validation);
  EXPECT_EQ(category_of(ErrorCode::NotStronglyConnected), ErrorCategory::Validation);
  EXPECT_EQ(category_of(ErrorCode::BracketFailure), ErrorCategory::Numerical);
  EXPECT_EQ(category_of(ErrorCode::DidNotConverge), ErrorCategory::Numerical);
  EXPECT_EQ(category_of(ErrorCode::BudgetOverflow), ErrorCategory::Budget);
  const Error e(ErrorCode::UnknownEdge, "x");
  EXPECT_NE(std::string(e.what()).find("UnknownEdge"), std::string::npos);
}

}  // namespace
}  // namespace orbitcount
