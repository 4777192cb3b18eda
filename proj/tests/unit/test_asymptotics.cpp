#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "gtest_helpers.hpp"
#include "oracles.hpp"

namespace orbitcount {
namespace {

SpectralSolution counting_solution() {
  return solve_lambda(MatrixFunction(testing::two_vertex_graph(), Mode::Counting));
}

SpectralSolution stochastic_solution() {
  return solve_lambda(MatrixFunction(testing::two_vertex_stochastic(), Mode::Probability));
}

TEST(FamilyA, TwoVertexCoefficients) {
  const SpectralSolution sol = counting_solution();
  EXPECT_NEAR(count_paths_asymptotic(sol, 0, 0).coefficient, 6.0 / testing::log432(), 1e-10);
  EXPECT_NEAR(count_paths_asymptotic(sol, 0, 1).coefficient, 3.0 / testing::log432(), 1e-10);
  const AsymptoticEstimate e = count_paths_asymptotic(sol, 0, 0);
  EXPECT_NEAR(e.value_at(2.0), e.coefficient * std::exp(2.0), 1e-12);
  EXPECT_FALSE(e.atomic_support);
}

// With unit lengths the count is a staircase: A(n) = sum_k (M(0)^k)_{ij}, whose growth is
// P_{ij} mu^{n+1} / (mu - 1). The continuous law's 1/lambda becomes the lattice factor mu/(mu - 1).
TEST(FamilyA, UnitLengthsMatchLatticeSum) {
  std::mt19937_64 rng(12);
  testing::RandomGraphOptions opt;
  opt.unit_lengths = true;
  opt.self_loop = true;
  opt.min_vertices = 2;
  opt.max_vertices = 5;
  opt.max_extra_edges = 4;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedDigraph g = testing::random_strong_graph(rng, opt);
    const MatrixFunction f(g, Mode::Counting);
    const Eigen::MatrixXd m0 = f.evaluate_real(0.0);
    const double mu = perron_root(m0);
    if (mu <= 1.0 + 1e-6) continue;
    ++checked;
    const SpectralSolution sol = solve_lambda(f);
    const Eigen::MatrixXd p = perron_projection(m0 / mu, ProjectionMethod::Adjugate);
    const double lattice = sol.q(0, 1) * mu / (mu - 1.0);
    EXPECT_NEAR(lattice, p(0, 1) * mu / (mu - 1.0), 1e-8 * lattice);

    Eigen::MatrixXd raw = Eigen::MatrixXd::Identity(m0.rows(), m0.cols());
    double raw_sum = 0.0;
    for (int n = 0; n <= 8; ++n) {
      raw_sum += raw(0, 1);
      EXPECT_EQ(static_cast<double>(count_paths_exact(g, 0, 1, n)), raw_sum);
      raw = raw * m0;
    }
    // sum holds S_n / mu^{n+1}, with S_n the partial sum of (M^k)_{01}
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(m0.rows(), m0.cols());
    double sum = 0.0;
    for (int n = 0; n <= 400; ++n) {
      sum = (sum + power(0, 1)) / mu;
      power = power * m0 / mu;
    }
    EXPECT_NEAR(sum / (lattice / mu), 1.0, 1e-6);
  }
  EXPECT_GT(checked, 10);
}

// Pointwise ratios oscillate by several percent at these lengths, so the sharp check is on the mean
// ratio over a unit window, where the oscillation averages out.
TEST(Convergence, TwoVertexCountsApproachLaw) {
  const WeightedDigraph g = testing::two_vertex_graph();
  const SpectralSolution sol = counting_solution();
  const PathOracle oracle(g, 0, {16.0, kDefaultMaxPaths});
  const AsymptoticEstimate a = count_paths_asymptotic(sol, 0, 0);
  const EdgeId gamma2 = *g.find_edge("gamma2");
  const AsymptoticEstimate b = count_edge_hits_asymptotic(sol, g, 0, gamma2);
  auto ratio_a = [&](double x) { return static_cast<double>(oracle.count_paths(0, x)) / a.value_at(x); };
  auto ratio_b = [&](double x) { return static_cast<double>(oracle.count_edge_hits(gamma2, x)) / b.value_at(x); };
  for (double x : {10.0, 12.0}) {
    EXPECT_GE(ratio_b(x), 0.9);
    EXPECT_LE(ratio_b(x), 1.1);
  }
  EXPECT_GE(ratio_a(12.0), 0.9);
  EXPECT_LE(ratio_a(12.0), 1.1);
  for (double x : {8.0, 12.0, 16.0}) {
    double mean_a = 0.0, mean_b = 0.0;
    const int steps = 200;
    for (int k = 0; k <= steps; ++k) {
      const double t = x - 1.0 + static_cast<double>(k) / steps;
      mean_a += ratio_a(t) / (steps + 1);
      mean_b += ratio_b(t) / (steps + 1);
    }
    EXPECT_NEAR(mean_a, 1.0, 0.01) << x;
    EXPECT_NEAR(mean_b, 1.0, 0.01) << x;
  }
}

TEST(FamilyB, TwoVertexCoefficients) {
  const SpectralSolution sol = counting_solution();
  const WeightedDigraph g = testing::two_vertex_graph();
  EXPECT_NEAR(count_edge_hits_asymptotic(sol, g, 0, 3).coefficient, 2.0 / testing::log432(), 1e-10);
  EXPECT_NEAR(count_edge_hits_asymptotic(sol, g, 1, 3).coefficient, (2.0 / 3.0) * 3.0 / testing::log432(), 1e-10);
}

TEST(FamilyB, ColumnStructureMatchesQ) {
  const SpectralSolution sol = counting_solution();
  const WeightedDigraph g = testing::two_vertex_graph();
  for (VertexId i = 0; i < 2; ++i) {
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
      const Edge& e = g.edge(a);
      const double b = count_edge_hits_asymptotic(sol, g, i, a).coefficient;
      EXPECT_NEAR(b / exp_window(e.length, sol.lambda), sol.q(i, e.from), 1e-12);
    }
  }
}

TEST(ExpWindow, SeriesBranchIsContinuous) {
  EXPECT_DOUBLE_EQ(exp_window(2.0, 0.0), 2.0);
  for (double s : {1e-3, 1e-5, 1e-7, 1e-9}) {
    EXPECT_NEAR(exp_window(2.0, s), 2.0 * (1.0 - s + 2.0 * s * s / 3.0), 1e-9);
  }
  EXPECT_NEAR(exp_window(1.0, 1e-4 * 0.999), exp_window(1.0, 1e-4 * 1.001), 1e-7);
  EXPECT_NEAR(exp_window(std::log(3.0), 1.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(std::abs(exp_window(1.0, std::complex<double>(0.5, 0.0)) - exp_window(1.0, 0.5)), 0.0, 1e-15);
}

TEST(FamilyC, StochasticLoop) {
  const WeightedDigraph g = testing::single_loop(3.0, 1.0);
  const SpectralSolution sol = solve_lambda(MatrixFunction(g, Mode::Probability));
  const AsymptoticEstimate c = vertex_probability_asymptotic(sol, 0, 0);
  EXPECT_NEAR(c.coefficient, 1.0 / 3.0, 1e-12);
  EXPECT_TRUE(c.atomic_support);
}

TEST(FamilyD, FullOccupancyAtLambdaZero) {
  const SpectralSolution sol = stochastic_solution();
  const WeightedDigraph g = testing::two_vertex_stochastic();
  for (VertexId i = 0; i < 2; ++i) {
    double total = 0.0;
    for (EdgeId a = 0; a < g.edge_count(); ++a) total += edge_probability_asymptotic(sol, g, i, a).coefficient;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(survival_probability_asymptotic(sol, g, i).coefficient, 1.0, 1e-12);
  }
  const WeightedDigraph loop = testing::single_loop(2.0, 1.0);
  const SpectralSolution ls = solve_lambda(MatrixFunction(loop, Mode::Probability));
  EXPECT_NEAR(edge_probability_asymptotic(ls, loop, 0, 0).coefficient, 1.0, 1e-12);
}

TEST(FamilyD, SubStochasticLoop) {
  const WeightedDigraph g = testing::single_loop(1.0, 0.5);
  const SpectralSolution sol = solve_lambda(MatrixFunction(g, Mode::Probability));
  const double lambda = -std::log(2.0);
  EXPECT_NEAR(sol.lambda, lambda, 1e-12);
  const double expected = 0.5 * (1.0 - std::exp(-lambda)) / lambda * sol.q(0, 0);
  const AsymptoticEstimate d = edge_probability_asymptotic(sol, g, 0, 0);
  EXPECT_NEAR(d.coefficient, expected, 1e-12);
  EXPECT_NEAR(survival_probability_asymptotic(sol, g, 0).coefficient, d.coefficient, 1e-15);
  // exact survival is 2^{-(k+1)} = e^{lambda (k + 1)} on [k, k+1); the estimate averages the staircase
  EXPECT_NEAR(d.value_at(3.0), d.coefficient / 8.0, 1e-12);
}

TEST(FamilyD, RandomStochasticGraphsSumToOne) {
  std::mt19937_64 rng(55);
  testing::RandomGraphOptions opt;
  opt.probabilities = true;
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedDigraph g = testing::random_strong_graph(rng, opt);
    const SpectralSolution sol = solve_lambda(MatrixFunction(g, Mode::Probability));
    EXPECT_NEAR(sol.lambda, 0.0, 1e-12);
    for (VertexId i = 0; i < g.vertex_count(); ++i) {
      double total = 0.0;
      for (EdgeId a = 0; a < g.edge_count(); ++a) total += edge_probability_asymptotic(sol, g, i, a).coefficient;
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(Families, ModeAndSignPreconditions) {
  const SpectralSolution stochastic = stochastic_solution();
  const SpectralSolution counting = counting_solution();
  const WeightedDigraph g = testing::two_vertex_stochastic();
  EXPECT_ERROR_CODE(count_paths_asymptotic(stochastic, 0, 0), ErrorCode::WrongMode);
  EXPECT_ERROR_CODE(edge_probability_asymptotic(counting, g, 0, 0), ErrorCode::WrongMode);
  EXPECT_ERROR_CODE(count_paths_asymptotic(counting, 0, 5), ErrorCode::IndexOutOfRange);
  EXPECT_ERROR_CODE(count_edge_hits_asymptotic(counting, g, 0, 9), ErrorCode::UnknownEdge);
}

TEST(Laplace, ClosedFormMatchesPathSum) {
  const WeightedDigraph g = testing::two_vertex_graph();
  const MatrixFunction f(g, Mode::Counting);
  const double closed = laplace_transform(f, 1.0, Family::A, 0, 0, 2.0).real();
  EXPECT_NEAR(closed, 18.0 / 11.0 / 2.0, 1e-12);
  // The path sum gives s times the transform of the counting function.
  const double sum = testing::laplace_sum_dfs(g, 0, 0, 2.0, 14.0);
  EXPECT_NEAR(2.0 * closed, sum, 1e-4 * sum);
}

TEST(Laplace, RequiresRightHalfPlane) {
  const MatrixFunction f(testing::two_vertex_graph(), Mode::Counting);
  EXPECT_ERROR_CODE(laplace_transform(f, 1.0, Family::A, 0, 0, 0.5), ErrorCode::DomainError);
  EXPECT_ERROR_CODE(laplace_transform(f, 1.0, Family::C, 0, 0, 2.0), ErrorCode::WrongMode);
}

TEST(Laplace, EdgeFamilyAtZeroWithNegativeLambda) {
  const WeightedDigraph g = testing::single_loop(1.0, 0.5);
  const MatrixFunction f(g, Mode::Probability);
  // D(T) = 2^{-(k+1)} on [k, k+1): transform at 0 is sum of 2^{-(k+1)} = 1.
  EXPECT_NEAR(laplace_transform(f, -std::log(2.0), Family::D, 0, 0, 0.0).real(), 1.0, 1e-12);
}

TEST(Laplace, ResidueScanConverges) {
  struct Case {
    WeightedDigraph g;
    Mode mode;
    Family family;
    std::size_t index;
  };
  const std::vector<Case> cases{{testing::two_vertex_graph(), Mode::Counting, Family::A, 1},
                                {testing::two_vertex_graph(), Mode::Counting, Family::B, 3},
                                {testing::two_vertex_stochastic(), Mode::Probability, Family::C, 1},
                                {testing::two_vertex_stochastic(), Mode::Probability, Family::D, 2},
                                {testing::single_loop(1.0, 0.5), Mode::Probability, Family::Survival, 0}};
  for (const Case& c : cases) {
    const MatrixFunction f(c.g, c.mode);
    const SpectralSolution sol = solve_lambda(f);
    const double residue = laplace_residue(sol, c.g, c.family, 0, c.index);
    double previous = INFINITY;
    for (int k = 2; k <= 6; ++k) {
      const double eps = std::pow(10.0, -k);
      const double scaled = eps * laplace_transform(f, sol.lambda, c.family, 0, c.index, sol.lambda + eps).real();
      const double drift = std::abs(scaled / residue - 1.0);
      EXPECT_LT(drift, previous);
      previous = drift;
    }
    EXPECT_LE(previous, 1e-3) << to_string(c.family);
  }
}

}  // namespace
}  // namespace orbitcount
