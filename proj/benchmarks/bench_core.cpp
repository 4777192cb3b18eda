#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "orbitcount/orbitcount.hpp"

namespace oc = orbitcount;
namespace ot = orbitcount::testing;

namespace {

oc::WeightedDigraph random_graph(std::size_t n) {
  std::mt19937_64 rng(n);
  ot::RandomGraphOptions opt;
  opt.min_vertices = opt.max_vertices = n;
  opt.max_extra_edges = 3 * n;
  return ot::random_strong_graph(rng, opt);
}

void BM_SolveLambda(benchmark::State& state) {
  const oc::MatrixFunction f(random_graph(static_cast<std::size_t>(state.range(0))), oc::Mode::Counting);
  for (auto _ : state) benchmark::DoNotOptimize(oc::solve_lambda(f).lambda);
}
BENCHMARK(BM_SolveLambda)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

void BM_Adjugate(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd a = ot::random_irreducible(rng, static_cast<std::size_t>(n), true);
  for (auto _ : state) benchmark::DoNotOptimize(oc::adjugate(a).sum());
}
BENCHMARK(BM_Adjugate)->Arg(4)->Arg(16)->Arg(32);

void BM_PerronProjection(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Eigen::MatrixXd a = ot::random_irreducible(rng, 8, true);
  const auto method = static_cast<oc::ProjectionMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oc::perron_projection(a, method).sum());
  state.SetLabel(oc::to_string(method));
}
BENCHMARK(BM_PerronProjection)->DenseRange(0, 3);

void BM_PathOracle(benchmark::State& state) {
  const oc::WeightedDigraph g = ot::two_vertex_graph();
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const oc::PathOracle oracle(g, 0, {x, oc::kDefaultMaxPaths});
    benchmark::DoNotOptimize(oracle.path_count());
  }
}
BENCHMARK(BM_PathOracle)->Arg(8)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_WalkerEnsemble(benchmark::State& state) {
  const oc::WeightedDigraph g = ot::two_vertex_stochastic();
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oc::ensemble_survival(g, 0, 10.0, {samples, 1, 0, 1}).point_estimate);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples));
}
BENCHMARK(BM_WalkerEnsemble)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_KakutaniPartition(benchmark::State& state) {
  const oc::SubstitutionRule rule = oc::SubstitutionRule::kakutani(1.0 / 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oc::kakutani_partition(rule, static_cast<std::size_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_KakutaniPartition)->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
