#pragma once

#include <cstdint>
#include <variant>

#include "orbitcount/graph.hpp"

namespace orbitcount {

struct OnEdge {
  EdgeId edge = 0;
  double offset = 0.0;  // in [0, length)
};
struct AtVertex {
  VertexId vertex = 0;
};
struct Exited {
  double time = 0.0;
};

struct WalkOutcome {
  std::variant<OnEdge, AtVertex, Exited> status;
  double path_length_traversed = 0.0;

  bool on_graph() const { return !std::holds_alternative<Exited>(status); }
};

/// Unit-speed walk started at vertex `start` at t = 0. At each vertex the
/// walker picks an outgoing edge with its probability, or leaves the graph
/// with the remaining probability. A walker that reaches a vertex exactly at
/// `horizon` is reported AtVertex. Deterministic in `seed`.
WalkOutcome simulate_walk(const WeightedDigraph& g, VertexId start, double horizon, std::uint64_t seed);

/// Bernoulli-proportion estimate; standard_error = sqrt(p (1 - p) / n).
struct EnsembleEstimate {
  double point_estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t sample_count = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;

  static EnsembleEstimate from_counts(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed);
};

/// Pools the counts of two ensembles (keeps the seed of `a`).
EnsembleEstimate merge(const EnsembleEstimate& a, const EnsembleEstimate& b);

struct EnsembleOptions {
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  /// Index of the first run; runs [first_run, first_run + samples) are used,
  /// so disjoint run ranges of one seed pool exactly.
  std::uint64_t first_run = 0;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Seed of run `run` under master seed `master` (SplitMix64 of the pair).
std::uint64_t run_seed(std::uint64_t master, std::uint64_t run) noexcept;

EnsembleEstimate ensemble_edge_probability(const WeightedDigraph& g, VertexId start, EdgeId edge, double horizon,
                                           const EnsembleOptions& options);
EnsembleEstimate ensemble_survival(const WeightedDigraph& g, VertexId start, double horizon,
                                   const EnsembleOptions& options);

}  // namespace orbitcount
