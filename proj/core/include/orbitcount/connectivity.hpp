#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbitcount/graph.hpp"

namespace orbitcount {

struct ConnectivityReport {
  bool strongly_connected = false;
  /// Strongly connected components, each sorted ascending (0-based vertices).
  std::vector<std::vector<VertexId>> components;
};

/// Tarjan's SCC decomposition.
ConnectivityReport strong_connectivity(const WeightedDigraph& g);

/// Same decomposition on an adjacency pattern given as out-neighbour lists.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency);

/// Lengths of every simple directed cycle with at most `max_edges` edges, one
/// entry per cycle up to rotation (parallel edges give distinct cycles), sorted.
std::vector<double> cycle_lengths(const WeightedDigraph& g, std::size_t max_edges);

enum class CommensurabilityStatus { IncommensurableWitness, CommensurableWithinTolerance, Inconclusive };

struct RationalApprox {
  long long p = 0;
  long long q = 1;
  double residual = 0.0;  // |a*q - b*p|
};

struct IncommensurabilityVerdict {
  CommensurabilityStatus status = CommensurabilityStatus::Inconclusive;
  std::optional<std::pair<double, double>> witness;
  std::optional<RationalApprox> rational_approx;
};

struct IncommensurabilityOptions {
  std::size_t max_edges = 0;  // 0: use the vertex count
  long long max_denominator = 1'000'000;
  double tolerance = 1e-12;
};

/// Best rational approximation p/q of a/b with q <= max_denominator, measured
/// by |a*q - b*p|. Scans the continued-fraction convergents of a/b.
RationalApprox best_rational_approximation(double a, double b, long long max_denominator);

/// Heuristic: a witness pair of cycle lengths whose ratio has no rational
/// approximation within tolerance, or the verdict that all sampled ratios do.
IncommensurabilityVerdict incommensurability_check(const WeightedDigraph& g,
                                                   const IncommensurabilityOptions& options = {});

const char* to_string(CommensurabilityStatus status) noexcept;

}  // namespace orbitcount
