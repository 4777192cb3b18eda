#pragma once

#include <complex>
#include <cstddef>

#include "orbitcount/graph.hpp"
#include "orbitcount/spectral.hpp"

namespace orbitcount {

/// A: paths i -> j of length <= x.             B: paths of length exactly x from i to a point on edge a.
/// C: probability of sitting at vertex j at T.  D: probability of being on edge a at T.
/// Survival: probability of still being on the graph at T.
enum class Family { A, B, C, D, Survival };

const char* to_string(Family family) noexcept;

/// coefficient * exp(lambda x). `index` is the target vertex (A, C) or edge (B, D).
struct AsymptoticEstimate {
  Family family = Family::A;
  double coefficient = 0.0;
  double lambda = 0.0;
  VertexId start = 0;
  std::size_t index = 0;
  /// Family C is a sum of point masses; the estimate describes atom masses
  /// at the times where the probability is non-zero, not a density.
  bool atomic_support = false;

  double value_at(double x) const;
};

/// (1 - exp(-length s)) / s, with value `length` at s = 0.
double exp_window(double length, double s);
std::complex<double> exp_window(double length, std::complex<double> s);

// Counting-mode estimates (lambda > 0); NonPositiveLambda, WrongMode otherwise.
AsymptoticEstimate count_paths_asymptotic(const SpectralSolution& sol, VertexId i, VertexId j);
AsymptoticEstimate count_edge_hits_asymptotic(const SpectralSolution& sol, const WeightedDigraph& g,
                                              VertexId i, EdgeId edge);

// Probability-mode estimates (lambda <= 0); WrongMode otherwise.
AsymptoticEstimate vertex_probability_asymptotic(const SpectralSolution& sol, VertexId i, VertexId j);
AsymptoticEstimate edge_probability_asymptotic(const SpectralSolution& sol, const WeightedDigraph& g,
                                               VertexId i, EdgeId edge);
/// For lambda = 0 the coefficient is exactly 1.
AsymptoticEstimate survival_probability_asymptotic(const SpectralSolution& sol, const WeightedDigraph& g,
                                                   VertexId i);

/// Closed-form Laplace transform of the chosen family at complex s, built
/// from R(s) = adj(I - f(s)) / det(I - f(s)). A and B need Counting mode;
/// C, D and Survival need Probability mode. `index` is ignored for Survival.
/// Throws DomainError when Re(s) <= lambda.
std::complex<double> laplace_transform(const MatrixFunction& f, double lambda, Family family, VertexId i,
                                       std::size_t index, std::complex<double> s);

/// The leading coefficient a family's transform is expected to have as
/// residue at s = lambda (equals the asymptotic coefficient).
double laplace_residue(const SpectralSolution& sol, const WeightedDigraph& g, Family family, VertexId i,
                       std::size_t index);

}  // namespace orbitcount
