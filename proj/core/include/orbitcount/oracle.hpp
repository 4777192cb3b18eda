#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "orbitcount/graph.hpp"

namespace orbitcount {

/// One finite path from the start vertex. The empty path has length 0 and
/// edge_count 0. `probability` is the product of edge probabilities (1 on an
/// unannotated graph).
struct PathAtom {
  VertexId terminal = 0;
  double length = 0.0;
  double probability = 1.0;
  std::size_t edge_count = 0;
};

inline constexpr std::size_t kDefaultMaxPaths = 50'000'000;

struct EnumerationBudget {
  double max_length = 0.0;
  std::size_t max_paths = kDefaultMaxPaths;
};

/// Best-first (shortest-first) stream of every path from `start` with length
/// <= max_length. Emission order is non-decreasing in length.
class PathStream {
 public:
  PathStream(const WeightedDigraph& g, VertexId start, EnumerationBudget budget);

  /// Next path, or nullopt when exhausted or when the cap was reached.
  std::optional<PathAtom> next();

  /// Set once max_paths atoms were emitted while more remained.
  bool overflow() const noexcept { return overflow_; }
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  struct Later {
    bool operator()(const PathAtom& a, const PathAtom& b) const { return a.length > b.length; }
  };

  const WeightedDigraph* g_;
  EnumerationBudget budget_;
  std::priority_queue<PathAtom, std::vector<PathAtom>, Later> frontier_;
  std::size_t emitted_ = 0;
  bool overflow_ = false;
};

struct PathEnumeration {
  std::vector<PathAtom> atoms;
  bool overflow = false;  // true: the list is partial
};

PathEnumeration enumerate_paths(const WeightedDigraph& g, VertexId start, EnumerationBudget budget);

/// All paths from the start vertex that end at `terminal` and use the same
/// multiset of edges. They share one length and one probability, so the
/// counting functions only need the class size.
struct PathClass {
  VertexId terminal = 0;
  double length = 0.0;
  std::uint64_t multiplicity = 0;   // number of distinct paths in the class
  double path_probability = 1.0;    // p(gamma) of each member
  std::size_t edge_count = 0;

  double probability_mass() const { return static_cast<double>(multiplicity) * path_probability; }
};

/// Exact path-sum oracle. Enumerates every path from `start` up to
/// budget.max_length (grouped into PathClass entries, shortest first) and
/// answers the counting and probability functions by direct summation.
/// The cap applies to the number of classes. Throws BudgetOverflow.
class PathOracle {
 public:
  PathOracle(const WeightedDigraph& g, VertexId start, EnumerationBudget budget);

  const WeightedDigraph& graph() const noexcept { return *g_; }
  VertexId start() const noexcept { return start_; }
  double max_length() const noexcept { return max_length_; }
  std::span<const PathClass> classes() const noexcept { return classes_; }
  std::uint64_t path_count() const noexcept { return path_count_; }

  /// A_{i,j}(x): paths to j with length <= x (the empty path counts when j == start).
  std::uint64_t count_paths(VertexId j, double x) const;
  /// B_{i,a}(x): paths gamma to the origin of `edge` with l(gamma) <= x < l(gamma) + l(edge).
  std::uint64_t count_edge_hits(EdgeId edge, double x) const;
  /// Sum of p(gamma) over paths to j with l(gamma) in [T - window, T].
  double vertex_probability(VertexId j, double t, double window) const;
  /// D_{i,a}(T) = p_a * sum of p(gamma) over gamma with l(gamma) <= T < l(gamma) + l(a).
  double edge_probability(EdgeId edge, double t) const;
  /// Sum of D_{i,a}(T) over all edges.
  double survival(double t) const;
  /// Sum of exp(-s l(gamma)) over enumerated paths to j (optionally p-weighted).
  double laplace_sum(VertexId j, double s, bool probability_weighted = false) const;

 private:
  void require_within(double x) const;
  void require_probabilities() const;

  const WeightedDigraph* g_;
  VertexId start_;
  double max_length_;
  std::vector<PathClass> classes_;
  std::uint64_t path_count_ = 0;
};

// One-shot helpers; each enumerates up to the query point.
std::uint64_t count_paths_exact(const WeightedDigraph& g, VertexId i, VertexId j, double x,
                                std::size_t max_paths = kDefaultMaxPaths);
std::uint64_t count_edge_hits_exact(const WeightedDigraph& g, VertexId i, EdgeId edge, double x,
                                    std::size_t max_paths = kDefaultMaxPaths);
double vertex_probability_atoms(const WeightedDigraph& g, VertexId i, VertexId j, double t, double window,
                                std::size_t max_paths = kDefaultMaxPaths);
double edge_probability_exact(const WeightedDigraph& g, VertexId i, EdgeId edge, double t,
                              std::size_t max_paths = kDefaultMaxPaths);
double survival_exact(const WeightedDigraph& g, VertexId i, double t,
                      std::size_t max_paths = kDefaultMaxPaths);

}  // namespace orbitcount
