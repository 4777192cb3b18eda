#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitcount/graph.hpp"

namespace orbitcount {

struct RuleChild {
  std::size_t type = 0;  // 0-based prototile index
  double scale = 0.0;    // in (0, 1]
};

/// Multiscale substitution rule: each prototile is dissected into rescaled
/// copies of prototiles. Volume conservation means sum of scale^d over the
/// children of every prototile is 1. In dimension 1 with one prototile this
/// is a Kakutani splitting rule; children are laid out left to right.
struct SubstitutionRule {
  int dimension = 1;
  std::vector<std::vector<RuleChild>> prototiles;

  /// Split [0,1] into lengths alpha and 1 - alpha.
  static SubstitutionRule kakutani(double alpha);

  /// Largest |sum scale^d - 1| over prototiles.
  double volume_defect() const;
  /// Throws VolumeNotConserved (or MalformedInput for bad scales/types).
  void validate() const;
};

struct Interval {
  double left = 0.0;
  double length = 0.0;
  std::size_t type = 0;
};

/// Intervals sorted by left endpoint, tiling [0, 1].
struct Partition {
  std::vector<Interval> intervals;
  std::size_t generation = 0;

  std::size_t size() const { return intervals.size(); }
  double total_length() const;
};

/// The partition after `splits` steps of repeatedly splitting the longest
/// interval (leftmost among equals) according to the rule of its type.
Partition kakutani_partition(const SubstitutionRule& rule, std::size_t splits);

/// Splits every interval longer than exp(-x), starting from [0,1] of type 0.
Partition kakutani_threshold_partition(const SubstitutionRule& rule, double x);

/// Star discrepancy of the right endpoints of the partition.
double discrepancy(const Partition& partition);

/// One vertex per prototile, one edge of length -log(scale) per child.
/// Throws VolumeNotConserved.
WeightedDigraph substitution_graph(const SubstitutionRule& rule);

struct SubstitutionReport {
  int dimension = 0;
  double lambda = 0.0;
  double lambda_error = 0.0;    // |lambda - d|
  double row_sum_error = 0.0;   // max_i |(M(d) 1)_i - 1|
};

/// Checks lambda == d (1e-10) and M(d) (1,...,1) == (1,...,1) (1e-10).
/// Throws PropertyViolated with the residuals.
SubstitutionReport verify_substitution_properties(const WeightedDigraph& g, int dimension);

/// Sum of C(m+k, k) over lattice points with m a + k b <= x.
std::uint64_t pascal_region_count(std::uint64_t a, std::uint64_t b, double x);

}  // namespace orbitcount
