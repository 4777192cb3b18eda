#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "orbitcount/graph.hpp"

namespace orbitcount {

/// Which generating matrix to build from the graph:
///  - Counting:    M_ij(s) = sum over edges i->j of exp(-s l)
///  - Probability: N_ij(s) = sum over edges i->j of p exp(-s l)
///  - EdgeBased:   W_{b,a}(s) = p_b exp(-s l(a)) whenever edge b leaves the
///                 vertex where edge a ends (dimension = edge count)
enum class Mode { Counting, Probability, EdgeBased };

std::string_view to_string(Mode mode) noexcept;

class MatrixFunction {
 public:
  /// Throws MissingProbabilities for Probability/EdgeBased on an unannotated graph.
  MatrixFunction(WeightedDigraph graph, Mode mode);

  const WeightedDigraph& graph() const noexcept { return graph_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t dimension() const noexcept { return dimension_; }

  Eigen::MatrixXcd evaluate(std::complex<double> s) const;
  Eigen::MatrixXcd evaluate_derivative(std::complex<double> s) const;

  Eigen::MatrixXd evaluate_real(double s) const;
  Eigen::MatrixXd evaluate_derivative_real(double s) const;

 private:
  // One exponential term weight * exp(-s * length) at (row, col).
  struct Term {
    std::size_t row;
    std::size_t col;
    double weight;
    double length;
  };

  WeightedDigraph graph_;
  Mode mode_;
  std::size_t dimension_ = 0;
  std::vector<Term> terms_;
};

}  // namespace orbitcount
