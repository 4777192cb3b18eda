#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "orbitcount/matrix_function.hpp"
#include "orbitcount/perron.hpp"

namespace orbitcount {

/// Critical exponent and coefficient matrix of a graph matrix function.
struct SpectralSolution {
  Mode mode = Mode::Counting;
  double lambda = 0.0;           // inverse length units
  Eigen::MatrixXd q;             // leading-coefficient matrix
  PerronData perron_at_lambda;   // Perron data of f(lambda)
  std::pair<double, double> bracket{0.0, 0.0};
  double residual = 0.0;         // |mu(lambda) - 1|
  int bisection_steps = 0;
};

/// mu(sigma): Perron root of f evaluated at real sigma.
double spectral_radius(const MatrixFunction& f, double sigma);

/// Largest real lambda with mu(lambda) = 1, by bracketing and bisection on the
/// strictly decreasing map sigma -> mu(sigma). Counting mode brackets in
/// [0, hi]; Probability/EdgeBased in [-lo, 0]. Also computes Q.
/// Throws NotStronglyConnected, BracketFailure.
SpectralSolution solve_lambda(const MatrixFunction& f);

/// Q = adj(I - f(lambda)) / (-tr(adj(I - f(lambda)) f'(lambda))).
/// Throws NotCritical when |mu(lambda) - 1| > 1e-10 and SingularDenominator
/// when the trace term vanishes.
Eigen::MatrixXd q_matrix(const MatrixFunction& f, double lambda);

/// det(I - f(s)) for complex s.
std::complex<double> characteristic_determinant(const MatrixFunction& f, std::complex<double> s);

/// |det(I - f(lambda + i t))| over the supplied t grid. Diagnostic only: a
/// value near zero at t != 0 hints at a commensurable length spectrum.
std::vector<double> determinant_scan(const MatrixFunction& f, double lambda, std::span<const double> ts);

}  // namespace orbitcount
