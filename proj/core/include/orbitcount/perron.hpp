#pragma once

#include <Eigen/Dense>

namespace orbitcount {

/// Dominant eigen-data of a non-negative irreducible matrix. `right` is
/// normalized to unit l1 norm, `left` so that left.dot(right) == 1.
struct PerronData {
  double mu = 0.0;
  Eigen::VectorXd right;
  Eigen::VectorXd left;
  int iterations = 0;
};

/// True when the non-zero pattern of `a` is strongly connected (and, for a
/// 1x1 matrix, the entry is non-zero).
bool is_irreducible(const Eigen::MatrixXd& a);

/// Irreducible with period 1.
bool is_primitive(const Eigen::MatrixXd& a);

/// Spectral radius and positive eigenvectors. Power iteration on a shifted
/// matrix, then shifted inverse iteration, stopped on the Collatz-Wielandt
/// bracket min_i (Av)_i/v_i <= mu <= max_i (Av)_i/v_i.
/// Throws NotIrreducible or DidNotConverge.
PerronData perron_eigen(const Eigen::MatrixXd& a);

/// Perron eigenvalue only (same algorithm, no left vector).
double perron_root(const Eigen::MatrixXd& a);

enum class ProjectionMethod { Adjugate, CharPolyDerivative, EigenProduct, PowerLimit };

const char* to_string(ProjectionMethod method) noexcept;

/// The rank-one spectral projector onto the Perron eigendirection.
///  Adjugate:           adj(mu I - A) / tr adj(mu I - A)
///  CharPolyDerivative: adj(mu I - A) / p_A'(mu)
///  EigenProduct:       prod_{k}(A - mu_k I) / prod_k(mu - mu_k), other eigenvalues mu_k
///  PowerLimit:         lim (A/mu)^m, primitive matrices only (NotPrimitive otherwise)
Eigen::MatrixXd perron_projection(const Eigen::MatrixXd& a, ProjectionMethod method);

/// Transpose of the cofactor matrix; defined for singular input. adj of a
/// 1x1 matrix is [1].
Eigen::MatrixXd adjugate(const Eigen::MatrixXd& a);
Eigen::MatrixXcd adjugate(const Eigen::MatrixXcd& a);

/// Coefficients c_0..c_n of det(xI - A) = sum_k c_k x^k (Faddeev-LeVerrier).
Eigen::VectorXd characteristic_polynomial(const Eigen::MatrixXd& a);

}  // namespace orbitcount
