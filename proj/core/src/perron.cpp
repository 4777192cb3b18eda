#include "orbitcount/perron.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "orbitcount/connectivity.hpp"
#include "orbitcount/error.hpp"

namespace orbitcount {

namespace {

constexpr double kShiftFraction = 1e-3;
constexpr int kMaxPowerIterations = 1'000'000;
constexpr int kPowerPhaseIterations = 200;
constexpr int kMaxRefineSteps = 100;
constexpr double kCertifiedGap = 1e-14;
constexpr double kAcceptedGap = 1e-11;

std::vector<std::vector<std::size_t>> pattern(const Eigen::MatrixXd& a) {
  std::vector<std::vector<std::size_t>> adjacency(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) adjacency[i].push_back(j);
    }
  }
  return adjacency;
}

void require_nonnegative_square(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::MalformedInput, "expected a non-empty square matrix");
  }
  if ((a.array() < 0.0).any() || !a.allFinite()) {
    throw Error(ErrorCode::MalformedInput, "expected a finite non-negative matrix");
  }
}

struct Bracket {
  double lo;
  double hi;
};

// Collatz-Wielandt bounds of a positive vector.
Bracket collatz_wielandt(const Eigen::MatrixXd& a, const Eigen::VectorXd& v) {
  const Eigen::VectorXd w = a * v;
  Bracket b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double r = w(i) / v(i);
    b.lo = std::min(b.lo, r);
    b.hi = std::max(b.hi, r);
  }
  return b;
}

struct PerronVector {
  double mu;
  Eigen::VectorXd v;
  int iterations;
};

PerronVector dominant_vector(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return {a(0, 0), Eigen::VectorXd::Ones(1), 0};

  const double scale = a.rowwise().sum().maxCoeff();
  const double shift = kShiftFraction * scale;
  Eigen::MatrixXd shifted = a;
  shifted.diagonal().array() += shift;

  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  int iterations = 0;
  Bracket bracket = collatz_wielandt(a, v);

  auto power_steps = [&](int count) {
    for (int k = 0; k < count && iterations < kMaxPowerIterations; ++k, ++iterations) {
      Eigen::VectorXd w = shifted * v;
      v = w / w.sum();
      if ((iterations & 15) == 0) {
        bracket = collatz_wielandt(a, v);
        if (bracket.hi - bracket.lo <= 1e-6 * bracket.hi) break;
      }
    }
    bracket = collatz_wielandt(a, v);
  };

  power_steps(kPowerPhaseIterations);

  while (true) {
    // Shifted inverse iteration from above: for sigma > mu the matrix
    // (sigma I - A)^{-1} is entrywise non-negative, so positivity is kept.
    Eigen::VectorXd best = v;
    Bracket best_bracket = bracket;
    for (int step = 0; step < kMaxRefineSteps; ++step, ++iterations) {
      if (best_bracket.hi - best_bracket.lo <= kCertifiedGap * best_bracket.hi) break;
      const double sigma = best_bracket.hi * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()) +
                           std::numeric_limits<double>::min();
      Eigen::MatrixXd resolvent = -a;
      resolvent.diagonal().array() += sigma;
      Eigen::VectorXd w = resolvent.fullPivLu().solve(best);
      if (!w.allFinite()) break;
      w /= w.sum();
      if ((w.array() <= 0.0).any()) break;
      const Bracket b = collatz_wielandt(a, w);
      if (b.hi - b.lo >= best_bracket.hi - best_bracket.lo) break;
      best = w;
      best_bracket = b;
    }
    v = best;
    bracket = best_bracket;
    if (bracket.hi - bracket.lo <= kAcceptedGap * bracket.hi) break;
    if (iterations >= kMaxPowerIterations) {
      throw Error(ErrorCode::DidNotConverge,
                  "Perron iteration stalled after " + std::to_string(iterations) +
                      " iterations (gap " + std::to_string(bracket.hi - bracket.lo) + ")");
    }
    power_steps(10'000);
  }
  return {0.5 * (bracket.lo + bracket.hi), v, iterations};
}

template <class Matrix>
Matrix adjugate_impl(const Matrix& a) {
  const Eigen::Index n = a.rows();
  Matrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  Matrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      const auto det = n - 1 <= 4 ? minor.determinant() : minor.fullPivLu().determinant();
      adj(j, i) = ((i + j) % 2 == 0) ? det : -det;
    }
  }
  return adj;
}

}  // namespace

bool is_irreducible(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  if (a.rows() == 1) return a(0, 0) != 0.0;
  return strongly_connected_components(pattern(a)).size() == 1;
}

bool is_primitive(const Eigen::MatrixXd& a) {
  if (!is_irreducible(a)) return false;
  // Period = gcd over edges u->v of level(u) + 1 - level(v), BFS levels from 0.
  const auto adjacency = pattern(a);
  const std::size_t n = adjacency.size();
  std::vector<long long> level(n, -1);
  std::queue<std::size_t> queue;
  level[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t v : adjacency[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push(v);
      }
    }
  }
  long long period = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : adjacency[u]) period = std::gcd(period, std::llabs(level[u] + 1 - level[v]));
  }
  return period == 1;
}

PerronData perron_eigen(const Eigen::MatrixXd& a) {
  require_nonnegative_square(a);
  if (!is_irreducible(a)) throw Error(ErrorCode::NotIrreducible, "matrix pattern is reducible");
  PerronVector right = dominant_vector(a);
  PerronVector left = dominant_vector(a.transpose());
  PerronData data;
  data.mu = right.mu;
  data.right = right.v / right.v.sum();
  data.left = left.v / left.v.dot(data.right);
  data.iterations = right.iterations + left.iterations;
  if ((data.right.array() <= 0.0).any() || (data.left.array() <= 0.0).any()) {
    throw Error(ErrorCode::NotIrreducible, "Perron vectors are not strictly positive");
  }
  return data;
}

double perron_root(const Eigen::MatrixXd& a) {
  require_nonnegative_square(a);
  if (!is_irreducible(a)) throw Error(ErrorCode::NotIrreducible, "matrix pattern is reducible");
  return dominant_vector(a).mu;
}

const char* to_string(ProjectionMethod method) noexcept {
  switch (method) {
    case ProjectionMethod::Adjugate: return "adjugate";
    case ProjectionMethod::CharPolyDerivative: return "charpoly-derivative";
    case ProjectionMethod::EigenProduct: return "eigen-product";
    case ProjectionMethod::PowerLimit: return "power-limit";
  }
  return "unknown";
}

Eigen::MatrixXd adjugate(const Eigen::MatrixXd& a) { return adjugate_impl(a); }
Eigen::MatrixXcd adjugate(const Eigen::MatrixXcd& a) { return adjugate_impl(a); }

Eigen::VectorXd characteristic_polynomial(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c(n) = 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c(n - k + 1) * identity;
    c(n - k) = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

Eigen::MatrixXd perron_projection(const Eigen::MatrixXd& a, ProjectionMethod method) {
  require_nonnegative_square(a);
  if (!is_irreducible(a)) throw Error(ErrorCode::NotIrreducible, "matrix pattern is reducible");
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);

  switch (method) {
    case ProjectionMethod::Adjugate: {
      const double mu = perron_root(a);
      const Eigen::MatrixXd adj = adjugate(Eigen::MatrixXd(mu * identity - a));
      return adj / adj.trace();
    }
    case ProjectionMethod::CharPolyDerivative: {
      const double mu = perron_root(a);
      const Eigen::VectorXd c = characteristic_polynomial(a);
      double derivative = 0.0;
      for (Eigen::Index k = n; k >= 1; --k) derivative = derivative * mu + static_cast<double>(k) * c(k);
      if (derivative == 0.0) {
        throw Error(ErrorCode::SingularDenominator, "p_A'(mu) vanished");
      }
      return adjugate(Eigen::MatrixXd(mu * identity - a)) / derivative;
    }
    case ProjectionMethod::EigenProduct: {
      const double mu = perron_root(a);
      if (n == 1) return Eigen::MatrixXd::Ones(1, 1);
      Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
      const Eigen::VectorXcd eigenvalues = solver.eigenvalues();
      Eigen::Index perron_index = 0;
      for (Eigen::Index k = 1; k < n; ++k) {
        if (std::abs(eigenvalues(k) - mu) < std::abs(eigenvalues(perron_index) - mu)) perron_index = k;
      }
      const Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
      Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(n, n);
      std::complex<double> denominator = 1.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == perron_index) continue;
        Eigen::MatrixXcd factor = ac;
        factor.diagonal().array() -= eigenvalues(k);
        product = product * factor;
        denominator *= mu - eigenvalues(k);
      }
      return (product / denominator).real();
    }
    case ProjectionMethod::PowerLimit: {
      if (!is_primitive(a)) throw Error(ErrorCode::NotPrimitive, "power limit needs a primitive matrix");
      const double mu = perron_root(a);
      Eigen::MatrixXd b = a / mu;
      Eigen::MatrixXd previous = b / b.trace();
      for (int step = 0; step < 200; ++step) {
        b = b * b;
        b /= b.cwiseAbs().maxCoeff();
        const double trace = b.trace();
        if (trace > 0.0) {
          Eigen::MatrixXd current = b / trace;
          const double change = (current - previous).cwiseAbs().maxCoeff();
          previous = std::move(current);
          if (change <= 1e-13 * previous.cwiseAbs().maxCoeff()) return previous;
        }
      }
      throw Error(ErrorCode::DidNotConverge, "power limit did not settle");
    }
  }
  return {};
}

}  // namespace orbitcount
