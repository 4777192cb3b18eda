#include "orbitcount/spectral.hpp"

#include <cmath>
#include <string>

#include "orbitcount/error.hpp"

namespace orbitcount {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kCriticalTolerance = 1e-10;
constexpr int kMaxBisection = 200;
constexpr double kBracketLimit = 64.0;  // in units of 1 / min edge length

}  // namespace

double spectral_radius(const MatrixFunction& f, double sigma) {
  return perron_root(f.evaluate_real(sigma));
}

SpectralSolution solve_lambda(const MatrixFunction& f) {
  if (f.graph().edge_count() == 0 || !is_irreducible(f.evaluate_real(0.0))) {
    throw Error(ErrorCode::NotStronglyConnected,
                "the graph must be strongly connected (every vertex reaches every vertex)");
  }
  const double step = 1.0 / f.graph().min_edge_length();
  const double limit = kBracketLimit * step;
  const double mu0 = spectral_radius(f, 0.0);

  double lo = 0.0;
  double hi = 0.0;
  SpectralSolution sol;
  sol.mode = f.mode();

  if (f.mode() == Mode::Counting) {
    if (!(mu0 > 1.0 + kRootTolerance)) {
      throw Error(ErrorCode::BracketFailure,
                  "mu(0) = " + std::to_string(mu0) +
                      " <= 1; a single cycle has no exponential growth");
    }
    hi = step;
    while (spectral_radius(f, hi) >= 1.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > limit) throw Error(ErrorCode::BracketFailure, "mu stays >= 1 up to sigma = " + std::to_string(limit));
    }
  } else {
    if (mu0 > 1.0 + kRootTolerance) {
      throw Error(ErrorCode::BracketFailure,
                  "mu(0) = " + std::to_string(mu0) + " > 1 for a probability matrix");
    }
    if (std::abs(mu0 - 1.0) <= kRootTolerance) {
      lo = hi = 0.0;
    } else {
      lo = -step;
      while (spectral_radius(f, lo) <= 1.0) {
        hi = lo;
        lo *= 2.0;
        if (lo < -limit) {
          throw Error(ErrorCode::BracketFailure, "mu stays <= 1 down to sigma = " + std::to_string(-limit));
        }
      }
    }
  }
  sol.bracket = {lo, hi};

  // mu(lo) >= 1 >= mu(hi)
  double lambda = 0.5 * (lo + hi);
  if (lo != hi) {
    int steps = 0;
    for (; steps < kMaxBisection; ++steps) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double mu = spectral_radius(f, mid);
      if (mu == 1.0) {
        lo = hi = mid;
        break;
      }
      (mu > 1.0 ? lo : hi) = mid;
    }
    sol.bisection_steps = steps;
    lambda = 0.5 * (lo + hi);
  }

  sol.lambda = lambda;
  sol.perron_at_lambda = perron_eigen(f.evaluate_real(lambda));
  sol.residual = std::abs(sol.perron_at_lambda.mu - 1.0);
  if (sol.residual > kRootTolerance) {
    throw Error(ErrorCode::DidNotConverge,
                "bisection ended with |mu - 1| = " + std::to_string(sol.residual));
  }
  sol.q = q_matrix(f, lambda);
  return sol;
}

Eigen::MatrixXd q_matrix(const MatrixFunction& f, double lambda) {
  const Eigen::MatrixXd m = f.evaluate_real(lambda);
  const double mu = perron_root(m);
  if (std::abs(mu - 1.0) > kCriticalTolerance) {
    throw Error(ErrorCode::NotCritical, "mu(" + std::to_string(lambda) + ") = " + std::to_string(mu));
  }
  const Eigen::Index n = m.rows();
  const Eigen::MatrixXd adj = adjugate(Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n) - m));
  const Eigen::MatrixXd dm = f.evaluate_derivative_real(lambda);
  const double denominator = -(adj * dm).trace();
  const double scale = adj.cwiseAbs().maxCoeff() * dm.cwiseAbs().maxCoeff() * static_cast<double>(n);
  if (!(std::abs(denominator) > 1e-14 * scale) || !std::isfinite(denominator)) {
    throw Error(ErrorCode::SingularDenominator,
                "tr(adj(I - M) M') = " + std::to_string(-denominator) + "; lambda is not a simple root");
  }
  return adj / denominator;
}

std::complex<double> characteristic_determinant(const MatrixFunction& f, std::complex<double> s) {
  const Eigen::Index n = static_cast<Eigen::Index>(f.dimension());
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) - f.evaluate(s);
  return a.fullPivLu().determinant();
}

std::vector<double> determinant_scan(const MatrixFunction& f, double lambda, std::span<const double> ts) {
  std::vector<double> values;
  values.reserve(ts.size());
  for (double t : ts) values.push_back(std::abs(characteristic_determinant(f, {lambda, t})));
  return values;
}

}  // namespace orbitcount
