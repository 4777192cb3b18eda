#include "orbitcount/asymptotics.hpp"

#include <cmath>
#include <string>

#include "orbitcount/error.hpp"
#include "orbitcount/perron.hpp"

namespace orbitcount {

namespace {

constexpr double kSeriesCutoff = 1e-4;

void require_mode(const SpectralSolution& sol, Mode mode, const char* what) {
  if (sol.mode != mode) {
    throw Error(ErrorCode::WrongMode, std::string(what) + " needs a " + std::string(to_string(mode)) +
                                          "-mode solution, got " + std::string(to_string(sol.mode)));
  }
}

void require_vertex(const SpectralSolution& sol, VertexId v) {
  if (v >= static_cast<VertexId>(sol.q.rows())) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v + 1));
  }
}

const Edge& require_edge(const WeightedDigraph& g, EdgeId edge) {
  if (edge >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(edge));
  return g.edge(edge);
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Survival: return "S";
  }
  return "?";
}

double AsymptoticEstimate::value_at(double x) const { return coefficient * std::exp(lambda * x); }

double exp_window(double length, double s) {
  const double z = length * s;
  if (std::abs(z) < kSeriesCutoff) {
    // l (1 - z/2 + z^2/6 - z^3/24)
    return length * (1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0);
  }
  return -std::expm1(-z) / s;
}

std::complex<double> exp_window(double length, std::complex<double> s) {
  const std::complex<double> z = length * s;
  if (std::abs(z) < kSeriesCutoff) {
    return length * (1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0);
  }
  return (1.0 - std::exp(-z)) / s;
}

AsymptoticEstimate count_paths_asymptotic(const SpectralSolution& sol, VertexId i, VertexId j) {
  require_mode(sol, Mode::Counting, "path counting");
  if (!(sol.lambda > 0.0)) throw Error(ErrorCode::NonPositiveLambda, "lambda = " + std::to_string(sol.lambda));
  require_vertex(sol, i);
  require_vertex(sol, j);
  return {Family::A, sol.q(i, j) / sol.lambda, sol.lambda, i, j, false};
}

AsymptoticEstimate count_edge_hits_asymptotic(const SpectralSolution& sol, const WeightedDigraph& g,
                                              VertexId i, EdgeId edge) {
  require_mode(sol, Mode::Counting, "edge-hit counting");
  if (!(sol.lambda > 0.0)) throw Error(ErrorCode::NonPositiveLambda, "lambda = " + std::to_string(sol.lambda));
  require_vertex(sol, i);
  const Edge& e = require_edge(g, edge);
  return {Family::B, exp_window(e.length, sol.lambda) * sol.q(i, e.from), sol.lambda, i, edge, false};
}

AsymptoticEstimate vertex_probability_asymptotic(const SpectralSolution& sol, VertexId i, VertexId j) {
  require_mode(sol, Mode::Probability, "vertex probability");
  require_vertex(sol, i);
  require_vertex(sol, j);
  return {Family::C, sol.q(i, j), sol.lambda, i, j, true};
}

AsymptoticEstimate edge_probability_asymptotic(const SpectralSolution& sol, const WeightedDigraph& g,
                                               VertexId i, EdgeId edge) {
  require_mode(sol, Mode::Probability, "edge probability");
  require_vertex(sol, i);
  const Edge& e = require_edge(g, edge);
  const double p = e.probability.value_or(0.0);
  return {Family::D, p * exp_window(e.length, sol.lambda) * sol.q(i, e.from), sol.lambda, i, edge, false};
}

AsymptoticEstimate survival_probability_asymptotic(const SpectralSolution& sol, const WeightedDigraph& g,
                                                   VertexId i) {
  require_mode(sol, Mode::Probability, "survival probability");
  require_vertex(sol, i);
  AsymptoticEstimate estimate{Family::Survival, 0.0, sol.lambda, i, 0, false};
  if (sol.lambda == 0.0) {
    estimate.coefficient = 1.0;
    return estimate;
  }
  for (const Edge& e : g.edges()) {
    estimate.coefficient += edge_probability_asymptotic(sol, g, i, e.id).coefficient;
  }
  return estimate;
}

std::complex<double> laplace_transform(const MatrixFunction& f, double lambda, Family family, VertexId i,
                                       std::size_t index, std::complex<double> s) {
  const bool counting = family == Family::A || family == Family::B;
  const Mode needed = counting ? Mode::Counting : Mode::Probability;
  if (f.mode() != needed) {
    throw Error(ErrorCode::WrongMode, std::string("family ") + to_string(family) + " needs " +
                                          std::string(to_string(needed)) + " mode");
  }
  if (!(s.real() > lambda)) {
    throw Error(ErrorCode::DomainError, "Re(s) = " + std::to_string(s.real()) +
                                            " must exceed lambda = " + std::to_string(lambda));
  }
  const WeightedDigraph& g = f.graph();
  if (i >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(i + 1));

  const Eigen::Index n = static_cast<Eigen::Index>(f.dimension());
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) - f.evaluate(s);
  const std::complex<double> det = a.fullPivLu().determinant();
  const Eigen::MatrixXcd adj = adjugate(a);
  auto resolvent = [&](VertexId j) { return adj(i, j) / det; };

  switch (family) {
    case Family::A:
      if (index >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(index + 1));
      return resolvent(index) / s;
    case Family::C:
      if (index >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(index + 1));
      return resolvent(index);
    case Family::B: {
      const Edge& e = require_edge(g, index);
      return exp_window(e.length, s) * resolvent(e.from);
    }
    case Family::D: {
      const Edge& e = require_edge(g, index);
      return *e.probability * exp_window(e.length, s) * resolvent(e.from);
    }
    case Family::Survival: {
      std::complex<double> total = 0.0;
      for (const Edge& e : g.edges()) total += *e.probability * exp_window(e.length, s) * resolvent(e.from);
      return total;
    }
  }
  return {};
}

double laplace_residue(const SpectralSolution& sol, const WeightedDigraph& g, Family family, VertexId i,
                       std::size_t index) {
  switch (family) {
    case Family::A: return count_paths_asymptotic(sol, i, index).coefficient;
    case Family::B: return count_edge_hits_asymptotic(sol, g, i, index).coefficient;
    case Family::C: return vertex_probability_asymptotic(sol, i, index).coefficient;
    case Family::D: return edge_probability_asymptotic(sol, g, i, index).coefficient;
    case Family::Survival: {
      // The lambda = 0 survival transform has residue sum_a p l Q, which is 1.
      double total = 0.0;
      for (const Edge& e : g.edges()) total += edge_probability_asymptotic(sol, g, i, e.id).coefficient;
      return total;
    }
  }
  return 0.0;
}

}  // namespace orbitcount
