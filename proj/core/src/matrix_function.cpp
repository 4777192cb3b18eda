#include "orbitcount/matrix_function.hpp"

#include <cmath>

#include "orbitcount/error.hpp"

namespace orbitcount {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Counting: return "counting";
    case Mode::Probability: return "probability";
    case Mode::EdgeBased: return "edge";
  }
  return "unknown";
}

MatrixFunction::MatrixFunction(WeightedDigraph graph, Mode mode)
    : graph_(std::move(graph)), mode_(mode) {
  if (mode_ != Mode::Counting && !graph_.has_probabilities()) {
    throw Error(ErrorCode::MissingProbabilities,
                std::string(to_string(mode_)) + " mode needs a probability-annotated graph");
  }
  switch (mode_) {
    case Mode::Counting:
      dimension_ = graph_.vertex_count();
      for (const Edge& e : graph_.edges()) terms_.push_back({e.from, e.to, 1.0, e.length});
      break;
    case Mode::Probability:
      dimension_ = graph_.vertex_count();
      for (const Edge& e : graph_.edges()) terms_.push_back({e.from, e.to, *e.probability, e.length});
      break;
    case Mode::EdgeBased:
      dimension_ = graph_.edge_count();
      for (const Edge& a : graph_.edges()) {
        for (EdgeId b : graph_.out_edges(a.to)) {
          terms_.push_back({b, a.id, *graph_.edge(b).probability, a.length});
        }
      }
      break;
  }
}

Eigen::MatrixXcd MatrixFunction::evaluate(std::complex<double> s) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension_, dimension_);
  for (const Term& t : terms_) m(t.row, t.col) += t.weight * std::exp(-s * t.length);
  return m;
}

Eigen::MatrixXcd MatrixFunction::evaluate_derivative(std::complex<double> s) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension_, dimension_);
  for (const Term& t : terms_) m(t.row, t.col) -= t.length * t.weight * std::exp(-s * t.length);
  return m;
}

Eigen::MatrixXd MatrixFunction::evaluate_real(double s) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dimension_, dimension_);
  for (const Term& t : terms_) m(t.row, t.col) += t.weight * std::exp(-s * t.length);
  return m;
}

Eigen::MatrixXd MatrixFunction::evaluate_derivative_real(double s) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dimension_, dimension_);
  for (const Term& t : terms_) m(t.row, t.col) -= t.length * t.weight * std::exp(-s * t.length);
  return m;
}

}  // namespace orbitcount
