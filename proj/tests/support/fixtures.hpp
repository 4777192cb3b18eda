#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orbitcount/orbitcount.hpp"

namespace orbitcount::testing {

// Two vertices: a loop at 1, one edge 1->2, two edges back 2->1.
inline GraphSpec two_vertex_spec(std::optional<double> p = std::nullopt) {
  GraphSpec spec;
  spec.vertices = 2;
  spec.edges = {{1, 1, std::log(2.0), p, "alpha"},
                {1, 2, std::log(2.0), p, "beta"},
                {2, 1, std::log(1.5), p, "gamma1"},
                {2, 1, std::log(3.0), p, "gamma2"}};
  return spec;
}

inline WeightedDigraph two_vertex_graph() { return WeightedDigraph::build(two_vertex_spec()); }
inline WeightedDigraph two_vertex_stochastic() { return WeightedDigraph::build(two_vertex_spec(0.5)); }

inline WeightedDigraph single_loop(double length, std::optional<double> p = std::nullopt) {
  return WeightedDigraph::build({1, {{1, 1, length, p, "loop"}}});
}

inline WeightedDigraph two_loops(double a, double b) {
  return WeightedDigraph::build({1, {{1, 1, a, std::nullopt, "a"}, {1, 1, b, std::nullopt, "b"}}});
}

inline double log432() { return std::log(432.0); }

struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t max_extra_edges = 6;
  bool unit_lengths = false;
  bool self_loop = false;      // forces aperiodicity
  bool probabilities = false;  // right-stochastic annotation
};

// A random strongly connected graph: a Hamiltonian cycle through a shuffled vertex order plus extras.
inline WeightedDigraph random_strong_graph(std::mt19937_64& rng, const RandomGraphOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> nd(opt.min_vertices, opt.max_vertices);
  const std::size_t n = nd(rng);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> len(0.2, 2.0);
  auto length = [&] { return opt.unit_lengths ? 1.0 : len(rng); };
  GraphSpec spec;
  spec.vertices = n;
  for (std::size_t k = 0; k < n; ++k) spec.edges.push_back({order[k], order[(k + 1) % n], length(), {}, ""});
  if (opt.self_loop) spec.edges.push_back({order[0], order[0], length(), {}, ""});
  std::uniform_int_distribution<std::size_t> ed(0, opt.max_extra_edges);
  std::uniform_int_distribution<std::size_t> vd(1, n);
  const std::size_t extra = ed(rng);
  for (std::size_t k = 0; k < extra; ++k) spec.edges.push_back({vd(rng), vd(rng), length(), {}, ""});
  if (opt.probabilities) {
    std::vector<std::size_t> outdeg(n + 1, 0);
    for (const auto& e : spec.edges) ++outdeg[e.from];
    for (auto& e : spec.edges) e.probability = 1.0 / static_cast<double>(outdeg[e.from]);
  }
  return WeightedDigraph::build(spec);
}

// Random non-negative irreducible matrix; primitive when a diagonal entry is added.
inline Eigen::MatrixXd random_irreducible(std::mt19937_64& rng, std::size_t n, bool primitive) {
  std::uniform_real_distribution<double> w(0.1, 2.0);
  std::bernoulli_distribution extra(0.3);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) a(order[k], order[(k + 1) % n]) = w(rng);
  if (!primitive) return a;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (extra(rng)) a(r, c) += w(rng);
    }
  }
  a(order[0], order[0]) += w(rng);
  return a;
}

// Volume-conserving rule whose graph is strongly connected: child 0 of tile t has type t+1 mod T.
inline SubstitutionRule random_rule(std::mt19937_64& rng, int dimension, std::size_t tiles) {
  std::uniform_int_distribution<std::size_t> kd(2, 4);
  std::uniform_int_distribution<std::size_t> td(0, tiles - 1);
  std::uniform_real_distribution<double> wd(0.2, 1.0);
  SubstitutionRule rule;
  rule.dimension = dimension;
  for (std::size_t t = 0; t < tiles; ++t) {
    const std::size_t k = kd(rng);
    std::vector<double> w(k);
    double total = 0.0;
    for (double& x : w) total += (x = wd(rng));
    std::vector<RuleChild> children;
    for (std::size_t c = 0; c < k; ++c) {
      children.push_back({c == 0 ? (t + 1) % tiles : td(rng), std::pow(w[c] / total, 1.0 / dimension)});
    }
    rule.prototiles.push_back(std::move(children));
  }
  return rule;
}

}  // namespace orbitcount::testing
