#include "orbitcount/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orbitcount {

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next neighbour position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adjacency[v].size()) {
        const std::size_t w = adjacency[v][pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<std::size_t> component;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

ConnectivityReport strong_connectivity(const WeightedDigraph& g) {
  std::vector<std::vector<std::size_t>> adjacency(g.vertex_count());
  for (const Edge& e : g.edges()) adjacency[e.from].push_back(e.to);
  ConnectivityReport report;
  report.components = strongly_connected_components(adjacency);
  report.strongly_connected = report.components.size() == 1;
  return report;
}

namespace {

struct CycleSearch {
  const WeightedDigraph& g;
  std::size_t max_edges;
  VertexId start = 0;
  std::vector<bool> blocked;
  std::vector<double> lengths;

  void extend(VertexId v, double length, std::size_t depth) {
    for (EdgeId id : g.out_edges(v)) {
      const Edge& e = g.edge(id);
      if (e.to == start) {
        lengths.push_back(length + e.length);
      } else if (e.to > start && !blocked[e.to] && depth + 1 < max_edges) {
        blocked[e.to] = true;
        extend(e.to, length + e.length, depth + 1);
        blocked[e.to] = false;
      }
    }
  }
};

}  // namespace

std::vector<double> cycle_lengths(const WeightedDigraph& g, std::size_t max_edges) {
  CycleSearch search{g, max_edges, 0, std::vector<bool>(g.vertex_count(), false), {}};
  if (max_edges == 0) return {};
  // Each cycle is rooted at its smallest vertex, which fixes the rotation.
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    search.start = s;
    search.blocked[s] = true;
    search.extend(s, 0.0, 0);
    search.blocked[s] = false;
  }
  std::sort(search.lengths.begin(), search.lengths.end());
  return search.lengths;
}

RationalApprox best_rational_approximation(double a, double b, long long max_denominator) {
  const long double x = static_cast<long double>(a) / static_cast<long double>(b);
  auto residual = [&](long long p, long long q) {
    return static_cast<double>(std::fabs(static_cast<long double>(a) * q -
                                         static_cast<long double>(b) * p));
  };

  // Convergents h/k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  RationalApprox best{h, k, residual(h, k)};
  long double frac = x - std::floor(x);
  for (int step = 0; step < 64 && frac > 1e-18L; ++step) {
    const long double inv = 1.0L / frac;
    const long double term_ld = std::floor(inv);
    if (term_ld > static_cast<long double>(max_denominator)) break;
    const long long term = static_cast<long long>(term_ld);
    const long long h_next = term * h + h_prev;
    const long long k_next = term * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - term_ld;
    const double r = residual(h, k);
    if (r < best.residual) best = RationalApprox{h, k, r};
  }
  return best;
}

IncommensurabilityVerdict incommensurability_check(const WeightedDigraph& g,
                                                   const IncommensurabilityOptions& options) {
  const std::size_t max_edges = options.max_edges == 0 ? g.vertex_count() : options.max_edges;
  const std::vector<double> cycles = cycle_lengths(g, max_edges);
  IncommensurabilityVerdict verdict;
  if (cycles.size() < 2) return verdict;

  std::optional<RationalApprox> worst;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const RationalApprox approx =
          best_rational_approximation(cycles[i], cycles[j], options.max_denominator);
      if (approx.residual > options.tolerance) {
        verdict.status = CommensurabilityStatus::IncommensurableWitness;
        verdict.witness = std::make_pair(cycles[i], cycles[j]);
        verdict.rational_approx = approx;
        return verdict;
      }
      if (!worst || approx.residual > worst->residual) worst = approx;
    }
  }
  verdict.status = CommensurabilityStatus::CommensurableWithinTolerance;
  verdict.rational_approx = worst;
  return verdict;
}

const char* to_string(CommensurabilityStatus status) noexcept {
  switch (status) {
    case CommensurabilityStatus::IncommensurableWitness: return "IncommensurableWitness";
    case CommensurabilityStatus::CommensurableWithinTolerance: return "CommensurableWithinTolerance";
    case CommensurabilityStatus::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

}  // namespace orbitcount
