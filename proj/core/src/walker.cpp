#include "orbitcount/walker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "orbitcount/error.hpp"

namespace orbitcount {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream keyed by the run seed: draw k is splitmix64(seed + k * golden).
// Setting one up costs nothing, unlike a Mersenne Twister with its 312-word state.
class RunStream {
 public:
  explicit RunStream(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t operator()() noexcept {
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
  }

 private:
  std::uint64_t state_;
};

// Uniform in [0, 1) from the top 53 bits.
double uniform01(RunStream& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require_walkable(const WeightedDigraph& g, VertexId start, double horizon) {
  if (!g.has_probabilities()) {
    throw Error(ErrorCode::MissingProbabilities, "random walks need a probability-annotated graph");
  }
  if (start >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(start + 1));
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::DomainError, "horizon must be finite and >= 0");
  }
}

WalkOutcome walk(const WeightedDigraph& g, VertexId start, double horizon, std::uint64_t seed) {
  RunStream rng(seed);
  VertexId v = start;
  double t = 0.0;
  while (true) {
    if (t == horizon) return {AtVertex{v}, t};
    const double u = uniform01(rng);
    double cumulative = 0.0;
    const Edge* chosen = nullptr;
    for (EdgeId id : g.out_edges(v)) {
      const Edge& e = g.edge(id);
      cumulative += *e.probability;
      if (u < cumulative) {
        chosen = &e;
        break;
      }
    }
    // A stochastic row whose float sum rounds just below 1 must not leak.
    if (chosen == nullptr && cumulative >= 1.0 - 1e-12 && !g.out_edges(v).empty()) {
      chosen = &g.edge(g.out_edges(v).back());
    }
    if (chosen == nullptr) return {Exited{t}, t};
    if (horizon < t + chosen->length) return {OnEdge{chosen->id, horizon - t}, horizon};
    t += chosen->length;
    v = chosen->to;
  }
}

EnsembleEstimate run_ensemble(const WeightedDigraph& g, VertexId start, double horizon,
                              const EnsembleOptions& options,
                              const std::function<bool(const WalkOutcome&)>& hit) {
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, options.samples)));
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned worker) {
    std::uint64_t count = 0;
    for (std::uint64_t k = worker; k < options.samples; k += threads) {
      const std::uint64_t run = options.first_run + k;
      if (hit(walk(g, start, horizon, run_seed(options.seed, run)))) ++count;
    }
    partial[worker] = count;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::uint64_t hits = 0;
  for (std::uint64_t c : partial) hits += c;
  return EnsembleEstimate::from_counts(hits, options.samples, options.seed);
}

}  // namespace

std::uint64_t run_seed(std::uint64_t master, std::uint64_t run) noexcept {
  return splitmix64(splitmix64(master) ^ run);
}

WalkOutcome simulate_walk(const WeightedDigraph& g, VertexId start, double horizon, std::uint64_t seed) {
  require_walkable(g, start, horizon);
  return walk(g, start, horizon, seed);
}

EnsembleEstimate EnsembleEstimate::from_counts(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed) {
  EnsembleEstimate e;
  e.hits = hits;
  e.sample_count = samples;
  e.seed = seed;
  if (samples > 0) {
    const double n = static_cast<double>(samples);
    e.point_estimate = static_cast<double>(hits) / n;
    e.standard_error = std::sqrt(e.point_estimate * (1.0 - e.point_estimate) / n);
  }
  return e;
}

EnsembleEstimate merge(const EnsembleEstimate& a, const EnsembleEstimate& b) {
  return EnsembleEstimate::from_counts(a.hits + b.hits, a.sample_count + b.sample_count, a.seed);
}

EnsembleEstimate ensemble_edge_probability(const WeightedDigraph& g, VertexId start, EdgeId edge, double horizon,
                                           const EnsembleOptions& options) {
  require_walkable(g, start, horizon);
  if (edge >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(edge));
  return run_ensemble(g, start, horizon, options, [edge](const WalkOutcome& out) {
    const auto* on = std::get_if<OnEdge>(&out.status);
    return on != nullptr && on->edge == edge;
  });
}

EnsembleEstimate ensemble_survival(const WeightedDigraph& g, VertexId start, double horizon,
                                   const EnsembleOptions& options) {
  require_walkable(g, start, horizon);
  return run_ensemble(g, start, horizon, options, [](const WalkOutcome& out) { return out.on_graph(); });
}

}  // namespace orbitcount
