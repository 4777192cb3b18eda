#include "orbitcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "orbitcount/error.hpp"

namespace orbitcount {

namespace {

// Allowed slack on the per-vertex probability sum.
constexpr double kProbabilitySlack = 1e-12;

std::size_t parallel_index(const std::vector<Edge>& edges, EdgeId id) {
  std::size_t k = 0;
  for (EdgeId e = 0; e <= id; ++e) {
    if (edges[e].from == edges[id].from && edges[e].to == edges[id].to) ++k;
  }
  return k;
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

WeightedDigraph WeightedDigraph::build(const GraphSpec& spec) {
  if (spec.vertices == 0) {
    throw Error(ErrorCode::IndexOutOfRange, "graph needs at least one vertex");
  }
  WeightedDigraph g;
  g.vertex_count_ = spec.vertices;
  g.out_.resize(spec.vertices);
  g.min_length_ = std::numeric_limits<double>::infinity();

  const bool any_prob = std::any_of(spec.edges.begin(), spec.edges.end(),
                                    [](const EdgeSpec& e) { return e.probability.has_value(); });
  const bool all_prob = std::all_of(spec.edges.begin(), spec.edges.end(),
                                    [](const EdgeSpec& e) { return e.probability.has_value(); });
  if (any_prob && !all_prob) {
    throw Error(ErrorCode::MixedProbabilityAnnotation,
                "either every edge carries a probability or none does");
  }
  g.has_probabilities_ = any_prob;

  g.edges_.reserve(spec.edges.size());
  for (std::size_t k = 0; k < spec.edges.size(); ++k) {
    const EdgeSpec& e = spec.edges[k];
    const std::string where = "edge " + std::to_string(k);
    if (e.from < 1 || e.from > spec.vertices || e.to < 1 || e.to > spec.vertices) {
      throw Error(ErrorCode::IndexOutOfRange, where + " endpoint outside 1.." +
                                                  std::to_string(spec.vertices));
    }
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw Error(ErrorCode::NonPositiveLength, where + " has length " + std::to_string(e.length));
    }
    if (e.probability && !(*e.probability > 0.0 && std::isfinite(*e.probability))) {
      throw Error(ErrorCode::MalformedInput,
                  where + " probability must be positive, got " + std::to_string(*e.probability));
    }
    Edge edge{k, e.from - 1, e.to - 1, e.length, e.probability, e.name};
    g.out_[edge.from].push_back(k);
    g.min_length_ = std::min(g.min_length_, e.length);
    g.edges_.push_back(std::move(edge));
  }

  if (g.has_probabilities_) {
    for (VertexId v = 0; v < g.vertex_count_; ++v) {
      const double total = g.outgoing_probability(v);
      if (total > 1.0 + kProbabilitySlack) {
        throw Error(ErrorCode::ProbabilitySumExceedsOne,
                    "vertex " + std::to_string(v + 1) + " has outgoing probability " +
                        std::to_string(total));
      }
    }
  }
  return g;
}

const Edge& WeightedDigraph::edge(EdgeId id) const {
  if (id >= edges_.size()) {
    throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(id));
  }
  return edges_[id];
}

std::span<const EdgeId> WeightedDigraph::out_edges(VertexId v) const {
  if (v >= vertex_count_) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  return out_[v];
}

double WeightedDigraph::outgoing_probability(VertexId v) const {
  double total = 0.0;
  for (EdgeId e : out_edges(v)) total += edges_[e].probability.value_or(0.0);
  return total;
}

std::optional<EdgeId> WeightedDigraph::find_edge(std::string_view label) const {
  for (const Edge& e : edges_) {
    if (!e.name.empty() && e.name == label) return e.id;
  }
  // from-to#k
  const auto dash = label.find('-');
  const auto hash = label.find('#');
  if (dash == std::string_view::npos || hash == std::string_view::npos || hash < dash) {
    return std::nullopt;
  }
  const auto from = parse_index(label.substr(0, dash));
  const auto to = parse_index(label.substr(dash + 1, hash - dash - 1));
  const auto k = parse_index(label.substr(hash + 1));
  if (!from || !to || !k || *from < 1 || *to < 1 || *k < 1) return std::nullopt;
  std::size_t seen = 0;
  for (const Edge& e : edges_) {
    if (e.from + 1 == *from && e.to + 1 == *to && ++seen == *k) return e.id;
  }
  return std::nullopt;
}

std::string WeightedDigraph::edge_label(EdgeId id) const {
  const Edge& e = edge(id);
  if (!e.name.empty()) return e.name;
  return std::to_string(e.from + 1) + "-" + std::to_string(e.to + 1) + "#" +
         std::to_string(parallel_index(edges_, id));
}

GraphSpec WeightedDigraph::to_spec() const {
  GraphSpec spec;
  spec.vertices = vertex_count_;
  spec.edges.reserve(edges_.size());
  for (const Edge& e : edges_) {
    spec.edges.push_back(EdgeSpec{e.from + 1, e.to + 1, e.length, e.probability, e.name});
  }
  return spec;
}

}  // namespace orbitcount
