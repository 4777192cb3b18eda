#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcount {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Raw edge description as it appears in input files. Vertices are 1-based here.
struct EdgeSpec {
  std::size_t from = 0;
  std::size_t to = 0;
  double length = 0.0;
  std::optional<double> probability;
  std::string name;
};

struct GraphSpec {
  std::size_t vertices = 0;
  std::vector<EdgeSpec> edges;
};

/// Validated edge. `from`/`to` are 0-based.
struct Edge {
  EdgeId id = 0;
  VertexId from = 0;
  VertexId to = 0;
  double length = 0.0;
  std::optional<double> probability;
  std::string name;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with positive edge lengths and optional per-edge
/// transition probabilities. Immutable once built; loops and parallel edges
/// are allowed.
class WeightedDigraph {
 public:
  /// Validates `spec` and builds the graph. Throws orbitcount::Error with
  /// NonPositiveLength, IndexOutOfRange, MixedProbabilityAnnotation or
  /// ProbabilitySumExceedsOne.
  static WeightedDigraph build(const GraphSpec& spec);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;

  /// Edge ids leaving `v`, in input order.
  std::span<const EdgeId> out_edges(VertexId v) const;

  bool has_probabilities() const noexcept { return has_probabilities_; }
  double min_edge_length() const noexcept { return min_length_; }

  /// Sum of the probabilities of the edges leaving `v` (0 when unannotated).
  double outgoing_probability(VertexId v) const;

  /// Resolves an edge by its `name`, or by the `from-to#k` form (1-based
  /// vertices, k-th parallel edge counting from 1).
  std::optional<EdgeId> find_edge(std::string_view label) const;

  /// `name` if present, otherwise the `from-to#k` form.
  std::string edge_label(EdgeId id) const;

  /// Inverse of build(): reproduces a spec with 1-based vertices.
  GraphSpec to_spec() const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  bool has_probabilities_ = false;
  double min_length_ = 0.0;
};

}  // namespace orbitcount
