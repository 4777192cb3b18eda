#include "orbitcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "orbitcount/error.hpp"

namespace orbitcount {

namespace {

void require_start(const WeightedDigraph& g, VertexId start) {
  if (start >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(start + 1));
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint32_t k : key) {
      h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

PathStream::PathStream(const WeightedDigraph& g, VertexId start, EnumerationBudget budget)
    : g_(&g), budget_(budget) {
  require_start(g, start);
  if (!std::isfinite(budget.max_length)) {
    throw Error(ErrorCode::DomainError, "max_length must be finite");
  }
  if (budget.max_length >= 0.0) frontier_.push(PathAtom{start, 0.0, 1.0, 0});
}

std::optional<PathAtom> PathStream::next() {
  if (frontier_.empty()) return std::nullopt;
  if (emitted_ >= budget_.max_paths) {
    overflow_ = true;
    return std::nullopt;
  }
  PathAtom atom = frontier_.top();
  frontier_.pop();
  for (EdgeId id : g_->out_edges(atom.terminal)) {
    const Edge& e = g_->edge(id);
    const double length = atom.length + e.length;
    if (length <= budget_.max_length) {
      frontier_.push(PathAtom{e.to, length, atom.probability * e.probability.value_or(1.0), atom.edge_count + 1});
    }
  }
  ++emitted_;
  return atom;
}

PathEnumeration enumerate_paths(const WeightedDigraph& g, VertexId start, EnumerationBudget budget) {
  PathStream stream(g, start, budget);
  PathEnumeration result;
  while (auto atom = stream.next()) result.atoms.push_back(*atom);
  result.overflow = stream.overflow();
  return result;
}

PathOracle::PathOracle(const WeightedDigraph& g, VertexId start, EnumerationBudget budget)
    : g_(&g), start_(start), max_length_(budget.max_length) {
  require_start(g, start);
  if (!std::isfinite(budget.max_length)) throw Error(ErrorCode::DomainError, "max_length must be finite");
  if (budget.max_length < 0.0) return;

  const std::size_t d = g.edge_count();
  // Key: per-edge usage counts followed by the terminal vertex.
  struct Pending {
    std::vector<std::uint32_t> key;
    double length;
    std::uint64_t multiplicity;
    double path_probability;
    std::size_t edge_count;
  };
  std::vector<Pending> slab;
  std::vector<std::size_t> free_slots;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> index;
  using HeapEntry = std::pair<double, std::size_t>;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;

  auto key_length = [&](const std::vector<std::uint32_t>& key) {
    double total = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      if (key[k] != 0) total += static_cast<double>(key[k]) * g.edge(k).length;
    }
    return total;
  };

  std::vector<std::uint32_t> root(d + 1, 0);
  root[d] = static_cast<std::uint32_t>(start);
  slab.push_back(Pending{root, 0.0, 1, 1.0, 0});
  index.emplace(root, 0);
  heap.emplace(0.0, 0);

  while (!heap.empty()) {
    if (classes_.size() >= budget.max_paths) {
      throw Error(ErrorCode::BudgetOverflow,
                  "more than " + std::to_string(budget.max_paths) + " path classes below length " +
                      std::to_string(budget.max_length));
    }
    const std::size_t slot = heap.top().second;
    heap.pop();
    Pending current = std::move(slab[slot]);
    index.erase(current.key);
    free_slots.push_back(slot);

    const VertexId terminal = current.key[d];
    classes_.push_back(PathClass{terminal, current.length, current.multiplicity, current.path_probability,
                                 current.edge_count});
    if (__builtin_add_overflow(path_count_, current.multiplicity, &path_count_)) {
      throw Error(ErrorCode::BudgetOverflow, "path count exceeds 64 bits");
    }

    // Every parent of a class is strictly shorter, so a class is complete
    // when it reaches the top of the heap and can leave the index.
    for (EdgeId id : g.out_edges(terminal)) {
      const Edge& e = g.edge(id);
      std::vector<std::uint32_t> child = current.key;
      ++child[id];
      child[d] = static_cast<std::uint32_t>(e.to);
      const double length = key_length(child);
      if (length > budget.max_length) continue;
      auto it = index.find(child);
      if (it != index.end()) {
        Pending& p = slab[it->second];
        if (__builtin_add_overflow(p.multiplicity, current.multiplicity, &p.multiplicity)) {
          throw Error(ErrorCode::BudgetOverflow, "path multiplicity exceeds 64 bits");
        }
        continue;
      }
      Pending fresh{child, length, current.multiplicity, current.path_probability * e.probability.value_or(1.0),
                    current.edge_count + 1};
      std::size_t target;
      if (!free_slots.empty()) {
        target = free_slots.back();
        free_slots.pop_back();
        slab[target] = std::move(fresh);
      } else {
        target = slab.size();
        slab.push_back(std::move(fresh));
      }
      index.emplace(std::move(child), target);
      heap.emplace(length, target);
    }
  }
}

void PathOracle::require_probabilities() const {
  if (!g_->has_probabilities()) {
    throw Error(ErrorCode::MissingProbabilities, "walk probabilities need a probability-annotated graph");
  }
}

void PathOracle::require_within(double x) const {
  if (x > max_length_) {
    throw Error(ErrorCode::DomainError, "query at " + std::to_string(x) + " beyond enumerated length " +
                                            std::to_string(max_length_));
  }
}

std::uint64_t PathOracle::count_paths(VertexId j, double x) const {
  require_within(x);
  std::uint64_t total = 0;
  for (const PathClass& c : classes_) {
    if (c.length > x) break;
    if (c.terminal == j) total += c.multiplicity;
  }
  return total;
}

std::uint64_t PathOracle::count_edge_hits(EdgeId edge, double x) const {
  require_within(x);
  const Edge& e = g_->edge(edge);
  std::uint64_t total = 0;
  for (const PathClass& c : classes_) {
    if (c.length > x) break;
    if (c.terminal == e.from && x < c.length + e.length) total += c.multiplicity;
  }
  return total;
}

double PathOracle::vertex_probability(VertexId j, double t, double window) const {
  require_probabilities();
  require_within(t);
  double total = 0.0;
  for (const PathClass& c : classes_) {
    if (c.length > t) break;
    if (c.terminal == j && c.length >= t - window) total += c.probability_mass();
  }
  return total;
}

double PathOracle::edge_probability(EdgeId edge, double t) const {
  require_probabilities();
  require_within(t);
  const Edge& e = g_->edge(edge);
  double total = 0.0;
  for (const PathClass& c : classes_) {
    if (c.length > t) break;
    if (c.terminal == e.from && t < c.length + e.length) total += c.probability_mass();
  }
  return e.probability.value_or(1.0) * total;
}

double PathOracle::survival(double t) const {
  require_probabilities();
  require_within(t);
  double total = 0.0;
  for (const PathClass& c : classes_) {
    if (c.length > t) break;
    for (EdgeId id : g_->out_edges(c.terminal)) {
      const Edge& e = g_->edge(id);
      if (t < c.length + e.length) total += e.probability.value_or(1.0) * c.probability_mass();
    }
  }
  return total;
}

double PathOracle::laplace_sum(VertexId j, double s, bool probability_weighted) const {
  double total = 0.0;
  for (const PathClass& c : classes_) {
    if (c.terminal != j) continue;
    const double weight = probability_weighted ? c.probability_mass() : static_cast<double>(c.multiplicity);
    total += weight * std::exp(-s * c.length);
  }
  return total;
}

std::uint64_t count_paths_exact(const WeightedDigraph& g, VertexId i, VertexId j, double x, std::size_t max_paths) {
  if (x < 0.0) return 0;
  return PathOracle(g, i, {x, max_paths}).count_paths(j, x);
}

std::uint64_t count_edge_hits_exact(const WeightedDigraph& g, VertexId i, EdgeId edge, double x,
                                    std::size_t max_paths) {
  if (x < 0.0) return 0;
  return PathOracle(g, i, {x, max_paths}).count_edge_hits(edge, x);
}

double vertex_probability_atoms(const WeightedDigraph& g, VertexId i, VertexId j, double t, double window,
                                std::size_t max_paths) {
  if (t < 0.0) return 0.0;
  return PathOracle(g, i, {t, max_paths}).vertex_probability(j, t, window);
}

double edge_probability_exact(const WeightedDigraph& g, VertexId i, EdgeId edge, double t, std::size_t max_paths) {
  if (t < 0.0) return 0.0;
  return PathOracle(g, i, {t, max_paths}).edge_probability(edge, t);
}

double survival_exact(const WeightedDigraph& g, VertexId i, double t, std::size_t max_paths) {
  if (t < 0.0) return 0.0;
  return PathOracle(g, i, {t, max_paths}).survival(t);
}

}  // namespace orbitcount
