#include "orbitcount/applications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "orbitcount/error.hpp"
#include "orbitcount/matrix_function.hpp"
#include "orbitcount/spectral.hpp"

namespace orbitcount {

namespace {

constexpr double kVolumeTolerance = 1e-12;
constexpr double kPropertyTolerance = 1e-10;

}  // namespace

SubstitutionRule SubstitutionRule::kakutani(double alpha) {
  return SubstitutionRule{1, {{RuleChild{0, alpha}, RuleChild{0, 1.0 - alpha}}}};
}

double SubstitutionRule::volume_defect() const {
  double worst = 0.0;
  for (const auto& children : prototiles) {
    double volume = 0.0;
    for (const RuleChild& c : children) volume += std::pow(c.scale, dimension);
    worst = std::max(worst, std::abs(volume - 1.0));
  }
  return worst;
}

void SubstitutionRule::validate() const {
  if (dimension < 1) throw Error(ErrorCode::MalformedInput, "dimension must be >= 1");
  if (prototiles.empty()) throw Error(ErrorCode::MalformedInput, "rule has no prototiles");
  for (std::size_t i = 0; i < prototiles.size(); ++i) {
    if (prototiles[i].empty()) {
      throw Error(ErrorCode::MalformedInput, "prototile " + std::to_string(i + 1) + " has no children");
    }
    for (const RuleChild& c : prototiles[i]) {
      if (c.type >= prototiles.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "child type " + std::to_string(c.type + 1) + " in prototile " +
                                                    std::to_string(i + 1));
      }
      if (!(c.scale > 0.0 && c.scale <= 1.0)) {
        throw Error(ErrorCode::MalformedInput, "scale " + std::to_string(c.scale) + " outside (0, 1]");
      }
    }
  }
  const double defect = volume_defect();
  if (defect > kVolumeTolerance) {
    throw Error(ErrorCode::VolumeNotConserved,
                "sum of scale^d differs from 1 by " + std::to_string(defect));
  }
}

double Partition::total_length() const {
  double total = 0.0;
  for (const Interval& iv : intervals) total += iv.length;
  return total;
}

namespace {

std::vector<Interval> split(const SubstitutionRule& rule, const Interval& parent) {
  std::vector<Interval> children;
  double left = parent.left;
  for (const RuleChild& c : rule.prototiles[parent.type]) {
    const double length = parent.length * c.scale;
    children.push_back(Interval{left, length, c.type});
    left += length;
  }
  return children;
}

void require_one_dimensional(const SubstitutionRule& rule) {
  rule.validate();
  if (rule.dimension != 1) {
    throw Error(ErrorCode::MalformedInput, "interval partitions need a 1-dimensional rule");
  }
  for (const auto& children : rule.prototiles) {
    for (const RuleChild& c : children) {
      if (!(c.scale < 1.0)) throw Error(ErrorCode::MalformedInput, "interval splitting needs scales below 1");
    }
  }
}

}  // namespace

Partition kakutani_partition(const SubstitutionRule& rule, std::size_t splits) {
  require_one_dimensional(rule);
  // Longest first, then leftmost.
  auto order = [](const Interval& a, const Interval& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.left < b.left;
  };
  std::multiset<Interval, decltype(order)> queue(order);
  queue.insert(Interval{0.0, 1.0, 0});
  for (std::size_t step = 0; step < splits; ++step) {
    const Interval longest = *queue.begin();
    queue.erase(queue.begin());
    for (const Interval& child : split(rule, longest)) queue.insert(child);
  }
  Partition p;
  p.generation = splits;
  p.intervals.assign(queue.begin(), queue.end());
  std::sort(p.intervals.begin(), p.intervals.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  return p;
}

Partition kakutani_threshold_partition(const SubstitutionRule& rule, double x) {
  require_one_dimensional(rule);
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorCode::DomainError, "threshold must be finite and >= 0");
  const double cutoff = std::exp(-x);
  Partition p;
  std::vector<Interval> stack{Interval{0.0, 1.0, 0}};
  while (!stack.empty()) {
    const Interval current = stack.back();
    stack.pop_back();
    if (current.length > cutoff) {
      auto children = split(rule, current);
      // reversed so the leftmost child is processed first
      stack.insert(stack.end(), children.rbegin(), children.rend());
      ++p.generation;
    } else {
      p.intervals.push_back(current);
    }
  }
  return p;
}

double discrepancy(const Partition& partition) {
  std::vector<double> ends;
  ends.reserve(partition.intervals.size());
  for (const Interval& iv : partition.intervals) ends.push_back(iv.left + iv.length);
  std::sort(ends.begin(), ends.end());
  const double k = static_cast<double>(ends.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const double rank = static_cast<double>(i + 1);
    worst = std::max({worst, rank / k - ends[i], ends[i] - (rank - 1.0) / k});
  }
  return worst;
}

WeightedDigraph substitution_graph(const SubstitutionRule& rule) {
  rule.validate();
  GraphSpec spec;
  spec.vertices = rule.prototiles.size();
  for (std::size_t i = 0; i < rule.prototiles.size(); ++i) {
    for (const RuleChild& c : rule.prototiles[i]) {
      spec.edges.push_back(EdgeSpec{i + 1, c.type + 1, -std::log(c.scale), std::nullopt, {}});
    }
  }
  return WeightedDigraph::build(spec);
}

SubstitutionReport verify_substitution_properties(const WeightedDigraph& g, int dimension) {
  if (dimension < 1) throw Error(ErrorCode::MalformedInput, "dimension must be >= 1");
  const MatrixFunction m(g, Mode::Counting);
  SubstitutionReport report;
  report.dimension = dimension;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g.vertex_count()));
  report.row_sum_error = (m.evaluate_real(dimension) * ones - ones).cwiseAbs().maxCoeff();
  try {
    report.lambda = solve_lambda(m).lambda;
    report.lambda_error = std::abs(report.lambda - dimension);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BracketFailure) throw;
    report.lambda = std::nan("");
    report.lambda_error = std::numeric_limits<double>::infinity();
  }
  if (!(report.lambda_error <= kPropertyTolerance) || !(report.row_sum_error <= kPropertyTolerance)) {
    throw Error(ErrorCode::PropertyViolated, "|lambda - d| = " + std::to_string(report.lambda_error) +
                                                 ", max |M(d) 1 - 1| = " + std::to_string(report.row_sum_error));
  }
  return report;
}

std::uint64_t pascal_region_count(std::uint64_t a, std::uint64_t b, double x) {
  if (a == 0 || b == 0) throw Error(ErrorCode::MalformedInput, "loop lengths must be positive integers");
  if (x < 0.0) return 0;
  const auto bound = static_cast<std::uint64_t>(std::floor(x));
  const std::uint64_t max_m = bound / a;
  // row[k] = C(m + k, k) for the current m
  std::vector<std::uint64_t> row(bound / b + 1, 1);
  std::uint64_t total = 0;
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    if (m > 0) {
      for (std::size_t k = 1; k < row.size(); ++k) row[k] += row[k - 1];  // C(m+k,k) = C(m-1+k,k) + C(m+k-1,k-1)
    }
    const std::uint64_t max_k = (bound - m * a) / b;
    for (std::uint64_t k = 0; k <= max_k; ++k) total += row[k];
  }
  return total;
}

}  // namespace orbitcount
