#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitcount/orbitcount.hpp"

namespace orbitcount::cli {

namespace {

using Cell = std::variant<double, std::uint64_t, std::string>;

std::string format_number(double value) {
  std::ostringstream os;
  os << std::setprecision(12) << value;
  return os.str();
}

std::string format_fixed(double value) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << value;
  return os.str();
}

std::string to_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* u = std::get_if<std::uint64_t>(&cell)) return std::to_string(*u);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json to_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    return nlohmann::ordered_json::parse(format_number(*d));
  }
  if (const auto* u = std::get_if<std::uint64_t>(&cell)) return *u;
  return std::get<std::string>(cell);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& out, OutputFormat format) const {
    switch (format) {
      case OutputFormat::Csv:
        for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
        out << '\n';
        for (const auto& row : rows) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << to_text(row[c]);
          out << '\n';
        }
        break;
      case OutputFormat::JsonLines:
        for (const auto& row : rows) {
          nlohmann::ordered_json line;
          for (std::size_t c = 0; c < row.size(); ++c) line[columns[c]] = to_json(row[c]);
          out << line.dump() << '\n';
        }
        break;
      case OutputFormat::Pretty: {
        std::vector<std::size_t> width(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
        for (const auto& row : rows) {
          for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], to_text(row[c]).size());
        }
        for (std::size_t c = 0; c < columns.size(); ++c) out << std::setw(static_cast<int>(width[c]) + 2) << columns[c];
        out << '\n';
        for (const auto& row : rows) {
          for (std::size_t c = 0; c < row.size(); ++c) {
            out << std::setw(static_cast<int>(width[c]) + 2) << to_text(row[c]);
          }
          out << '\n';
        }
        break;
      }
    }
  }
};

std::vector<double> parse_grid(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::MalformedInput, std::string(what) + ": '" + item + "' is not a finite value >= 0");
    }
    values.push_back(v);
  }
  if (!std::is_sorted(values.begin(), values.end())) {
    throw Error(ErrorCode::MalformedInput, std::string(what) + " grid must be sorted ascending");
  }
  return values;
}

double parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return std::stod(text);
    const double q = std::stod(text.substr(slash + 1));
    if (q == 0.0) throw Error(ErrorCode::MalformedInput, "zero denominator in '" + text + "'");
    return std::stod(text.substr(0, slash)) / q;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::MalformedInput, "cannot parse '" + text + "' as a number or p/q");
  }
}

Mode parse_mode(const std::string& text) {
  if (text == "counting") return Mode::Counting;
  if (text == "probability") return Mode::Probability;
  if (text == "edge") return Mode::EdgeBased;
  throw Error(ErrorCode::MalformedInput, "unknown mode '" + text + "'");
}

Family parse_family(const std::string& text) {
  if (text == "A") return Family::A;
  if (text == "B") return Family::B;
  if (text == "C") return Family::C;
  if (text == "D") return Family::D;
  if (text == "S" || text == "survival") return Family::Survival;
  throw Error(ErrorCode::MalformedInput, "unknown family '" + text + "'");
}

std::size_t max_paths(const RunConfig& config) {
  if (config.max_paths != 0) return config.max_paths;
  if (const char* env = std::getenv("ORBITCOUNT_MAX_PATHS")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::MalformedInput, std::string("ORBITCOUNT_MAX_PATHS='") + env + "' is not a positive integer");
  }
  return kDefaultMaxPaths;
}

VertexId vertex_arg(const WeightedDigraph& g, std::size_t one_based, const char* what) {
  if (one_based < 1 || one_based > g.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " vertex " + std::to_string(one_based) +
                                                " outside 1.." + std::to_string(g.vertex_count()));
  }
  return one_based - 1;
}

EdgeId edge_arg(const WeightedDigraph& g, const std::string& label) {
  if (label.empty()) throw Error(ErrorCode::MalformedInput, "--edge is required for this family");
  const auto id = g.find_edge(label);
  if (!id) throw Error(ErrorCode::UnknownEdge, "no edge named '" + label + "'");
  return *id;
}

void require_connected(const WeightedDigraph& g) {
  const ConnectivityReport report = strong_connectivity(g);
  if (report.strongly_connected) return;
  std::string parts;
  for (const auto& component : report.components) {
    parts += " {";
    for (std::size_t k = 0; k < component.size(); ++k) parts += (k ? "," : "") + std::to_string(component[k] + 1);
    parts += "}";
  }
  throw Error(ErrorCode::NotStronglyConnected, "components:" + parts);
}

std::string vector_text(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + format_number(v(k));
  return s + "]";
}

nlohmann::ordered_json vector_json(const Eigen::VectorXd& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(to_json(v(k)));
  return arr;
}

// ---- subcommands -----------------------------------------------------------

void cmd_analyze(const RunConfig& config, std::ostream& out) {
  const WeightedDigraph g = load_graph(config.input);
  require_connected(g);
  const MatrixFunction f(g, parse_mode(config.mode));
  const SpectralSolution sol = solve_lambda(f);
  IncommensurabilityOptions options;
  options.max_edges = config.max_edges;
  options.max_denominator = config.max_denominator;
  options.tolerance = config.tolerance;
  const IncommensurabilityVerdict verdict = incommensurability_check(g, options);
  const Eigen::Index n = sol.q.rows();

  switch (config.format.value_or(OutputFormat::Pretty)) {
    case OutputFormat::Pretty: {
      out << "graph      " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, strongly connected\n";
      out << "mode       " << to_string(f.mode()) << '\n';
      out << "lambda     " << format_fixed(sol.lambda) << '\n';
      out << "residual   " << format_number(sol.residual) << '\n';
      for (Eigen::Index i = 0; i < n; ++i) {
        out << (i == 0 ? "Q          " : "           ") << vector_text(sol.q.row(i).transpose()) << '\n';
      }
      out << "mu         " << format_number(sol.perron_at_lambda.mu) << '\n';
      out << "v          " << vector_text(sol.perron_at_lambda.right) << '\n';
      out << "u          " << vector_text(sol.perron_at_lambda.left) << '\n';
      out << "orbits     " << to_string(verdict.status);
      if (verdict.witness) {
        out << "  a=" << format_number(verdict.witness->first) << " b=" << format_number(verdict.witness->second);
      }
      if (verdict.rational_approx) {
        out << "  best p/q=" << verdict.rational_approx->p << "/" << verdict.rational_approx->q
            << " residual=" << format_number(verdict.rational_approx->residual);
      }
      out << '\n';
      break;
    }
    case OutputFormat::JsonLines: {
      nlohmann::ordered_json doc;
      doc["command"] = "analyze";
      doc["mode"] = std::string(to_string(f.mode()));
      doc["lambda"] = to_json(sol.lambda);
      doc["residual"] = to_json(sol.residual);
      doc["q"] = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < n; ++i) doc["q"].push_back(vector_json(sol.q.row(i).transpose()));
      doc["perron"] = {{"mu", to_json(sol.perron_at_lambda.mu)},
                       {"v", vector_json(sol.perron_at_lambda.right)},
                       {"u", vector_json(sol.perron_at_lambda.left)}};
      nlohmann::ordered_json inc;
      inc["status"] = to_string(verdict.status);
      if (verdict.witness) inc["witness"] = {verdict.witness->first, verdict.witness->second};
      if (verdict.rational_approx) {
        inc["p"] = verdict.rational_approx->p;
        inc["q"] = verdict.rational_approx->q;
        inc["residual"] = verdict.rational_approx->residual;
      }
      doc["incommensurability"] = inc;
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Csv: {
      Table t{{"quantity", "row", "col", "value"}, {}};
      t.rows.push_back({std::string("lambda"), std::string(), std::string(), sol.lambda});
      t.rows.push_back({std::string("residual"), std::string(), std::string(), sol.residual});
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          t.rows.push_back({std::string("q"), std::uint64_t(i + 1), std::uint64_t(j + 1), sol.q(i, j)});
        }
      }
      t.rows.push_back({std::string("mu"), std::string(), std::string(), sol.perron_at_lambda.mu});
      for (Eigen::Index i = 0; i < n; ++i) {
        t.rows.push_back({std::string("v"), std::uint64_t(i + 1), std::string(), sol.perron_at_lambda.right(i)});
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        t.rows.push_back({std::string("u"), std::uint64_t(i + 1), std::string(), sol.perron_at_lambda.left(i)});
      }
      t.rows.push_back({std::string("incommensurability"), std::string(), std::string(),
                        std::string(to_string(verdict.status))});
      t.write(out, OutputFormat::Csv);
      break;
    }
  }
}

void cmd_count(const RunConfig& config, std::ostream& out) {
  const WeightedDigraph g = load_graph(config.input);
  require_connected(g);
  const Family family = parse_family(config.family.empty() ? "A" : config.family);
  if (family != Family::A && family != Family::B) {
    throw Error(ErrorCode::MalformedInput, "count handles families A and B; use 'prob' for C, D, S");
  }
  if (config.grid.empty()) throw Error(ErrorCode::MalformedInput, "--x grid is empty");
  const VertexId i = vertex_arg(g, config.from, "--from");
  const SpectralSolution sol = solve_lambda(MatrixFunction(g, Mode::Counting));
  const PathOracle oracle(g, i, {config.grid.back(), max_paths(config)});

  AsymptoticEstimate estimate;
  VertexId j = 0;
  EdgeId edge = 0;
  if (family == Family::A) {
    if (!config.to) throw Error(ErrorCode::MalformedInput, "family A needs --to");
    j = vertex_arg(g, *config.to, "--to");
    estimate = count_paths_asymptotic(sol, i, j);
  } else {
    edge = edge_arg(g, config.edge);
    estimate = count_edge_hits_asymptotic(sol, g, i, edge);
  }
  Table t{{"x", "exact", "asymptotic", "ratio"}, {}};
  for (double x : config.grid) {
    const std::uint64_t exact = family == Family::A ? oracle.count_paths(j, x) : oracle.count_edge_hits(edge, x);
    const double asymptotic = estimate.value_at(x);
    t.rows.push_back({x, exact, asymptotic, static_cast<double>(exact) / asymptotic});
  }
  t.write(out, config.format.value_or(OutputFormat::Csv));
}

void cmd_prob(const RunConfig& config, std::ostream& out) {
  const WeightedDigraph g = load_graph(config.input);
  require_connected(g);
  const Family family = parse_family(config.family.empty() ? "S" : config.family);
  if (family == Family::A || family == Family::B) {
    throw Error(ErrorCode::MalformedInput, "prob handles families C, D and S; use 'count' for A, B");
  }
  if (config.grid.empty()) throw Error(ErrorCode::MalformedInput, "--T grid is empty");
  const VertexId i = vertex_arg(g, config.from, "--from");
  const SpectralSolution sol = solve_lambda(MatrixFunction(g, Mode::Probability));
  const PathOracle oracle(g, i, {config.grid.back(), max_paths(config)});

  Table t{{"T", "exact", "asymptotic", "ratio", "window"}, {}};
  for (double time : config.grid) {
    double exact = 0.0;
    AsymptoticEstimate estimate;
    double window = 0.0;
    switch (family) {
      case Family::C: {
        if (!config.to) throw Error(ErrorCode::MalformedInput, "family C needs --to");
        const VertexId j = vertex_arg(g, *config.to, "--to");
        window = config.window;
        exact = oracle.vertex_probability(j, time, window);
        estimate = vertex_probability_asymptotic(sol, i, j);
        break;
      }
      case Family::D: {
        const EdgeId edge = edge_arg(g, config.edge);
        exact = oracle.edge_probability(edge, time);
        estimate = edge_probability_asymptotic(sol, g, i, edge);
        break;
      }
      default:
        exact = oracle.survival(time);
        estimate = survival_probability_asymptotic(sol, g, i);
        break;
    }
    const double asymptotic = estimate.value_at(time);
    t.rows.push_back({time, exact, asymptotic, exact / asymptotic, window});
  }
  t.write(out, config.format.value_or(OutputFormat::Csv));
}

void cmd_walk(const RunConfig& config, std::ostream& out) {
  const WeightedDigraph g = load_graph(config.input);
  if (config.grid.empty()) throw Error(ErrorCode::MalformedInput, "--T grid is empty");
  const VertexId i = vertex_arg(g, config.from, "--from");
  EnsembleOptions options;
  options.samples = config.samples;
  options.seed = config.seed;
  options.threads = config.threads;
  const std::optional<EdgeId> edge = config.edge.empty() ? std::nullopt : std::optional(edge_arg(g, config.edge));
  Table t{{"T", "estimate", "stderr", "n", "seed"}, {}};
  for (double time : config.grid) {
    const EnsembleEstimate e = edge ? ensemble_edge_probability(g, i, *edge, time, options)
                                    : ensemble_survival(g, i, time, options);
    t.rows.push_back({time, e.point_estimate, e.standard_error, e.sample_count, e.seed});
  }
  t.write(out, config.format.value_or(OutputFormat::Csv));
}

void write_partition(const Partition& p, std::ostream& out, OutputFormat format) {
  Table t{{"left", "length", "type"}, {}};
  for (const Interval& iv : p.intervals) t.rows.push_back({iv.left, iv.length, std::uint64_t(iv.type + 1)});
  t.write(out, format);
}

void cmd_kakutani(const RunConfig& config, std::ostream& out) {
  const SubstitutionRule rule =
      config.input.empty() ? SubstitutionRule::kakutani(parse_fraction(config.alpha)) : load_rule(config.input);
  const OutputFormat format = config.format.value_or(OutputFormat::Csv);
  if (config.threshold) {
    write_partition(kakutani_threshold_partition(rule, *config.threshold), out, format);
    return;
  }
  if (config.export_generation) {
    write_partition(kakutani_partition(rule, *config.export_generation), out, format);
    return;
  }
  std::vector<std::size_t> generations = config.generations;
  if (generations.empty()) generations = {20, 200, 2000};
  Table t{{"n", "intervals", "discrepancy"}, {}};
  for (std::size_t n : generations) {
    const Partition p = kakutani_partition(rule, n);
    t.rows.push_back({std::uint64_t(n), std::uint64_t(p.size()), discrepancy(p)});
  }
  t.write(out, format);
}

void cmd_subst(const RunConfig& config, std::ostream& out) {
  const SubstitutionRule rule = load_rule(config.input);
  const WeightedDigraph g = substitution_graph(rule);
  if (!config.emit_graph.empty()) {
    std::ofstream file(config.emit_graph);
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot write " + config.emit_graph);
    file << graph_to_json(g) << '\n';
  }
  require_connected(g);
  const SubstitutionReport report = verify_substitution_properties(g, rule.dimension);
  switch (config.format.value_or(OutputFormat::Pretty)) {
    case OutputFormat::Pretty:
      out << "prototiles     " << rule.prototiles.size() << '\n';
      out << "edges          " << g.edge_count() << '\n';
      out << "dimension      " << report.dimension << '\n';
      out << "lambda         " << format_fixed(report.lambda) << '\n';
      out << "|lambda - d|   " << format_number(report.lambda_error) << '\n';
      out << "|M(d)1 - 1|    " << format_number(report.row_sum_error) << '\n';
      out << "verdict        ok\n";
      break;
    default: {
      Table t{{"dimension", "lambda", "lambda_error", "row_sum_error"}, {}};
      t.rows.push_back({std::uint64_t(report.dimension), report.lambda, report.lambda_error, report.row_sum_error});
      t.write(out, *config.format);
    }
  }
}

void cmd_laplace(const RunConfig& config, std::ostream& out) {
  const WeightedDigraph g = load_graph(config.input);
  require_connected(g);
  const Family family = parse_family(config.family.empty() ? "A" : config.family);
  const bool counting = family == Family::A || family == Family::B;
  const MatrixFunction f(g, counting ? Mode::Counting : Mode::Probability);
  const SpectralSolution sol = solve_lambda(f);
  const VertexId i = vertex_arg(g, config.from, "--from");
  std::size_t index = 0;
  if (family == Family::A || family == Family::C) {
    if (!config.to) throw Error(ErrorCode::MalformedInput, "this family needs --to");
    index = vertex_arg(g, *config.to, "--to");
  } else if (family != Family::Survival) {
    index = edge_arg(g, config.edge);
  }
  const OutputFormat format = config.format.value_or(OutputFormat::Csv);

  if (config.residue_scan) {
    const double residue = laplace_residue(sol, g, family, i, index);
    Table t{{"eps", "s", "scaled_transform", "residue", "relative_error"}, {}};
    for (int k = 2; k <= 6; ++k) {
      const double eps = std::pow(10.0, -k);
      const double s = sol.lambda + eps;
      const double scaled = eps * laplace_transform(f, sol.lambda, family, i, index, s).real();
      t.rows.push_back({eps, s, scaled, residue, std::abs(scaled - residue) / std::abs(residue)});
    }
    t.write(out, format);
    return;
  }
  if (config.grid.empty()) throw Error(ErrorCode::MalformedInput, "--s grid is empty");
  Table t{{"s", "re", "im"}, {}};
  for (double s : config.grid) {
    const std::complex<double> value = laplace_transform(f, sol.lambda, family, i, index, s);
    t.rows.push_back({s, value.real(), value.imag()});
  }
  t.write(out, format);
}

int exit_code(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Validation: return kValidation;
    case ErrorCategory::Numerical: return kNumerical;
    case ErrorCategory::Budget: return kBudget;
  }
  return kValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path-length asymptotics on directed weighted graphs", "orbitcount"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format_text;
  std::string grid_text;
  std::string generations_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "csv, json-lines or pretty")
        ->check(CLI::IsMember({"csv", "json-lines", "pretty"}));
    sub->add_option("-o,--output", config.output, "write results to this file instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "lambda, Q, Perron data and incommensurability verdict");
  analyze->add_option("graph", config.input, "graph JSON file")->required();
  analyze->add_option("--mode", config.mode, "counting, probability or edge");
  analyze->add_option("--max-edges", config.max_edges, "cycle length bound for the orbit check (default n)");
  analyze->add_option("--max-denominator", config.max_denominator, "largest q tried for p/q");
  analyze->add_option("--tolerance", config.tolerance, "|a q - b p| below this counts as rational");
  add_common(analyze);

  auto* count = app.add_subcommand("count", "families A/B: exact counts against the asymptotic law");
  count->add_option("graph", config.input)->required();
  count->add_option("--family", config.family, "A or B");
  count->add_option("--from", config.from, "start vertex (1-based)");
  count->add_option("--to", config.to, "target vertex for A (1-based)");
  count->add_option("--edge", config.edge, "edge name or from-to#k for B");
  count->add_option("--x", grid_text, "comma-separated lengths")->required();
  count->add_option("--max-paths", config.max_paths, "oracle cap (overrides ORBITCOUNT_MAX_PATHS)");
  add_common(count);

  auto* prob = app.add_subcommand("prob", "families C/D/S: exact walk probabilities against the asymptotic law");
  prob->add_option("graph", config.input)->required();
  prob->add_option("--family", config.family, "C, D or S");
  prob->add_option("--from", config.from);
  prob->add_option("--to", config.to);
  prob->add_option("--edge", config.edge);
  prob->add_option("--T", grid_text, "comma-separated times")->required();
  prob->add_option("--window", config.window, "family C: sum atoms in [T - window, T]");
  prob->add_option("--max-paths", config.max_paths);
  add_common(prob);

  auto* walk = app.add_subcommand("walk", "Monte Carlo walkers: edge occupancy or survival");
  walk->add_option("graph", config.input)->required();
  walk->add_option("--from", config.from);
  walk->add_option("--edge", config.edge, "edge to watch; survival when omitted");
  walk->add_option("--T", grid_text)->required();
  walk->add_option("-n,--samples", config.samples);
  walk->add_option("--seed", config.seed);
  walk->add_option("--threads", config.threads);
  add_common(walk);

  auto* kakutani = app.add_subcommand("kakutani", "Kakutani partitions and discrepancy table");
  kakutani->add_option("--rule", config.input, "rule JSON (default: --alpha split)");
  kakutani->add_option("--alpha", config.alpha, "split ratio, decimal or p/q");
  kakutani->add_option("--n", generations_text, "comma-separated generations for the discrepancy table");
  kakutani->add_option("--export", config.export_generation, "print the partition after this many splits");
  kakutani->add_option("--threshold", config.threshold, "print the partition splitting lengths > exp(-x)");
  add_common(kakutani);

  auto* subst = app.add_subcommand("subst", "build the substitution graph and check lambda = d");
  subst->add_option("rule", config.input, "rule JSON file")->required();
  subst->add_option("--emit-graph", config.emit_graph, "also write the graph JSON here");
  add_common(subst);

  auto* laplace = app.add_subcommand("laplace", "closed-form Laplace transforms and residue scan");
  laplace->add_option("graph", config.input)->required();
  laplace->add_option("--family", config.family);
  laplace->add_option("--from", config.from);
  laplace->add_option("--to", config.to);
  laplace->add_option("--edge", config.edge);
  laplace->add_option("--s", grid_text, "comma-separated real s values");
  laplace->add_flag("--residue-scan", config.residue_scan, "tabulate (s - lambda) L(s) as s -> lambda");
  add_common(laplace);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
    if (!format_text.empty()) {
      config.format = format_text == "csv"          ? OutputFormat::Csv
                      : format_text == "json-lines" ? OutputFormat::JsonLines
                                                    : OutputFormat::Pretty;
    }
    if (!grid_text.empty()) config.grid = parse_grid(grid_text, "--x/--T/--s");
    if (!generations_text.empty()) {
      for (double v : parse_grid(generations_text, "--n")) config.generations.push_back(static_cast<std::size_t>(v));
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw Error(ErrorCode::MalformedInput, "cannot write " + config.output);
      sink = &file;
    }

    if (config.command == "analyze") cmd_analyze(config, *sink);
    else if (config.command == "count") cmd_count(config, *sink);
    else if (config.command == "prob") cmd_prob(config, *sink);
    else if (config.command == "walk") cmd_walk(config, *sink);
    else if (config.command == "kakutani") cmd_kakutani(config, *sink);
    else if (config.command == "subst") cmd_subst(config, *sink);
    else if (config.command == "laplace") cmd_laplace(config, *sink);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}

}  // namespace orbitcount::cli
