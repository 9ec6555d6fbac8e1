#include "netgof/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "netgof/errors.hpp"
#include "netgof/experiments.hpp"
#include "netgof/gof.hpp"
#include "netgof/graph.hpp"
#include "netgof/report.hpp"
#include "netgof/sampling.hpp"

namespace netgof {

namespace {

// Failure in the input data rather than in the invocation.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParsedGraph load_graph(const std::string& path, std::optional<std::size_t> nodes) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read '" + path + "'");
  try {
    return parse_edge_list(in, nodes);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void apply_threads(std::optional<int> threads) {
  if (!threads) {
    if (const char* env = std::getenv("NETGOF_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        throw ParameterError(std::string("NETGOF_THREADS is not an integer: ") + env);
      }
    }
  }
  if (threads) set_worker_threads(*threads);
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream field(item);
    T v{};
    if (!(field >> v) || !(field >> std::ws).eof())
      throw ParameterError(std::string("bad value '") + item + "' in " + flag);
    values.push_back(v);
  }
  if (values.empty()) throw ParameterError(std::string(flag) + " needs at least one value");
  return values;
}

struct TestArgs {
  std::string file;
  std::string method = "approx";
  std::optional<std::size_t> k;
  std::size_t n = 1000;
  std::size_t replicates = 200;
  std::uint64_t seed = 0;
  std::optional<std::size_t> nodes;
  std::optional<int> threads;
};

int cmd_test(const TestArgs& a, std::ostream& out, std::ostream& err) {
  apply_threads(a.threads);
  const Method method = method_from_string(a.method);
  if (a.n < 10) throw ParameterError("--n must be at least 10 so bins can hold 5 expected counts");
  const ParsedGraph parsed = load_graph(a.file, a.nodes);
  if (parsed.self_loops_dropped)
    err << "warning: dropped " << parsed.self_loops_dropped << " self-loop(s)\n";

  TestOptions options;
  options.subgraph_size = a.k;
  options.n_subgraphs = a.n;
  options.replicates = a.replicates;
  options.seed = RngSeed{a.seed};
  const TestResult result = run_test(parsed.graph, method, options);

  if (result.bin_count == 1)
    err << "warning: null law too concentrated for N = " << a.n
        << "; all edge counts fall in a single bin, the test is uninformative\n";
  err << to_string(method) << " test: |V| = " << result.node_count << ", |E| = " << result.edge_count
      << ", k = " << result.subgraph_size << ", N = " << result.n_subgraphs
      << ", X^2 = " << result.statistic << " on " << result.df << " df, p = " << result.p_value
      << (result.degenerate ? " (degenerate)" : "") << '\n';
  out << to_json(result).dump(2) << '\n';
  return kExitOk;
}

struct GenArgs {
  std::string model;
  std::size_t nodes = 0;
  std::optional<std::uint64_t> edges;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> mean_degree;
  std::optional<double> ratio;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const RngSeed seed{a.seed};
  Graph g;
  std::ostringstream summary;
  if (a.model == "gnm") {
    if (!a.edges) throw ParameterError("gnm needs --edges");
    g = generate_gnm(a.nodes, *a.edges, seed);
  } else if (a.model == "gnp") {
    if (!a.p) throw ParameterError("gnp needs --p");
    g = generate_gnp(a.nodes, *a.p, seed);
  } else {
    TwoColourParams params;
    if (a.mean_degree) {
      params = calibrate_two_colour(a.nodes, *a.mean_degree, a.ratio.value_or(0.0));
    } else if (a.p && a.q) {
      if (a.nodes % 2) throw ParameterError("two-colour needs an even --nodes");
      params = {a.nodes / 2, a.nodes / 2, *a.p, *a.q};
    } else {
      throw ParameterError("two-colour needs --mean-degree [--ratio] or both --p and --q");
    }
    g = generate_two_colour(params, seed);
    summary << std::setprecision(10) << ", p = " << params.p << ", q = " << params.q
            << ", q - p = " << params.q - params.p << ", cross = " << params.cross();
  }

  if (a.out_path.empty()) {
    write_edge_list(out, g);
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw DataError("cannot write '" + a.out_path + "'");
    write_edge_list(file, g);
  }
  err << a.model << ": |V| = " << g.node_count() << ", |E| = " << g.edge_count() << summary.str()
      << '\n';
  return kExitOk;
}

struct ExactArgs {
  std::string file;
  std::size_t k = 0;
  std::optional<std::size_t> nodes;
  std::uint64_t max_subsets = 10'000'000;
};

int cmd_exact_dist(const ExactArgs& a, std::ostream& out, std::ostream&) {
  const ParsedGraph parsed = load_graph(a.file, a.nodes);
  if (a.k < 1 || a.k > parsed.graph.node_count())
    throw ParameterError("--k must lie in [1, " + std::to_string(parsed.graph.node_count()) + "]");
  std::map<std::uint64_t, double> pmf;
  try {
    pmf = exact_edge_count_distribution(parsed.graph, a.k, a.max_subsets);
  } catch (const GuardError& e) {
    throw DataError(e.what());
  }
  out << pmf_to_json(pmf).dump() << '\n';
  return kExitOk;
}

struct ExperimentArgs {
  std::string kind;
  std::string sizes, degrees, ratios;
  std::optional<std::size_t> reps;
  std::size_t n = 1000;
  std::size_t replicates = 200;
  double alpha = 0.05;
  std::string method = "approx";
  std::uint64_t seed = 0;
  bool paper_scale = false;
  std::string csv_path, json_path;
  std::optional<int> threads;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  apply_threads(a.threads);
  const Method method = method_from_string(a.method);
  ExperimentConfig config = a.paper_scale ? ExperimentConfig::paper_scale(method) : ExperimentConfig{};
  config.method = method;
  if (!a.sizes.empty()) config.sizes = parse_list<std::size_t>(a.sizes, "--sizes");
  if (!a.degrees.empty()) config.mean_degrees = parse_list<double>(a.degrees, "--degrees");
  if (!a.ratios.empty()) config.ratios = parse_list<double>(a.ratios, "--ratios");
  if (a.reps) {
    config.replications = *a.reps;
  } else if (!a.paper_scale && a.kind == "timing") {
    config.replications = 10;
  }
  config.n_subgraphs = a.n;
  config.replicates = a.replicates;
  config.alpha = a.alpha;
  config.base_seed = RngSeed{a.seed};
  config.progress = [&err](const std::string& line) { err << line << std::endl; };
  config.validate();

  std::vector<ExperimentRow> rows;
  if (a.kind == "significance")
    rows = run_significance(config);
  else if (a.kind == "power")
    rows = run_power(config);
  else
    rows = run_timing(config);

  if (!a.csv_path.empty()) {
    std::ofstream file(a.csv_path, std::ios::binary);
    if (!file) throw DataError("cannot write '" + a.csv_path + "'");
    write_csv(file, rows);
  }
  if (!a.json_path.empty()) {
    std::ofstream file(a.json_path);
    if (!file) throw DataError("cannot write '" + a.json_path + "'");
    file << to_json(std::span<const ExperimentRow>(rows)).dump(2) << '\n';
  }
  if (a.csv_path.empty() && a.json_path.empty()) write_csv(out, rows);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneity tests for networks via induced-subgraph edge counts", "netgof"};
  app.require_subcommand(1);

  TestArgs test;
  auto* test_cmd = app.add_subcommand("test", "Test an edge list for homogeneity");
  test_cmd->add_option("file", test.file, "Edge-list file")->required();
  test_cmd->add_option("--method", test.method, "approx | empirical")
      ->check(CLI::IsMember({"approx", "approximation", "empirical"}));
  test_cmd->add_option("--k", test.k, "Subgraph size (default: variance-maximising size)");
  test_cmd->add_option("-n,--n", test.n, "Number of subgraphs N");
  test_cmd->add_option("-r,--r,--replicates", test.replicates, "Null replicates R (empirical)");
  test_cmd->add_option("--seed", test.seed, "RNG seed");
  test_cmd->add_option("--nodes", test.nodes, "Total node count, including isolated nodes");
  test_cmd->add_option("--threads", test.threads, "Worker threads (default: NETGOF_THREADS)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random network as an edge list");
  gen_cmd->add_option("model", gen.model, "gnp | gnm | two-colour")
      ->required()
      ->check(CLI::IsMember({"gnp", "gnm", "two-colour"}));
  gen_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
  gen_cmd->add_option("--edges", gen.edges, "Edge count (gnm)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp) or red-red probability (two-colour)");
  gen_cmd->add_option("--q", gen.q, "Blue-blue probability (two-colour)");
  gen_cmd->add_option("--mean-degree", gen.mean_degree, "Target mean degree (two-colour)");
  gen_cmd->add_option("--ratio", gen.ratio, "Heterogeneity ratio (q - p)/(p + q) (two-colour)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out,-o", gen.out_path, "Output file (default: stdout)");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact-dist", "Exact edge-count law of k-node subgraphs");
  exact_cmd->add_option("file", exact.file, "Edge-list file")->required();
  exact_cmd->add_option("--k", exact.k, "Subgraph size")->required();
  exact_cmd->add_option("--nodes", exact.nodes, "Total node count, including isolated nodes");
  exact_cmd->add_option("--max-subsets", exact.max_subsets, "Enumeration budget");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Significance, power or timing study");
  exp_cmd->add_option("kind", exp.kind, "significance | power | timing")
      ->required()
      ->check(CLI::IsMember({"significance", "power", "timing"}));
  exp_cmd->add_option("--sizes", exp.sizes, "Comma-separated node counts");
  exp_cmd->add_option("--degrees", exp.degrees, "Comma-separated mean degrees");
  exp_cmd->add_option("--ratios", exp.ratios, "Comma-separated heterogeneity ratios (power)");
  exp_cmd->add_option("--reps", exp.reps, "Networks per cell");
  exp_cmd->add_option("-n,--n", exp.n, "Subgraphs per test");
  exp_cmd->add_option("-r,--r,--replicates", exp.replicates, "Null replicates R (empirical)");
  exp_cmd->add_option("--alpha", exp.alpha, "Significance level");
  exp_cmd->add_option("--method", exp.method, "approx | empirical")
      ->check(CLI::IsMember({"approx", "approximation", "empirical"}));
  exp_cmd->add_option("--seed", exp.seed, "Base RNG seed");
  exp_cmd->add_flag("--paper-scale", exp.paper_scale, "Use the full published grid");
  exp_cmd->add_option("--csv", exp.csv_path, "CSV output path (default: stdout)");
  exp_cmd->add_option("--json", exp.json_path, "JSON output path");
  exp_cmd->add_option("--threads", exp.threads, "Worker threads (default: NETGOF_THREADS)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (test_cmd->parsed()) return cmd_test(test, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    if (exact_cmd->parsed()) return cmd_exact_dist(exact, out, err);
    return cmd_experiment(exp, out, err);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace netgof
