// mdsets: count, list and search maximal dissociation sets of small graphs.
//
// Exit codes: 0 everything passed, 1 a check failed (violation or
// counterexample), 2 usage, parse or budget error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mds/enumeration.hpp"
#include "mds/extremal.hpp"
#include "mds/generators.hpp"
#include "mds/graph_io.hpp"
#include "mds/report.hpp"
#include "mds/treedp.hpp"
#include "mds/verify.hpp"

namespace {

using namespace mds;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output goes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
  void close() {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) throw UsageError("writing output failed");
  }

 private:
  std::ofstream file_;
};

const std::map<std::string, ReportFormat> kReportFormats = {
    {"table", ReportFormat::Table}, {"csv", ReportFormat::Csv}, {"jsonl", ReportFormat::Jsonl}};

const std::map<std::string, InputFormat> kInputFormats = {
    {"auto", InputFormat::Auto}, {"edgelist", InputFormat::EdgeList}, {"graph6", InputFormat::Graph6}};

void log_elapsed(const char* what, std::chrono::steady_clock::time_point started) {
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  std::cerr << what << ": " << ms << " ms\n";
}

// ---- count ----

struct CountArgs {
  std::string input = "-";
  std::string inline_graph;
  std::string format = "auto";
  std::string output;
  bool enumerate = false;
};

int run_count(const CountArgs& a) {
  std::vector<Graph> graphs;
  const InputFormat format = kInputFormats.at(a.format);
  if (!a.inline_graph.empty()) {
    std::istringstream in(a.inline_graph);
    graphs = read_graphs(in, format);
  } else if (a.input == "-") {
    graphs = read_graphs(std::cin, format);
  } else {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot open " + a.input);
    graphs = read_graphs(in, format);
  }
  if (graphs.empty()) throw UsageError("no graph in input");

  Sink sink(a.output);
  for (const Graph& g : graphs) {
    if (a.enumerate) {
      // Sets on stdout, the count on stderr so the listing stays machine-readable.
      const MdsList sets = enumerate_mds(g);
      for (const VertexSet& s : sets) {
        std::string line;
        for (int v : s.to_vector()) line += (line.empty() ? "" : " ") + std::to_string(v);
        sink.out() << line << '\n';
      }
      std::cerr << "phi=" << sets.size() << '\n';
    } else {
      const Count phi = is_forest(g) ? count_mds_forest(g) : count_mds_brute(g);
      sink.out() << to_string(phi) << '\n';
    }
  }
  sink.close();
  return kExitOk;
}

// ---- extremal ----

struct ExtremalArgs {
  std::string family;
  int n = 0;
  std::string output;
};

std::vector<Graph> build_family(const std::string& family, int n) {
  auto fixed = [&](int order, Graph g) {
    if (n != 0 && n != order)
      throw UsageError(family + " is only defined for n = " + std::to_string(order));
    return std::vector<Graph>{std::move(g)};
  };
  auto need_n = [&] {
    if (n == 0) throw UsageError(family + " needs an order n");
  };
  if (family == "t-star8") return fixed(8, build_t_star_8());
  if (family == "t-star9") return fixed(9, build_t_star_9());
  need_n();
  if (family == "t-star") {
    if (n % 3 != 1) {
      const char* hint = n == 8 ? "; use t-star8" : n == 9 ? "; use t-star9" : "";
      throw UsageError("t-star needs n >= 4 with n ≡ 1 (mod 3)" + std::string(hint));
    }
    return {build_t_star(n)};
  }
  if (family == "f1") return {build_f1_extremal(n)};
  if (family == "f2") return build_f2_extremal(n);
  if (family == "conjecture") return build_conjecture_trees(n);
  throw UsageError("unknown family " + family);
}

int run_extremal(const ExtremalArgs& a) {
  if (a.n < 0 || a.n > kMaxVertices) throw UsageError("n must lie in 1.." + std::to_string(kMaxVertices));
  std::vector<Graph> graphs;
  try {
    graphs = build_family(a.family, a.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Sink sink(a.output);
  for (const Graph& g : graphs) {
    sink.out() << "# " << a.family << " n=" << g.order() << " phi=" << to_string(count_mds_forest(g)) << '\n'
               << to_edge_list(g);
  }
  sink.close();
  return kExitOk;
}

// ---- verify / scan ----

struct RunArgs {
  std::string target;
  int n_max = 0;
  int min_component = 1;
  std::string format = "table";
  std::string output;
  unsigned workers = 0;
};

int default_n_max(const std::string& target) {
  if (target == "theorem1" || target == "f2") return 13;
  if (target == "lemmas") return kMaxLemmaOrder;
  return 15;
}

int run_verify(const RunArgs& a) {
  const VerifyOptions options{a.workers};
  const int n_max = a.n_max ? a.n_max : default_n_max(a.target);
  const auto started = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  try {
    if (a.target == "theorem1") reports = verify_theorem1(n_max, options);
    else if (a.target == "theorem2") reports = verify_theorem2_trees(n_max, options);
    else if (a.target == "f2") reports = verify_f2(n_max, options);
    else if (a.target == "lemma4") reports = verify_lemma4(options);
    else if (a.target == "lemmas") reports = {verify_lemma_monotonicity(n_max)};
    else if (a.target == "claim1") reports = {verify_claim1_identity(), verify_claim1_positivity()};
    else if (a.target == "conjecture") reports = check_conjecture(n_max, options);
    else if (a.target == "all") reports = verify_all(n_max, options);
  } catch (const BudgetError& e) {
    throw UsageError(e.what());
  }
  Sink sink(a.output);
  write_reports(sink.out(), reports, kReportFormats.at(a.format));
  sink.close();
  log_elapsed("verify", started);
  return any_failure(reports) ? kExitFailure : kExitOk;
}

int run_scan(const RunArgs& a) {
  const bool trees = a.target == "trees";
  const Population population = trees ? Population::trees() : Population::forests(a.min_component);
  if (a.min_component < 1) throw UsageError("--min-component must be at least 1");
  const int n_max = a.n_max ? a.n_max : (trees ? 15 : 12);
  const auto started = std::chrono::steady_clock::now();
  std::vector<ScanRow> rows;
  try {
    rows = scan_max_phi(n_max, population, VerifyOptions{a.workers});
  } catch (const BudgetError& e) {
    throw UsageError(e.what());
  }
  Sink sink(a.output);
  write_scan(sink.out(), rows, kReportFormats.at(a.format));
  sink.close();
  log_elapsed("scan", started);
  return kExitOk;
}

// ---- gen ----

struct GenArgs {
  int n = 0;
  bool forests = false;
  int min_component = 1;
  std::string format = "graph6";
  std::string output;
};

int run_gen(const GenArgs& a) {
  const int limit = a.forests ? kMaxForestOrder : kMaxTreeOrder;
  if (a.n < 1 || a.n > limit) throw UsageError("n must lie in 1.." + std::to_string(limit));
  if (a.min_component < 1) throw UsageError("--min-component must be at least 1");
  Sink sink(a.output);
  auto emit = [&](const Graph& g) {
    sink.out() << (a.format == "graph6" ? to_graph6(g) : to_edge_list_line(g)) << '\n';
  };
  if (a.forests) {
    ForestStream stream(a.n, a.min_component);
    while (auto g = stream.next()) emit(*g);
  } else {
    TreeStream stream(a.n);
    while (auto g = stream.next()) emit(*g);
  }
  sink.close();
  return kExitOk;
}

void add_output_flags(CLI::App* cmd, std::string& format, std::string& output, unsigned* workers) {
  cmd->add_option("--format", format, "table, csv or jsonl")->check(CLI::IsMember({"table", "csv", "jsonl"}));
  cmd->add_option("--output,-o", output, "write here instead of stdout");
  if (workers) cmd->add_option("--workers", *workers, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal dissociation sets in trees and forests"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "number of maximal dissociation sets of each input graph");
  count_cmd->add_option("input", count.input, "graph file, '-' for stdin");
  count_cmd->add_option("--graph", count.inline_graph, "inline graph (graph6, or \"n m u v ...\")");
  count_cmd->add_option("--format", count.format, "input format: auto, edgelist or graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  count_cmd->add_option("--output,-o", count.output, "write here instead of stdout");
  count_cmd->add_flag("--enumerate", count.enumerate, "list every set as sorted vertices");

  ExtremalArgs extremal;
  auto* extremal_cmd = app.add_subcommand("extremal", "print an extremal construction and its count");
  extremal_cmd->add_option("family", extremal.family)
      ->required()
      ->check(CLI::IsMember({"t-star", "t-star8", "t-star9", "f1", "f2", "conjecture"}));
  extremal_cmd->add_option("n", extremal.n, "order");
  extremal_cmd->add_option("--output,-o", extremal.output, "write here instead of stdout");

  RunArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks of the extremal results");
  verify_cmd->add_option("target", verify.target)
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "f2", "lemma4", "lemmas", "claim1", "conjecture", "all"}));
  verify_cmd->add_option("--n-max", verify.n_max, "largest order to scan");
  add_output_flags(verify_cmd, verify.format, verify.output, &verify.workers);

  RunArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "largest counts per order");
  scan_cmd->add_option("population", scan.target)->required()->check(CLI::IsMember({"trees", "forests"}));
  scan_cmd->add_option("--n-max", scan.n_max, "largest order to scan");
  scan_cmd->add_option("--min-component", scan.min_component, "smallest forest component");
  add_output_flags(scan_cmd, scan.format, scan.output, &scan.workers);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "every free tree (or forest) of order n, one per line");
  gen_cmd->add_option("n", gen.n)->required();
  gen_cmd->add_flag("--forests", gen.forests, "forests instead of trees");
  gen_cmd->add_option("--min-component", gen.min_component, "smallest forest component");
  gen_cmd->add_option("--format", gen.format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
  gen_cmd->add_option("--output,-o", gen.output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count);
    if (*extremal_cmd) return run_extremal(extremal);
    if (*verify_cmd) return run_verify(verify);
    if (*scan_cmd) return run_scan(scan);
    if (*gen_cmd) return run_gen(gen);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
