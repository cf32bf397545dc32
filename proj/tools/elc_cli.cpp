// Command-line surface for edge-locating colorings: exact solving,
// certificate verification, closed-form constructions, and the regression
// report over the shipped manifest of known values.
//
// Exit codes, shared by every subcommand:
//   0  success / all checks passed
//   1  a verification or decision failed (bad coloring, infeasible count,
//      failing report row)
//   2  input error (unreadable source, malformed JSON, bad parameters)
//   3  the solver's budget ran out before a verdict
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "elc/constructions.hpp"
#include "elc/families.hpp"
#include "elc/graph_io.hpp"
#include "elc/report.hpp"
#include "elc/serialize.hpp"
#include "elc/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct GraphSource {
  std::string g6;
  std::string edges_path;
  std::string family;
};

void add_source_flags(CLI::App* cmd, GraphSource* source) {
  cmd->add_option("--g6", source->g6, "graph6 word");
  cmd->add_option("--edges", source->edges_path,
                  "path to an edge list: 'n m' header, then one 'u v' pair per edge");
  cmd->add_option("--family", source->family,
                  "family spec, e.g. cycle:6, double_star:3,2");
}

elc::Graph load_graph(const GraphSource& source) {
  const int given = !source.g6.empty() + !source.edges_path.empty() +
                    !source.family.empty();
  if (given != 1) {
    throw std::invalid_argument(
        "choose exactly one input: --g6, --edges, or --family");
  }
  if (!source.g6.empty()) return elc::parse_graph6(source.g6);
  if (!source.family.empty()) {
    return elc::family_graph(elc::parse_family(source.family));
  }
  std::ifstream in(source.edges_path);
  if (!in) {
    throw std::invalid_argument("cannot open edge list: " + source.edges_path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return elc::parse_edge_list(text.str());
}

struct BudgetFlags {
  long nodes = 0;
  double secs = 0.0;
  int workers = 0;
  bool deterministic = true;
  bool secs_given = false;
};

void add_budget_flags(CLI::App* cmd, BudgetFlags* flags) {
  cmd->add_option("--budget-nodes", flags->nodes, "search-node budget");
  cmd->add_option("--budget-secs", flags->secs, "wall-clock budget in seconds")
      ->each([flags](const std::string&) { flags->secs_given = true; });
  cmd->add_option("--workers", flags->workers,
                  "concurrent cases/probes (needs --no-deterministic)");
  cmd->add_flag("--deterministic,!--no-deterministic", flags->deterministic,
                "canonical order and byte-stable output (default on)");
}

elc::SolveOptions solve_options(const BudgetFlags& flags) {
  elc::SolveOptions options;
  if (flags.nodes > 0) options.node_budget = flags.nodes;
  if (flags.secs_given) {
    options.time_budget_secs = flags.secs;
  } else if (const char* env = std::getenv("ELC_BUDGET_SECS")) {
    options.time_budget_secs = std::stod(env);
  }
  if (flags.workers > 0) options.workers = flags.workers;
  options.deterministic = flags.deterministic;
  return options;
}

elc::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  elc::json doc;
  in >> doc;
  return doc;
}

int run_solve(const GraphSource& source, const BudgetFlags& budget,
              std::optional<int> fixed_k) {
  const elc::Graph g = load_graph(source);
  const elc::SolveOptions options = solve_options(budget);
  const elc::SolveResult result =
      fixed_k ? elc::feasible(g, *fixed_k, options) : elc::elc_number(g, options);
  std::cout << elc::solve_result_to_json(g, result).dump(2) << "\n";
  switch (result.status) {
    case elc::SolveStatus::optimal:
    case elc::SolveStatus::feasible_only:
      return kOk;
    case elc::SolveStatus::infeasible_at_k:
      return kCheckFailed;
    case elc::SolveStatus::budget_exhausted:
      return kBudget;
  }
  return kCheckFailed;
}

int run_verify(const GraphSource& source, const std::string& coloring_path,
               bool as_json) {
  const elc::Graph g = load_graph(source);
  const elc::EdgeColoring coloring =
      elc::coloring_from_json(g, read_json_file(coloring_path));
  const elc::VerificationReport report = elc::verify_elc(g, coloring);
  if (as_json) {
    std::cout << elc::report_to_json(g, report).dump(2) << "\n";
  } else if (report.passed) {
    std::cout << "valid edge-locating coloring with " << coloring.k
              << " colors\n";
  } else {
    for (const auto& line : report.describe(g)) std::cout << line << "\n";
  }
  return report.passed ? kOk : kCheckFailed;
}

int run_construct(const std::string& family, bool reverify) {
  const elc::CertifiedColoring cert =
      elc::construct_coloring(elc::parse_family(family));
  std::cout << elc::certified_to_json(cert).dump(2) << "\n";
  if (reverify) {
    const elc::VerificationReport check = elc::verify_elc(cert.graph, cert.coloring);
    if (!check.passed || cert.coloring.k != cert.claimed_k) return kCheckFailed;
  }
  return kOk;
}

int run_report(const std::string& suite_path, const BudgetFlags& budget,
               const std::string& only, long n_max,
               const std::string& csv_path) {
  elc::SuiteOptions options;
  options.solve = solve_options(budget);
  options.only = only;
  options.n_max = n_max;
  const std::vector<elc::TheoremCase> manifest = elc::load_manifest(suite_path);
  const std::vector<elc::CaseResult> results = elc::run_suite(manifest, options);
  const std::string csv = elc::suite_csv(results);
  std::cout << csv;
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write CSV: " + csv_path);
    out << csv;
  }
  int pass = 0, flag = 0, fail = 0, over = 0;
  for (const auto& r : results) {
    if (r.status == "PASS") ++pass;
    else if (r.status == "FLAG") ++flag;
    else if (r.status == "FAIL") ++fail;
    else ++over;
  }
  std::cerr << results.size() << " cases: " << pass << " PASS, " << flag
            << " FLAG, " << fail << " FAIL, " << over << " BUDGET\n";
  return elc::suite_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-locating coloring toolkit"};
  app.require_subcommand(1);

  GraphSource solve_source;
  BudgetFlags solve_budget;
  int fixed_k = 0;
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand(
      "solve", "compute the edge-locating chromatic number (JSON on stdout)");
  add_source_flags(solve, &solve_source);
  add_budget_flags(solve, &solve_budget);
  CLI::Option* k_opt =
      solve->add_option("--k", fixed_k, "decide this color count only");
  solve->add_flag("--json", solve_json, "JSON output (always on for solve)");

  GraphSource verify_source;
  std::string coloring_path;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "check a coloring file against a graph");
  add_source_flags(verify, &verify_source);
  verify->add_option("--coloring", coloring_path,
                     "JSON file: {\"k\": int, \"edges\": [[u, v, color], ...]}")
      ->required();
  verify->add_flag("--json", verify_json, "emit the full report as JSON");

  std::string construct_family;
  bool construct_reverify = false;
  CLI::App* construct = app.add_subcommand(
      "construct", "emit a closed-form verified coloring for a family");
  construct->add_option("family", construct_family, "family spec, e.g. complete:11")
      ->required();
  construct->add_flag("--verify", construct_reverify,
                      "re-run the verifier on the emitted bundle");

  std::string suite_path = "data/theorems.json";
  BudgetFlags report_budget;
  std::string only;
  long n_max = -1;
  std::string csv_path;
  CLI::App* report = app.add_subcommand(
      "report", "run the manifest of known values and print a CSV table");
  report->add_option("--suite", suite_path, "manifest path");
  add_budget_flags(report, &report_budget);
  report->add_option("--only", only, "substring filter on case id or theorem tag");
  report->add_option("--n-max", n_max,
                     "drop cases whose leading parameter (or order) exceeds this");
  report->add_option("--csv", csv_path, "also write the CSV to this path");

  try {
    app.parse(argc, argv);
    if (solve->parsed()) {
      return run_solve(solve_source, solve_budget,
                       k_opt->count() ? std::optional<int>(fixed_k) : std::nullopt);
    }
    if (verify->parsed()) {
      return run_verify(verify_source, coloring_path, verify_json);
    }
    if (construct->parsed()) {
      return run_construct(construct_family, construct_reverify);
    }
    return run_report(suite_path, report_budget, only, n_max, csv_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const elc::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const elc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
