#include "elc/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <stdexcept>
#include <utility>

#include "elc/bounds.hpp"
#include "elc/constructions.hpp"
#include "elc/families.hpp"
#include "elc/graph_io.hpp"
#include "elc/matching.hpp"
#include "elc/oracles.hpp"

namespace elc {

namespace {

constexpr const char* kPass = "PASS";
constexpr const char* kFlag = "FLAG";
constexpr const char* kFail = "FAIL";
constexpr const char* kBudget = "BUDGET";

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int expect_int(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw std::invalid_argument(std::string("expected field '") + what +
                                "' must be an integer");
  }
  return value.get<int>();
}

// Outcome of one checker: got text plus a status.
struct Outcome {
  std::string got;
  std::string status = kPass;
};

Outcome fail(std::string got) { return {std::move(got), kFail}; }

// Solves and folds the three interesting terminal states into one place.
struct ExactValue {
  std::optional<int> k;
  bool budget = false;
  SolveResult result;
};

ExactValue solve_exact(const Graph& g, const SolveOptions& options) {
  ExactValue out;
  out.result = elc_number(g, options);
  if (out.result.status == SolveStatus::optimal) {
    out.k = out.result.k;
  } else if (out.result.status == SolveStatus::budget_exhausted) {
    out.budget = true;
  }
  return out;
}

Outcome budget_outcome(const ExactValue& v) {
  return {"solver budget exhausted (refuted up to " +
              std::to_string(v.result.exhausted_k) + ")",
          kBudget};
}

Outcome check_solve(const Graph& g, const json& expected,
                    const SolveOptions& options) {
  const int want = expect_int(expected, "expected");
  ExactValue v = solve_exact(g, options);
  if (v.budget) return budget_outcome(v);
  if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
  if (*v.k != want) return fail("value " + std::to_string(*v.k));
  return {"value " + std::to_string(*v.k)};
}

Outcome check_construct(const std::string& input, const json& expected) {
  const int want = expect_int(expected, "expected");
  const CertifiedColoring cert = construct_coloring(parse_family(input));
  if (cert.claimed_k != want) {
    return fail("verified coloring with " + std::to_string(cert.claimed_k) +
                " colors");
  }
  return {"verified coloring with " + std::to_string(cert.claimed_k) +
          " colors"};
}

Outcome check_solve_construct(const Graph& g, const std::string& input,
                              const json& expected,
                              const SolveOptions& options) {
  const Outcome built = check_construct(input, expected);
  if (built.status != kPass) return built;
  const Outcome solved = check_solve(g, expected, options);
  if (solved.status != kPass) return solved;
  return {built.got + ", " + solved.got};
}

// expected: ragged rows; row r holds the colors of the edges (r, r+1..n-1),
// vertices 0-based top to bottom.
Outcome check_matrix(const std::string& input, const json& expected) {
  const CertifiedColoring cert = construct_coloring(parse_family(input));
  const Graph& g = cert.graph;
  if (!expected.is_array() ||
      static_cast<int>(expected.size()) != g.n - 1) {
    return fail("expected must hold " + std::to_string(g.n - 1) +
                " matrix rows");
  }
  for (int u = 0; u + 1 < g.n; ++u) {
    const json& row = expected[u];
    if (!row.is_array() || static_cast<int>(row.size()) != g.n - 1 - u) {
      return fail("matrix row " + std::to_string(u) + " has wrong length");
    }
    for (int v = u + 1; v < g.n; ++v) {
      const std::optional<int> e = g.edge_between(u, v);
      if (!e) return fail("input graph is not complete");
      const int want = expect_int(row[v - u - 1], "matrix entry");
      if (cert.coloring.colors[*e] != want) {
        return fail("entry (" + std::to_string(u + 1) + ", " +
                    std::to_string(v + 1) + ") is " +
                    std::to_string(cert.coloring.colors[*e]) + ", table says " +
                    std::to_string(want));
      }
    }
  }
  return {"all " + std::to_string(g.m()) + " entries match"};
}

Outcome check_verify_fixed(const Graph& g, const json& expected) {
  const EdgeColoring coloring = coloring_from_json(g, expected);
  const VerificationReport report = verify_elc(g, coloring);
  if (!report.passed) {
    std::string detail;
    for (const auto& line : report.describe(g)) {
      if (!detail.empty()) detail += "; ";
      detail += line;
    }
    return fail("verification failed: " + detail);
  }
  return {"coloring with " + std::to_string(coloring.k) + " colors verifies"};
}

Outcome check_monotonicity(const json& expected, const SolveOptions& options) {
  const Graph g = family_graph(parse_family("monotonicity_G"));
  const Graph h = family_graph(parse_family("monotonicity_H"));
  const int want_g = expect_int(expected.at("G"), "G");
  const int want_h = expect_int(expected.at("H"), "H");
  for (const auto& [u, v] : g.edges) {
    if (!h.has_edge(u, v)) return fail("edge set of G is not a subset of H");
  }
  if (g.m() + 1 != h.m()) return fail("H should have exactly one extra edge");
  ExactValue vg = solve_exact(g, options);
  if (vg.budget) return budget_outcome(vg);
  ExactValue vh = solve_exact(h, options);
  if (vh.budget) return budget_outcome(vh);
  if (vg.k != want_g || vh.k != want_h) {
    return fail("G=" + std::to_string(vg.k.value_or(-1)) +
                " H=" + std::to_string(vh.k.value_or(-1)));
  }
  return {"G=" + std::to_string(*vg.k) + " H=" + std::to_string(*vh.k) +
          ", E(G) proper subset of E(H)"};
}

Outcome check_diameter_bound(const Graph& g, const json& expected,
                             const SolveOptions& options) {
  const DiameterBound bound = diameter_lower_bound(g);
  if (!bound.applicable) return fail("diameter bound not applicable");
  const int want_bound = expect_int(expected.at("bound"), "bound");
  const int want_exact = expect_int(expected.at("exact"), "exact");
  ExactValue v = solve_exact(g, options);
  if (v.budget) return budget_outcome(v);
  if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
  if (*bound.bound != want_bound || *v.k != want_exact) {
    return fail("bound " + std::to_string(*bound.bound) + " vs exact " +
                std::to_string(*v.k));
  }
  Outcome out;
  out.got = "bound " + std::to_string(*bound.bound) + " vs exact " +
            std::to_string(*v.k);
  if (*bound.bound > *v.k) out.status = kFlag;
  return out;
}

Outcome check_census(const Graph& g, const json& expected,
                     const SolveOptions& options) {
  const int k = expect_int(expected.at("k"), "k");
  std::vector<int> want_fails;
  for (const auto& d : expected.at("fails")) {
    want_fails.push_back(expect_int(d, "fails entry"));
  }
  const CensusCheck census = degree_census_check(g, k);
  if (!census.applicable) return fail("census not applicable: " + census.notes);
  std::vector<int> got_fails;
  for (const auto& row : census.rows) {
    if (!row.pass) got_fails.push_back(row.degree);
  }
  if (got_fails != want_fails) {
    std::string got = "failing degrees:";
    for (int d : got_fails) got += " " + std::to_string(d);
    return fail(got_fails.empty() ? "no failing degrees" : got);
  }
  ExactValue v = solve_exact(g, options);
  if (v.budget) return budget_outcome(v);
  if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
  Outcome out;
  if (got_fails.empty()) {
    out.got = "census admits k=" + std::to_string(k) +
              " (exact " + std::to_string(*v.k) + ")";
  } else {
    std::string degrees;
    for (int d : got_fails) degrees += (degrees.empty() ? "" : ",") +
                                       std::to_string(d);
    out.got = "census rejects k=" + std::to_string(k) + " at degrees {" +
              degrees + "} (exact " + std::to_string(*v.k) + ")";
    // Rejecting the true value would be the documented tension.
    if (k == *v.k) out.status = kFlag;
  }
  return out;
}

Outcome check_sandwich(const Graph& g, const json& expected,
                       const SolveOptions& options) {
  const SandwichBound sandwich = dim_e_upper_bound(g, 21);
  ExactValue v = solve_exact(g, options);
  if (v.budget) return budget_outcome(v);
  if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
  if (expected.contains("chromatic_index") &&
      sandwich.chromatic_index !=
          std::optional<int>(expect_int(expected.at("chromatic_index"),
                                        "chromatic_index"))) {
    return fail("chromatic index " +
                std::to_string(sandwich.chromatic_index.value_or(-1)));
  }
  if (expected.contains("exact") &&
      *v.k != expect_int(expected.at("exact"), "exact")) {
    return fail("exact value " + std::to_string(*v.k));
  }
  if (!sandwich.chromatic_index) return fail("chromatic index unavailable");
  const bool lower_ok = *sandwich.chromatic_index <= *v.k;
  const bool edges_ok = sandwich.upper_edges_resolve_edges &&
                        *v.k <= *sandwich.upper_edges_resolve_edges;
  const bool vertices_ok = sandwich.upper_edges_resolve_vertices &&
                           *v.k <= *sandwich.upper_edges_resolve_vertices;
  std::string got =
      "chromatic index " + std::to_string(*sandwich.chromatic_index) +
      " <= value " + std::to_string(*v.k) + ", uppers " +
      (sandwich.upper_edges_resolve_edges
           ? std::to_string(*sandwich.upper_edges_resolve_edges)
           : std::string("-")) +
      "/" +
      (sandwich.upper_edges_resolve_vertices
           ? std::to_string(*sandwich.upper_edges_resolve_vertices)
           : std::string("-"));
  if (expected.contains("tight_edges") &&
      expected.at("tight_edges").get<bool>() &&
      sandwich.upper_edges_resolve_edges != v.k) {
    return fail(got + " (edges-resolve-edges bound not tight)");
  }
  if (!lower_ok || !(edges_ok || vertices_ok)) return fail(got);
  return {got};
}

Outcome check_join_lower(const std::string& input, const json& expected) {
  const auto plus = input.find('+');
  if (plus == std::string::npos) {
    throw std::invalid_argument("join_lower input must be 'left+right'");
  }
  const Graph a = graph_from_source(input.substr(0, plus));
  const Graph b = graph_from_source(input.substr(plus + 1));
  const int want = expect_int(expected, "expected");
  const int bound = join_lower_bound(a, b);
  const int join_degree = join_graphs(a, b).max_degree();
  if (bound != join_degree) {
    return fail("bound " + std::to_string(bound) +
                " != max degree of join " + std::to_string(join_degree));
  }
  if (bound != want) return fail("bound " + std::to_string(bound));
  return {"bound " + std::to_string(bound) + " = max degree of join"};
}

Outcome check_general_join(const Graph& g, const json& expected,
                           const SolveOptions& options) {
  const GeneralJoinCheck check = general_join_check(g, options);
  if (expected.contains("applicable") &&
      !expected.at("applicable").get<bool>()) {
    if (check.applicable) return fail("a claim applied: " + check.claim);
    return {"no applicable claim, as expected"};
  }
  if (!check.applicable) return fail("no applicable claim");
  if (check.cone.status == SolveStatus::budget_exhausted) {
    return {"solver budget exhausted on the join", kBudget};
  }
  if (expected.contains("exact") &&
      check.exact != std::optional<int>(expect_int(expected.at("exact"),
                                                   "exact"))) {
    return fail("join value " + std::to_string(check.exact.value_or(-1)));
  }
  if (!check.holds || !*check.holds) {
    return fail("claim '" + check.claim + "' did not hold (join value " +
                std::to_string(check.exact.value_or(-1)) + ")");
  }
  return {"claim '" + check.claim + "' holds"};
}

Outcome check_tree_scheme(const Graph& g, const json& expected,
                          const SolveOptions& options, bool support) {
  const int want = expect_int(expected.at("k"), "k");
  const CertifiedColoring cert =
      support ? color_tree_support(g) : color_tree_leaves(g);
  if (cert.claimed_k != want) {
    return fail("verified coloring with " + std::to_string(cert.claimed_k) +
                " colors");
  }
  std::string got =
      "verified coloring with " + std::to_string(cert.claimed_k) + " colors";
  if (expected.contains("exact")) {
    const int want_exact = expect_int(expected.at("exact"), "exact");
    ExactValue v = solve_exact(g, options);
    if (v.budget) return budget_outcome(v);
    if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
    if (*v.k != want_exact) return fail(got + ", exact " + std::to_string(*v.k));
    if (*v.k > cert.claimed_k) {
      return fail(got + " below exact " + std::to_string(*v.k));
    }
    got += ", exact " + std::to_string(*v.k);
  }
  return {got};
}

Outcome check_matching_bound(const Graph& g, const json& expected,
                             const SolveOptions& options) {
  const int want = expect_int(expected.at("bound"), "bound");
  const int bound = matching_upper_bound(g);
  if (bound != want) return fail("bound " + std::to_string(bound));
  std::string got = "verified bound " + std::to_string(bound);
  if (expected.contains("exact")) {
    const int want_exact = expect_int(expected.at("exact"), "exact");
    ExactValue v = solve_exact(g, options);
    if (v.budget) return budget_outcome(v);
    if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
    if (*v.k != want_exact) return fail(got + ", exact " + std::to_string(*v.k));
    if (bound < *v.k) return fail(got + " below exact " + std::to_string(*v.k));
    got += ", exact " + std::to_string(*v.k);
  }
  return {got};
}

// input: "order,m" for the complete graph minus a union of matchings.
Outcome check_matching_union(const std::string& input, const json& expected) {
  const auto comma = input.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("matching_union input must be 'order,m'");
  }
  const int order = std::stoi(input.substr(0, comma));
  const int m = std::stoi(input.substr(comma + 1));
  const int want = expect_int(expected, "expected");
  const CertifiedColoring cert = color_complete_minus_matching_union(order, m);
  if (cert.claimed_k != want) {
    return fail("verified coloring with " + std::to_string(cert.claimed_k) +
                " colors");
  }
  return {"verified coloring with " + std::to_string(cert.claimed_k) +
          " colors"};
}

Outcome check_distinguishing(const Graph& g, const json& expected,
                             const SolveOptions& options) {
  const int want = expect_int(expected.at("k"), "k");
  const bool want_distinguishing = expected.at("distinguishing").get<bool>();
  ExactValue v = solve_exact(g, options);
  if (v.budget) return budget_outcome(v);
  if (!v.k) return fail("solver returned " + std::string(to_string(v.result.status)));
  if (*v.k != want) return fail("value " + std::to_string(*v.k));
  if (!v.result.certificate) return fail("optimal result lacks a certificate");
  const bool distinguishing =
      is_edge_distinguishing(g, *v.result.certificate);
  if (distinguishing != want_distinguishing) {
    return fail(std::string("certificate is ") +
                (distinguishing ? "" : "not ") + "automorphism-breaking");
  }
  return {"value " + std::to_string(*v.k) + ", certificate " +
          (distinguishing ? "breaks all symmetries" : "fixed by a symmetry")};
}

Outcome dispatch(const TheoremCase& row, const SolveOptions& options) {
  const auto& check = row.check;
  if (check == "construct") return check_construct(row.input, row.expected);
  if (check == "matrix") return check_matrix(row.input, row.expected);
  if (check == "monotonicity") return check_monotonicity(row.expected, options);
  if (check == "join_lower") return check_join_lower(row.input, row.expected);
  if (check == "matching_union") {
    return check_matching_union(row.input, row.expected);
  }
  const Graph g = graph_from_source(row.input);
  if (check == "solve") return check_solve(g, row.expected, options);
  if (check == "solve_construct") {
    return check_solve_construct(g, row.input, row.expected, options);
  }
  if (check == "verify_fixed") return check_verify_fixed(g, row.expected);
  if (check == "diameter_bound") {
    return check_diameter_bound(g, row.expected, options);
  }
  if (check == "census") return check_census(g, row.expected, options);
  if (check == "sandwich") return check_sandwich(g, row.expected, options);
  if (check == "general_join") {
    return check_general_join(g, row.expected, options);
  }
  if (check == "tree_support") {
    return check_tree_scheme(g, row.expected, options, true);
  }
  if (check == "tree_leaves") {
    return check_tree_scheme(g, row.expected, options, false);
  }
  if (check == "matching_bound") {
    return check_matching_bound(g, row.expected, options);
  }
  if (check == "distinguishing") {
    return check_distinguishing(g, row.expected, options);
  }
  throw std::invalid_argument("unknown check kind '" + check + "'");
}

long first_parameter(const std::string& input) {
  if (input.empty()) return -1;
  if (input.rfind("g6:", 0) == 0) {
    return parse_graph6(input.substr(3)).n;
  }
  const FamilySpec spec = parse_family(input);
  return spec.params.empty() ? -1 : spec.params[0];
}

}  // namespace

Graph graph_from_source(const std::string& source) {
  if (source.rfind("g6:", 0) == 0) return parse_graph6(source.substr(3));
  return family_graph(parse_family(source));
}

std::vector<TheoremCase> manifest_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("cases") ||
      !doc["cases"].is_array()) {
    throw std::invalid_argument("manifest must be {\"cases\": [...]}");
  }
  std::vector<TheoremCase> out;
  for (const auto& entry : doc["cases"]) {
    TheoremCase row;
    try {
      row.id = entry.at("id").get<std::string>();
      row.theorem = entry.at("theorem").get<std::string>();
      row.check = entry.at("check").get<std::string>();
      row.input = entry.value("input", std::string());
      row.expected = entry.at("expected");
      row.provenance = entry.at("provenance").get<std::string>();
    } catch (const json::exception& e) {
      throw std::invalid_argument("case " + std::to_string(out.size()) +
                                  " is malformed: " + e.what());
    }
    if (row.provenance != "paper" && row.provenance != "derived") {
      throw std::invalid_argument("case '" + row.id +
                                  "': provenance must be paper or derived");
    }
    for (const auto& prior : out) {
      if (prior.id == row.id) {
        throw std::invalid_argument("duplicate case id '" + row.id + "'");
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TheoremCase> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("manifest is not valid JSON: " +
                                std::string(e.what()));
  }
  return manifest_from_json(doc);
}

CaseResult run_case(const TheoremCase& row, const SolveOptions& options) {
  CaseResult result;
  result.id = row.id;
  result.theorem = row.theorem;
  result.input = row.input;
  result.provenance = row.provenance;
  result.expected_text = row.expected.dump();
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome outcome = dispatch(row, options);
    result.got_text = outcome.got;
    result.status = outcome.status;
  } catch (const std::exception& e) {
    result.got_text = std::string("error: ") + e.what();
    result.status = kFail;
  }
  if (!options.deterministic) {
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  }
  return result;
}

std::vector<CaseResult> run_suite(const std::vector<TheoremCase>& manifest,
                                  const SuiteOptions& options) {
  std::vector<const TheoremCase*> selected;
  for (const auto& row : manifest) {
    if (!options.only.empty() &&
        row.id.find(options.only) == std::string::npos &&
        row.theorem.find(options.only) == std::string::npos) {
      continue;
    }
    if (options.n_max >= 0) {
      long param = -1;
      try {
        param = first_parameter(row.input);
      } catch (const std::exception&) {
        param = -1;  // unparseable inputs surface through run_case instead
      }
      if (param > options.n_max) continue;
    }
    selected.push_back(&row);
  }
  std::vector<CaseResult> results(selected.size());
  if (options.solve.deterministic || options.solve.workers <= 1) {
    for (size_t i = 0; i < selected.size(); ++i) {
      results[i] = run_case(*selected[i], options.solve);
    }
    return results;
  }
  const size_t width = static_cast<size_t>(options.solve.workers);
  std::vector<std::future<CaseResult>> window;
  std::vector<size_t> window_slots;
  size_t next = 0;
  const auto drain_one = [&] {
    results[window_slots.front()] = window.front().get();
    window.erase(window.begin());
    window_slots.erase(window_slots.begin());
  };
  while (next < selected.size() || !window.empty()) {
    if (window.size() == width || next == selected.size()) {
      drain_one();
    } else {
      const TheoremCase* row = selected[next];
      window.push_back(std::async(std::launch::async, [row, &options] {
        return run_case(*row, options.solve);
      }));
      window_slots.push_back(next);
      ++next;
    }
  }
  return results;
}

std::string suite_csv(const std::vector<CaseResult>& results) {
  std::string out = "case_id,theorem_tag,input,expected,got,status,millis\n";
  for (const auto& r : results) {
    out += csv_escape(r.id) + ',' + csv_escape(r.theorem) + ',' +
           csv_escape(r.input) + ',' + csv_escape(r.expected_text) + ',' +
           csv_escape(r.got_text) + ',' + r.status + ',' +
           std::to_string(r.millis) + '\n';
  }
  return out;
}

int suite_exit_code(const std::vector<CaseResult>& results) {
  bool budget = false;
  for (const auto& r : results) {
    if (r.status == kFail) return 1;
    if (r.status == kBudget) budget = true;
  }
  return budget ? 3 : 0;
}

}  // namespace elc
