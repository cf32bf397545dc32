#pragma once

#include <string>
#include <vector>

#include "elc/serialize.hpp"
#include "elc/solver.hpp"

namespace elc {

// The regression suite: a manifest of numbered claims (each tied to a
// theorem tag) is loaded from JSON, every row is evaluated against the
// solver/constructors/oracles, and the outcomes are printed as a CSV table.
//
// Row statuses:
//   PASS    computed values match the expectation
//   FLAG    a reported bound disagrees with the exact value; documented
//           tension, not a defect (distinct from FAIL by design)
//   FAIL    mismatch or error - the only status with a nonzero exit
//   BUDGET  the solver gave up within the configured budget

// One manifest row. `check` selects the evaluation procedure; `expected`
// is check-specific (see run_case in report.cpp for the shapes).
struct TheoremCase {
  std::string id;
  std::string theorem;
  std::string check;
  std::string input;       // family spec or "g6:<word>"; "" for fixed checks
  json expected;
  std::string provenance;  // "paper" | "derived"
};

struct CaseResult {
  std::string id;
  std::string theorem;
  std::string input;
  std::string provenance;
  std::string expected_text;
  std::string got_text;
  std::string status;
  long long millis = 0;  // 0 under deterministic runs, for byte-stable CSV
};

struct SuiteOptions {
  SolveOptions solve;
  std::string only;  // substring filter on id or theorem tag; empty = all
  long n_max = -1;   // if >= 0, drop rows whose first family parameter
                     // (or graph order, for g6 inputs) exceeds this
};

// Parses either a "family:params" spec or "g6:<word>".
Graph graph_from_source(const std::string& source);

std::vector<TheoremCase> manifest_from_json(const json& doc);
std::vector<TheoremCase> load_manifest(const std::string& path);

CaseResult run_case(const TheoremCase& row, const SolveOptions& options);

// Runs rows surviving the filters; results keep manifest order. Rows run
// concurrently up to `options.solve.workers` when determinism is waived.
std::vector<CaseResult> run_suite(const std::vector<TheoremCase>& manifest,
                                  const SuiteOptions& options);

// Header: case_id,theorem_tag,input,expected,got,status,millis
std::string suite_csv(const std::vector<CaseResult>& results);

// 0 when every row is PASS or FLAG; 1 on any FAIL; 3 on any BUDGET (and no
// FAIL).
int suite_exit_code(const std::vector<CaseResult>& results);

}  // namespace elc
