#pragma once

#include <string>

#include <json.hpp>

#include "elc/bounds.hpp"
#include "elc/coloring.hpp"
#include "elc/constructions.hpp"
#include "elc/graph.hpp"
#include "elc/solver.hpp"

namespace elc {

using json = nlohmann::json;

// JSON forms used by the command-line tools. Colorings travel as
//   {"k": int, "edges": [[u, v, color], ...]}
// and are matched back to a graph by endpoint pair, order-insensitively, so
// a coloring file does not depend on the producer's edge ordering.

json graph_to_json(const Graph& g);

json coloring_to_json(const Graph& g, const EdgeColoring& coloring);

// Throws std::invalid_argument when the document is malformed or does not
// cover the graph's edge set exactly once. Color values are carried through
// for the verifier to judge.
EdgeColoring coloring_from_json(const Graph& g, const json& doc);

json report_to_json(const Graph& g, const VerificationReport& report);

json solve_result_to_json(const Graph& g, const SolveResult& result);

json certified_to_json(const CertifiedColoring& certified);

json bounds_report_to_json(const BoundsReport& report);

// One row per graph for the regression table.
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& report);

}  // namespace elc
