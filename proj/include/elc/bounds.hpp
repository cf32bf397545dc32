#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elc/graph.hpp"
#include "elc/solver.hpp"

namespace elc {

// Closed-form bounds on the edge-locating chromatic number, each evaluated
// with its hypotheses machine-checked, plus an aggregate per-graph report.
//
// Two of the bounds (diameter, degree census) are known to disagree with the
// exact value on some graphs; they are therefore *reported* with discrepancy
// flags rather than asserted. The matching upper bound and the sandwich
// bound are relied upon: a violation is an error in this library, not in the
// input.

// Lower bound from the diameter: the smallest k such that n <= diam^(k-2),
// evaluated in exact integer arithmetic. Requires diameter >= 3; smaller
// diameters leave the record inapplicable.
struct DiameterBound {
  bool applicable = false;
  int diameter = 0;
  std::optional<int> bound;
  std::string notes;
};
DiameterBound diameter_lower_bound(const Graph& g);

// Degree census feasibility test for a candidate color count k: for each
// degree i occurring n_i times, ceil(n_i / C(k,i)) <= (diam-1)^(k-i).
// A failing degree suggests k is too small; k below the maximum degree is
// allowed and fails at the uncolorable degrees. Requires diameter >= 3.
// Counts are saturated, never overflowed.
struct CensusRow {
  int degree = 0;            // i
  int count = 0;             // n_i
  long long required = 0;    // ceil(n_i / C(k, i))
  long long capacity = 0;    // (diam - 1)^(k - i), saturated
  bool pass = false;
};
struct CensusCheck {
  bool applicable = false;
  int k = 0;
  int diameter = 0;
  std::vector<CensusRow> rows;
  bool all_pass = true;
  std::string notes;
};
CensusCheck degree_census_check(const Graph& g, int k);

// Upper bound |E| - |maximum matching| + 1 for connected graphs of order
// >= 5, validated by actually building and verifying the witness coloring.
// Throws std::invalid_argument outside the domain, std::logic_error if the
// witness fails verification.
int matching_upper_bound(const Graph& g);

// Lower bound on the join G + H: max(maxdeg(G) + |V(H)|, |V(G)| + maxdeg(H)),
// which equals the maximum degree of the join.
int join_lower_bound(const Graph& g, const Graph& h);

// Sandwich bound: chromatic index <= edge-locating number <= chromatic index
// + edge metric dimension. Both resolving variants of the dimension are
// computed and reported; the sandwich is expected to hold for at least one.
// Fields stay unset when the instance exceeds `max_edges` (the oracles are
// exponential) or when no resolving set of the variant exists.
struct SandwichBound {
  std::optional<int> chromatic_index;
  std::optional<int> dim_edges_resolve_edges;
  std::optional<int> dim_edges_resolve_vertices;
  std::optional<int> upper_edges_resolve_edges;
  std::optional<int> upper_edges_resolve_vertices;
  std::string notes;
};
SandwichBound dim_e_upper_bound(const Graph& g, int max_edges = 20);

// Checks the join-with-one-vertex theorem on a connected graph g, writing
// H = g + K1 and q = |V(g)|:
//   - even q, no universal vertex:  value(H) <= q
//   - even q, universal vertex:     value(H) == q + 1
//   - odd q,  no universal vertex:  value(H) <= q + 1
//   - odd q,  universal vertex:     no claim (the stated equality case is
//     vacuous under the theorem's own degree gate)
// `holds` is empty when the solver could not decide within budget.
struct GeneralJoinCheck {
  int order = 0;
  int max_degree = 0;
  bool even_order = false;
  std::optional<int> universal_vertex;  // a vertex of degree order-1, if any
  bool applicable = false;
  std::string claim;                    // human-readable active claim
  SolveResult cone;  // solver result for g + K1; meaningful only when a
                     // claim is applicable (the solve is skipped otherwise)
  std::optional<int> lower;             // refuted prefix + 1
  std::optional<int> upper;             // verified certificate count
  std::optional<int> exact;             // when the solver proved optimality
  std::optional<bool> holds;
  std::string notes;
};
GeneralJoinCheck general_join_check(const Graph& g,
                                    const SolveOptions& options = {});

// One evaluated bound inside a report.
struct BoundRecord {
  std::string name;
  bool applicable = false;
  std::optional<long long> value;
  std::string notes;
};

// Aggregate report: every bound above evaluated on one graph, the solver's
// result, and a list of bound-vs-exact discrepancies. Discrepancies are
// collected, never thrown: the report is a diagnostic surface.
struct BoundsReport {
  std::string graph_id;  // graph6 form
  int order = 0;
  int size = 0;
  std::vector<BoundRecord> bounds;
  DiameterBound diameter;
  CensusCheck census;
  SandwichBound sandwich;
  GeneralJoinCheck cone_check;
  SolveResult solver;
  std::optional<int> exact;  // solver value when certified optimal
  std::vector<std::string> flags;
};
BoundsReport bounds_report(const Graph& g, const SolveOptions& options = {});

}  // namespace elc
