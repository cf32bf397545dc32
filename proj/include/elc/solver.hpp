#pragma once

#include <optional>

#include "elc/coloring.hpp"
#include "elc/graph.hpp"

namespace elc {

struct SolveOptions {
  long node_budget = 100'000'000;   // assignments explored across the whole call
  double time_budget_secs = 300.0;  // wall-clock cap, checked periodically
  int workers = 1;                  // concurrent color-count probes (effective only
                                    // when deterministic is off)
  bool deterministic = true;        // canonical exploration order, bit-identical results
  std::optional<int> lower_bound_override;  // first color count to try
  std::optional<int> upper_bound_override;  // largest color count to consider
};

struct SolveStats {
  long nodes = 0;                   // assignments applied
  long properness_rejections = 0;   // colors blocked by an incident edge
  long quota_prunes = 0;            // too few edges left to populate every class
  long pair_prunes = 0;             // vertex pair forced into identical codes
  long leaf_checks = 0;             // complete colorings reached
  double wall_secs = 0.0;
};

enum class SolveStatus {
  optimal,           // value attained and every smaller count refuted
  feasible_only,     // coloring found but some smaller count left undecided
  infeasible_at_k,   // no coloring with the considered color count(s)
  budget_exhausted,  // search gave out before reaching a verdict
};

const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::budget_exhausted;
  std::optional<int> k;                     // color count attained, when any
  std::optional<EdgeColoring> certificate;  // re-verified before being returned
  // Largest count such that this call refuted every count up to it (counts
  // below lower_bound(g) are refuted by the bound itself).
  int exhausted_k = 0;
  SolveStats stats;
};

// Provable floor for the optimum: at least 2, at least the chromatic index
// (max degree when the graph is too large to afford the exact value), and one
// more than the maximum degree when that degree is attained twice — at exactly
// max-degree many colors both of those vertices would read all-zero codes.
int lower_bound(const Graph& g);

// Decides one color count: status feasible_only carries a certificate,
// infeasible_at_k is a completed refutation, budget_exhausted is neither.
SolveResult feasible(const Graph& g, int k, const SolveOptions& options = {});

// Minimum color count of an edge-locating coloring, by deciding ascending
// counts independently from lower_bound(g) (feasibility is not monotone in
// the color count, so each count gets a full decision). A verified fallback
// coloring — via a maximum matching, or injective colors on small orders —
// caps the search and supplies the best-known coloring under budget
// exhaustion.
SolveResult elc_number(const Graph& g, const SolveOptions& options = {});

}  // namespace elc
