#pragma once

#include <utility>
#include <vector>

#include "elc/graph.hpp"

namespace elc {

using Matching = std::vector<std::pair<int, int>>;

// Maximum cardinality matching (blossom contraction algorithm). Deterministic:
// the result depends only on the graph's edge insertion order. Pairs are
// returned with the smaller endpoint first, sorted.
Matching maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

// Greedily peels pairwise edge-disjoint perfect matchings: finds a maximum
// matching, keeps it if perfect, removes its edges and repeats. Stops when no
// perfect matching remains or max_count matchings were found. The greedy
// peel can undercount, so callers treat the result as "at least this many".
std::vector<Matching> disjoint_perfect_matchings(const Graph& g, int max_count);

}  // namespace elc
