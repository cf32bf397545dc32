#pragma once

#include <optional>
#include <vector>

#include "elc/coloring.hpp"
#include "elc/graph.hpp"

namespace elc {

// Independent exhaustive checkers. Everything here favors obviousness over
// speed and is meant to cross-validate the production search on small inputs;
// the size preconditions keep the running time at desk scale and can be
// loosened per call where a slightly larger instance is known to be cheap.

struct BruteForceResult {
  // Smallest color count admitting an edge-locating coloring, or nullopt when
  // none exists with at most the requested number of colors.
  std::optional<int> k;
  std::optional<EdgeColoring> witness;
  long colorings_checked = 0;
};

// Enumerates proper colorings in canonical order (a color may only appear
// after all smaller colors have appeared) for each color count in ascending
// order and returns the first edge-locating one found. Requires a connected
// graph of order >= 3 with at most max_edges edges.
BruteForceResult brute_force_elc(const Graph& g, int max_colors, int max_edges = 9);

// Exact chromatic index via exhaustive search at max degree (the answer is
// either the max degree or one more). Requires at most max_edges edges.
int chromatic_index_exact(const Graph& g, int max_edges = 20);

enum class ResolvingVariant {
  edges_resolve_edges,    // distances from edges to a set of edges
  edges_resolve_vertices  // distances from vertices to a set of edges
};

struct EdgeMetricResult {
  // Smallest resolving edge set size, or nullopt when even the full edge set
  // fails to resolve (possible in the edges_resolve_edges variant).
  std::optional<int> dimension;
  std::vector<int> witness;  // edge indices of one smallest resolving set
};

// Smallest set of edges whose distance vectors distinguish all edges
// (edges_resolve_edges) or all vertices (edges_resolve_vertices), found by
// exhaustive search over subsets in ascending size. Requires a connected
// graph with at most max_edges edges.
EdgeMetricResult edge_metric_dimension(const Graph& g, ResolvingVariant variant,
                                       int max_edges = 20);

// All automorphisms as vertex permutations, identity first, in lexicographic
// order of the image sequence. Requires order at most max_order; intended for
// graphs whose automorphism group is small enough to list.
std::vector<std::vector<int>> automorphisms(const Graph& g, int max_order = 16);

// True when no non-identity automorphism preserves every edge color. Searches
// for color-preserving automorphisms directly rather than listing the group.
bool is_edge_distinguishing(const Graph& g, const EdgeColoring& coloring);

// A vertex bijection g -> h preserving adjacency, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace elc
