#pragma once

#include <string>
#include <vector>

#include "elc/graph.hpp"

namespace elc {

// A named graph family instance, e.g. {"wheel", {7}}. The textual grammar is
// "name:param[,param...]" with no parameters allowed for parameterless
// families ("monotonicity_G").
struct FamilySpec {
  std::string name;
  std::vector<long> params;

  std::string to_string() const;
};

FamilySpec parse_family(const std::string& text);

// Canonical vertex numbering per family (documented in README):
//   path:n              vertices 0..n-1 along the path
//   cycle:n             vertices 0..n-1 around the cycle
//   complete:n          all pairs, lexicographic edge order
//   complete_bipartite:n,m   part A = 0..n-1, part B = n..n+m-1
//   star:n              hub 0, leaves 1..n (n edges)
//   double_star:p,q     centers 0,1; 0's leaves 2..p+1; 1's leaves p+2..p+q+1
//   wheel:n             hub 0, rim 1..n; spokes first, then rim edges
//   fan:n               hub 0, path 1..n; spokes first, then path edges
//   windmill:n          hub 0, blade pairs (2i-1, 2i); spokes first
//   book:n              spine 0,1; page vertices 2..2n+1; spine, then 0- and
//                       1-spokes, then page edges (2i, 2i+1)
//   perfect_binary_tree:k    heap numbering, children of i are 2i+1, 2i+2
//   spectrum_tree:m,k   size-m tree with one degree-k vertex (see README);
//                       k=3 degenerates to path:m+1
//   complete_minus_matching:n,k  K_n minus {(0,1),(2,3),...,(2k-2,2k-1)}
//   monotonicity_G      16-vertex tree used by the non-monotonicity example
//   monotonicity_H      monotonicity_G plus one extra edge (0,7)
Graph family_graph(const FamilySpec& spec);

// Join G + H: disjoint union (G's vertices first) plus every cross edge.
Graph join_graphs(const Graph& g, const Graph& h);

}  // namespace elc
