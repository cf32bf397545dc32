#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elc/coloring.hpp"
#include "elc/families.hpp"
#include "elc/graph.hpp"
#include "elc/matching.hpp"

namespace elc {

// A coloring bundled with the graph it colors and a verification report.
// Constructors never return unverified output: report.passed is always true
// and coloring.k == claimed_k.
struct CertifiedColoring {
  Graph graph;
  EdgeColoring coloring;
  int claimed_k = 0;
  std::string theorem_tag;
  VerificationReport report;
};

// Closed-form coloring schemes dispatched by family. claimed_k equals the
// known exact value of the edge-locating chromatic number for that family:
//   path:n            2 (n=3), 3 (n>=4)
//   cycle:n           3 (n=3), 4 (n>=4)
//   complete:n        n (odd), n+1 (even; n=8 uses a fixed repaired matrix,
//                     other orders divisible-by-3-plus-1 use a chain repair)
//   complete_bipartite:n,m   max(n,m)+1 (n!=m, both >=2), n+2 (n=m>=2),
//                     max(n,m) when one side is a single hub (a star)
//   star:n            n (n>=2)
//   double_star:p,q   p+1 (p>q), p+2 (p=q)
//   wheel:n           n (n>=4), 5 (n=3, the complete graph on 4 vertices)
//   fan:n             n (n>=4), 3 (n=2), 4 (n=3)
//   windmill:n        2n (n>=3), 5 (n=2)
//   book:n            2n+2 (n>=2)
//   spectrum_tree:m,k k
//   complete_minus_matching:n,k   odd n=2t+1: n (k<=t-1), n-1 (k=t);
//                     even n=2t: n (k in {t-1, t}); other parameters have no
//                     closed-form scheme and are rejected.
// Families without a scheme (perfect_binary_tree, monotonicity_G/H) throw
// std::invalid_argument; a scheme failing self-verification throws
// std::logic_error (a bug signal, never silently repaired).
CertifiedColoring construct_coloring(const FamilySpec& spec);

// Data for the tree upper bounds. delta_tprime is the maximum degree of the
// tree with its leaves removed; supports are vertices adjacent to a leaf.
struct TreeSupportStats {
  int delta_tprime = 0;
  int support_count = 0;
  int max_leaves_per_support = 0;
  int bound = 0;  // delta_tprime + max_leaves_per_support + support_count - 1
};
TreeSupportStats tree_support_stats(const Graph& tree);

struct TreeLeavesStats {
  int delta_tprime = 0;
  int leaf_count = 0;
  int bound = 0;  // delta_tprime + leaf_count
};
TreeLeavesStats tree_leaves_stats(const Graph& tree);

bool is_tree(const Graph& g);

// Support-vertex upper-bound scheme: a proper delta_tprime-coloring of the
// leafless subtree, then per support (ascending leaf count, vertex index as
// tiebreak) shared pendant colors plus one fresh color. Uses exactly
// tree_support_stats(tree).bound colors. Requires a tree of order >= 3 with
// max degree strictly below its leaf count; other trees are rejected with a
// pointer to color_tree_leaves.
CertifiedColoring color_tree_support(const Graph& tree);

// Leaf-count upper-bound scheme. When the maximum degree equals the leaf
// count the tree is a spider and gets the exact-Δ coloring (legs alternate
// colors i, i+1 cyclically); otherwise the leafless subtree is properly
// colored with delta_tprime colors and every pendant edge gets a distinct
// fresh color. Requires a tree with at least 3 leaves.
CertifiedColoring color_tree_leaves(const Graph& tree);

// Monochromatic-matching scheme: all matching edges share color 1, every
// other edge gets a distinct color; |E| - |M| + 1 colors total. Defaults to a
// maximum matching. Requires a connected graph of order >= 5.
CertifiedColoring color_via_matching(const Graph& g,
                                     std::optional<Matching> matching = std::nullopt);

// One color per perfect matching plus distinct colors on the rest;
// |E| - k*n/2 + k colors. The matchings must be pairwise edge-disjoint
// perfect matchings whose removal leaves a connected spanning subgraph; all
// hypothesis failures are reported together in the thrown message.
CertifiedColoring color_via_disjoint_matchings(const Graph& g,
                                               const std::vector<Matching>& matchings);

// The complete graph on `order` (even) vertices minus one perfect matching
// and `m` further pairwise disjoint matchings of size order/2 - 1, all taken
// from monochromatic classes of the complete-graph certificate; colored with
// order - m colors. Requires 1 <= m <= order/2 - 1.
CertifiedColoring color_complete_minus_matching_union(int order, int m);

}  // namespace elc
