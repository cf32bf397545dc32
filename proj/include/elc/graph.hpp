#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace elc {

// Sentinel distance for unreachable vertex pairs.
inline constexpr int kUnreachable = -1;

// Simple undirected graph on vertices 0..n-1.
//
// Edge identity is positional: an edge coloring refers to edges by their index
// in `edges`, so the construction order of a graph is part of its interface.
// Stored endpoints are normalized to (lo, hi); loops and duplicate edges are
// rejected at construction.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::vector<std::vector<int>> incident;  // edge indices, aligned with adj

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj.at(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const { return edge_between(u, v).has_value(); }
  std::optional<int> edge_between(int u, int v) const;

  // Equality is structural: same order and same edge set (edge order ignored).
  bool operator==(const Graph& other) const;
};

// Pairwise shortest-path distances (unit edge lengths).
struct DistanceTable {
  int n = 0;
  std::vector<int> d;  // row-major n*n; kUnreachable where no path exists

  int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  bool all_finite() const;
};

DistanceTable all_pairs_distances(const Graph& g);
bool is_connected(const Graph& g);

// Throws std::invalid_argument on a disconnected graph.
int diameter(const Graph& g);

// degree -> number of vertices with that degree (only degrees that occur).
std::map<int, int> degree_census(const Graph& g);

// Internal precondition helpers shared across modules.
void require_connected(const Graph& g, const char* op);
void require_order_at_least(const Graph& g, int n_min, const char* op);

}  // namespace elc
