#include "elc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace elc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  g.incident.resize(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ") with n=" + std::to_string(n));
    if (a == b)
      throw std::invalid_argument("loop edge rejected at vertex " +
                                  std::to_string(a));
    auto e = std::minmax(a, b);
    if (!seen.insert(e).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.first) +
                                  "," + std::to_string(e.second) + ")");
    int idx = static_cast<int>(g.edges.size());
    g.edges.emplace_back(e.first, e.second);
    g.incident[e.first].push_back(idx);
    g.incident[e.second].push_back(idx);
  }
  for (int v = 0; v < n; ++v) {
    auto& inc = g.incident[v];
    auto other = [&](int e) {
      return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
    };
    std::sort(inc.begin(), inc.end(),
              [&](int a, int b) { return other(a) < other(b); });
    g.adj[v].reserve(inc.size());
    for (int e : inc) g.adj[v].push_back(other(e));
  }
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

std::optional<int> Graph::edge_between(int u, int v) const {
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) return std::nullopt;
  for (int e : incident[u]) {
    const auto& [a, b] = edges[e];
    if ((a == u && b == v) || (a == v && b == u)) return e;
  }
  return std::nullopt;
}

bool Graph::operator==(const Graph& other) const {
  if (n != other.n || edges.size() != other.edges.size()) return false;
  auto a = edges;
  auto b = other.edges;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool DistanceTable::all_finite() const {
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x == kUnreachable; });
}

DistanceTable all_pairs_distances(const Graph& g) {
  DistanceTable t;
  t.n = g.n;
  t.d.assign(static_cast<size_t>(g.n) * g.n, kUnreachable);
  std::vector<int> queue;
  queue.reserve(g.n);
  for (int s = 0; s < g.n; ++s) {
    auto* row = &t.d[static_cast<size_t>(s) * g.n];
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.adj[u]) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return t;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int count = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.adj[queue[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == g.n;
}

int diameter(const Graph& g) {
  require_connected(g, "diameter");
  auto t = all_pairs_distances(g);
  int d = 0;
  for (int x : t.d) d = std::max(d, x);
  return d;
}

std::map<int, int> degree_census(const Graph& g) {
  std::map<int, int> census;
  for (int v = 0; v < g.n; ++v) census[g.degree(v)]++;
  return census;
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g))
    throw std::invalid_argument(std::string(op) +
                                ": graph must be connected");
}

void require_order_at_least(const Graph& g, int n_min, const char* op) {
  if (g.n < n_min)
    throw std::invalid_argument(std::string(op) + ": graph order " +
                                std::to_string(g.n) + " below minimum " +
                                std::to_string(n_min));
}

}  // namespace elc
