#include "elc/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace elc {
namespace {

void require_edge_budget(const Graph& g, int max_edges, const char* op) {
  if (g.m() > max_edges) {
    throw std::invalid_argument(std::string(op) + ": graph has " + std::to_string(g.m()) +
                                " edges, above the exhaustive-search cap of " +
                                std::to_string(max_edges) +
                                " (raise the cap explicitly if this size is intended)");
  }
}

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(g.n),
                                     std::vector<bool>(static_cast<std::size_t>(g.n), false));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  return adj;
}

// ------------------------------------------------------- brute-force optimum

struct BruteForceSearch {
  const Graph& g;
  const DistanceTable dist;
  int k = 0;
  std::vector<int> colors;
  long checked = 0;
  std::optional<EdgeColoring> witness;

  explicit BruteForceSearch(const Graph& g) : g(g), dist(all_pairs_distances(g)) {}

  bool ok_at(int e, int c) const {
    auto [u, v] = g.edges[e];
    for (int f : g.incident[u])
      if (f != e && colors[f] == c) return false;
    for (int f : g.incident[v])
      if (f != e && colors[f] == c) return false;
    return true;
  }

  bool extend(int e, int used) {
    if (e == g.m()) {
      if (used != k) return false;  // some color class is empty
      ++checked;
      if (!is_edge_locating(g, dist, colors, k)) return false;
      witness = EdgeColoring{k, colors};
      return true;
    }
    int top = std::min(used + 1, k);
    for (int c = 1; c <= top; ++c) {
      if (!ok_at(e, c)) continue;
      colors[e] = c;
      if (extend(e + 1, std::max(used, c))) return true;
      colors[e] = 0;
    }
    return false;
  }

  bool run(int colors_count) {
    k = colors_count;
    colors.assign(g.edges.size(), 0);
    return extend(0, 0);
  }
};

// -------------------------------------------------------- proper colorability

// Whether a proper edge coloring with at most k colors exists; canonical color
// introduction plus a fixed rainbow on one maximum-degree star cut symmetry.
bool properly_colorable(const Graph& g, int k) {
  if (k < g.max_degree()) return false;
  if (static_cast<long>(k) * (g.n / 2) < g.m()) return false;  // classes are matchings
  int root = 0;
  while (g.degree(root) != g.max_degree()) ++root;

  std::vector<int> order;
  std::vector<bool> listed(g.edges.size(), false);
  for (int e : g.incident[root]) {
    order.push_back(e);
    listed[e] = true;
  }
  for (int e = 0; e < g.m(); ++e)
    if (!listed[e]) order.push_back(e);

  std::vector<int> colors(g.edges.size(), 0);
  int used = 0;
  for (int e : g.incident[root]) colors[e] = ++used;

  auto ok_at = [&](int e, int c) {
    auto [u, v] = g.edges[e];
    for (int f : g.incident[u])
      if (f != e && colors[f] == c) return false;
    for (int f : g.incident[v])
      if (f != e && colors[f] == c) return false;
    return true;
  };
  auto extend = [&](auto&& self, std::size_t pos, int introduced) -> bool {
    if (pos == order.size()) return true;
    int e = order[pos];
    int top = std::min(introduced + 1, k);
    for (int c = 1; c <= top; ++c) {
      if (!ok_at(e, c)) continue;
      colors[e] = c;
      if (self(self, pos + 1, std::max(introduced, c))) return true;
      colors[e] = 0;
    }
    return false;
  };
  return extend(extend, static_cast<std::size_t>(used), used);
}

// ----------------------------------------------------------- permutation search

struct MappingSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::vector<bool>> g_adj;
  std::vector<std::vector<bool>> h_adj;
  std::vector<std::vector<int>> candidates;  // per g-vertex, plausible h-images
  std::vector<int> image;
  std::vector<bool> taken;

  MappingSearch(const Graph& g, const Graph& h,
                const std::vector<long>& g_invariant, const std::vector<long>& h_invariant)
      : g(g), h(h), g_adj(adjacency_matrix(g)), h_adj(adjacency_matrix(h)) {
    candidates.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
      for (int w = 0; w < h.n; ++w)
        if (g_invariant[v] == h_invariant[w]) candidates[v].push_back(w);
    image.assign(static_cast<std::size_t>(g.n), -1);
    taken.assign(static_cast<std::size_t>(h.n), false);
  }

  // Visits every adjacency-compatible bijection extension; visit returns true
  // to stop the whole search.
  template <typename Extra, typename Visit>
  bool search(int v, const Extra& compatible, const Visit& visit) {
    if (v == g.n) return visit(image);
    for (int w : candidates[v]) {
      if (taken[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (g_adj[v][u] != h_adj[w][image[u]]) ok = false;
      }
      if (!ok || !compatible(v, w)) continue;
      image[v] = w;
      taken[w] = true;
      if (search(v + 1, compatible, visit)) return true;
      taken[w] = false;
      image[v] = -1;
    }
    return false;
  }
};

// Order-independent vertex invariant: degree plus the sorted neighbor degrees.
std::vector<long> degree_invariants(const Graph& g) {
  std::vector<long> inv(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> around;
    around.reserve(g.adj[v].size());
    for (int w : g.adj[v]) around.push_back(g.degree(w));
    std::sort(around.begin(), around.end());
    long h = g.degree(v);
    for (int d : around) h = h * 131 + d;
    inv[v] = h;
  }
  return inv;
}

}  // namespace

BruteForceResult brute_force_elc(const Graph& g, int max_colors, int max_edges) {
  require_connected(g, "brute_force_elc");
  require_order_at_least(g, 3, "brute_force_elc");
  require_edge_budget(g, max_edges, "brute_force_elc");
  if (max_colors < 1) throw std::invalid_argument("brute_force_elc: max_colors must be positive");

  BruteForceSearch search(g);
  BruteForceResult result;
  for (int k = 1; k <= std::min(max_colors, g.m()); ++k) {
    bool found = search.run(k);
    result.colorings_checked += search.checked;
    search.checked = 0;
    if (found) {
      result.k = k;
      result.witness = std::move(search.witness);
      return result;
    }
  }
  return result;
}

int chromatic_index_exact(const Graph& g, int max_edges) {
  require_connected(g, "chromatic_index_exact");
  require_edge_budget(g, max_edges, "chromatic_index_exact");
  if (g.m() == 0) return 0;
  int delta = g.max_degree();
  return properly_colorable(g, delta) ? delta : delta + 1;
}

EdgeMetricResult edge_metric_dimension(const Graph& g, ResolvingVariant variant, int max_edges) {
  require_connected(g, "edge_metric_dimension");
  require_order_at_least(g, 3, "edge_metric_dimension");
  require_edge_budget(g, max_edges, "edge_metric_dimension");

  DistanceTable dist = all_pairs_distances(g);
  int m = g.m();
  int items = variant == ResolvingVariant::edges_resolve_vertices ? g.n : m;
  // to_edge[x][e]: distance from item x (vertex or edge) to edge e.
  std::vector<std::vector<int>> to_edge(static_cast<std::size_t>(items),
                                        std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < items; ++x) {
    for (int e = 0; e < m; ++e) {
      to_edge[x][e] = variant == ResolvingVariant::edges_resolve_vertices
                          ? vertex_edge_distance(dist, x, g.edges[e])
                          : edge_edge_distance(dist, g.edges[x], g.edges[e]);
    }
  }

  auto resolves = [&](const std::vector<int>& set) {
    std::vector<std::vector<int>> codes;
    codes.reserve(static_cast<std::size_t>(items));
    for (int x = 0; x < items; ++x) {
      std::vector<int> code;
      code.reserve(set.size());
      for (int e : set) code.push_back(to_edge[x][e]);
      codes.push_back(std::move(code));
    }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
  };

  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  if (!resolves(all)) return {};  // not even the full edge set separates

  for (int d = 1; d <= m; ++d) {
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (resolves(idx)) return {d, idx};
      int i = d - 1;
      while (i >= 0 && idx[i] == m - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {m, all};  // unreachable: the full set resolved above
}

std::vector<std::vector<int>> automorphisms(const Graph& g, int max_order) {
  if (g.n > max_order) {
    throw std::invalid_argument("automorphisms: order " + std::to_string(g.n) +
                                " above the cap of " + std::to_string(max_order));
  }
  std::vector<long> inv = degree_invariants(g);
  MappingSearch search(g, g, inv, inv);
  std::vector<std::vector<int>> group;
  search.search(
      0, [](int, int) { return true; },
      [&](const std::vector<int>& image) {
        group.push_back(image);
        return false;  // keep enumerating
      });
  return group;  // candidates are tried ascending, so the identity comes first
}

bool is_edge_distinguishing(const Graph& g, const EdgeColoring& coloring) {
  require_connected(g, "is_edge_distinguishing");
  if (static_cast<int>(coloring.colors.size()) != g.m()) {
    throw std::invalid_argument("is_edge_distinguishing: coloring size does not match edge count");
  }

  // Vertex invariant: degree plus the sorted incident colors.
  std::vector<long> inv(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> around;
    around.reserve(g.incident[v].size());
    for (int e : g.incident[v]) around.push_back(coloring.colors[e]);
    std::sort(around.begin(), around.end());
    long h = g.degree(v);
    for (int c : around) h = h * 131 + c;
    inv[v] = h;
  }

  MappingSearch search(g, g, inv, inv);
  int preserving = 0;
  auto colors_match = [&](int v, int w) {
    for (int u = 0; u < v; ++u) {
      auto e = g.edge_between(v, u);
      if (!e) continue;
      auto f = g.edge_between(w, search.image[u]);
      if (coloring.colors[*e] != coloring.colors[*f]) return false;
    }
    return true;
  };
  search.search(0, colors_match, [&](const std::vector<int>&) {
    return ++preserving >= 2;  // identity plus any second one ends the search
  });
  return preserving == 1;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.m() != h.m()) return std::nullopt;
  std::vector<long> gi = degree_invariants(g);
  std::vector<long> hi = degree_invariants(h);
  auto gs = gi;
  auto hs = hi;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return std::nullopt;

  MappingSearch search(g, h, gi, hi);
  std::optional<std::vector<int>> found;
  search.search(
      0, [](int, int) { return true; },
      [&](const std::vector<int>& image) {
        found = image;
        return true;
      });
  return found;
}

}  // namespace elc
