#include "elc/matching.hpp"

#include <algorithm>

namespace elc {
namespace {

// Classic O(n^3) blossom-contraction maximum matching over an adjacency list.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<int>>& adj)
      : n_(static_cast<int>(adj.size())),
        adj_(adj),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_, 0),
        used_(n_, false),
        in_blossom_(n_, false) {}

  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int leaf = find_augmenting_path(v);
      while (leaf != -1) {
        int prev = parent_[leaf];
        int next = match_[prev];
        match_[leaf] = prev;
        match_[prev] = leaf;
        leaf = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_blossom_path(int v, int stop_base, int child) {
    while (base_[v] != stop_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS for an augmenting path from root; returns its free endpoint or -1.
  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int stop_base = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_blossom_path(v, stop_base, to);
          mark_blossom_path(to, stop_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = stop_base;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

Matching matching_from_mate(const std::vector<int>& mate) {
  Matching result;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) result.emplace_back(v, mate[v]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  BlossomMatcher matcher(g.adj);
  return matching_from_mate(matcher.solve());
}

bool has_perfect_matching(const Graph& g) {
  if (g.n % 2 != 0) return false;
  return static_cast<int>(maximum_matching(g).size()) * 2 == g.n;
}

std::vector<Matching> disjoint_perfect_matchings(const Graph& g, int max_count) {
  std::vector<Matching> result;
  if (g.n % 2 != 0) return result;
  std::vector<std::pair<int, int>> remaining = g.edges;
  while (static_cast<int>(result.size()) < max_count) {
    Graph residual = Graph::from_edges(g.n, remaining);
    Matching m = maximum_matching(residual);
    if (static_cast<int>(m.size()) * 2 != g.n) break;
    result.push_back(m);
    std::vector<std::pair<int, int>> next;
    for (auto e : remaining) {
      if (!std::binary_search(m.begin(), m.end(), e)) next.push_back(e);
    }
    remaining = std::move(next);
  }
  return result;
}

}  // namespace elc
