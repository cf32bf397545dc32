#include "elc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elc/matching.hpp"
#include "elc/oracles.hpp"

namespace elc {
namespace {

using Clock = std::chrono::steady_clock;

// The per-vertex incident-color set lives in one 64-bit mask.
constexpr int kMaxSearchColors = 64;
constexpr std::int16_t kFar = 0x3FFF;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void validate_options(const SolveOptions& opts) {
  if (opts.node_budget <= 0 || opts.time_budget_secs <= 0) {
    throw std::invalid_argument("solver: budgets must be positive");
  }
  if (opts.workers < 1) throw std::invalid_argument("solver: workers must be at least 1");
}

// Shared node/time budget; probes running concurrently drain the same cell.
struct BudgetGovernor {
  std::atomic<long>* cell;
  long node_budget;
  Clock::time_point deadline;
  long unflushed = 0;
  bool out = false;

  bool spend() {
    if (out) return false;
    ++unflushed;
    if ((unflushed & 1023) == 0) {
      long total = cell->fetch_add(1024, std::memory_order_relaxed) + 1024;
      unflushed = 0;
      if (total > node_budget || Clock::now() > deadline) out = true;
    }
    return !out;
  }
  void flush() {
    cell->fetch_add(unflushed, std::memory_order_relaxed);
    unflushed = 0;
  }
};

// Distance from every vertex to every edge, row-major by vertex.
std::vector<std::int16_t> vertex_edge_distances(const Graph& g, const DistanceTable& dist) {
  std::vector<std::int16_t> table(static_cast<std::size_t>(g.n) * g.m());
  for (int v = 0; v < g.n; ++v)
    for (int e = 0; e < g.m(); ++e)
      table[static_cast<std::size_t>(v) * g.m() + e] =
          static_cast<std::int16_t>(vertex_edge_distance(dist, v, g.edges[e]));
  return table;
}

// Edges in first-encounter order along a depth-first traversal from the root;
// every edge after the first touches an already-visited vertex.
std::vector<int> dfs_edge_order(const Graph& g, int root) {
  std::vector<int> order;
  order.reserve(g.edges.size());
  std::vector<bool> listed(g.edges.size(), false);
  std::vector<bool> visited(static_cast<std::size_t>(g.n), false);
  std::vector<std::pair<int, std::size_t>> stack;
  stack.emplace_back(root, 0);
  visited[root] = true;
  while (!stack.empty()) {
    auto& [u, i] = stack.back();
    if (i == g.adj[u].size()) {
      stack.pop_back();
      continue;
    }
    int w = g.adj[u][i];
    int e = g.incident[u][i];
    ++i;
    if (!listed[e]) {
      listed[e] = true;
      order.push_back(e);
    }
    if (!visited[w]) {
      visited[w] = true;
      stack.emplace_back(w, 0);
    }
  }
  return order;
}

enum class Outcome { feasible, infeasible, budget };

struct Decision {
  Outcome outcome = Outcome::infeasible;
  std::optional<EdgeColoring> certificate;
  SolveStats stats;
};

// Backtracking core. Alongside the coloring it maintains, for every vertex
// pair and every color, the current distance from each endpoint to the
// nearest edge of that color. Those minima only ever decrease as edges are
// colored, so once a pair's rows are entrywise equal AND every edge the pair
// sees at different distances is already colored, the final codes are forced
// equal — the branch dies. At a full assignment the rows are the exact codes,
// so reaching one means the coloring is edge-locating.
struct Engine {
  const Graph& g;
  const std::vector<std::int16_t>& vedist;
  int n, m, k, npairs;

  std::vector<int> pu, pv;                   // pair -> endpoints, u < v
  std::vector<std::vector<int>> diff_pairs;  // edge -> pairs seeing it at differing distances
  std::vector<std::int16_t> row;             // (pair * k + color-1) * 2 + side -> min distance
  std::vector<int> mism;                     // pair -> # colors with differing row entries
  std::vector<int> rem;                      // pair -> uncolored differing edges
  int fatal_pairs = 0;                       // pairs with rem == 0 and mism == 0

  std::vector<std::uint64_t> vmask;  // vertex -> incident color bits
  std::vector<int> colors;           // edge -> color, 0 when unassigned
  std::vector<int> order;            // branching sequence

  struct Frame {
    int edge;
    int color;
    std::size_t row_mark;
    std::size_t mism_mark;
    int fatal_saved;
  };
  std::vector<Frame> frames;
  std::vector<std::pair<int, std::int16_t>> row_trail;  // (row index, old value)
  std::vector<std::pair<int, int>> mism_trail;          // (pair, old value)
  std::vector<int> stamp;
  int serial = 0;

  Engine(const Graph& g, const std::vector<std::int16_t>& vedist, int k)
      : g(g), vedist(vedist), n(g.n), m(g.m()), k(k), npairs(g.n * (g.n - 1) / 2) {
    pu.reserve(npairs);
    pv.reserve(npairs);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        pu.push_back(u);
        pv.push_back(v);
      }
    diff_pairs.assign(static_cast<std::size_t>(m), {});
    rem.assign(static_cast<std::size_t>(npairs), 0);
    for (int p = 0; p < npairs; ++p) {
      for (int e = 0; e < m; ++e) {
        if (at(pu[p], e) != at(pv[p], e)) {
          diff_pairs[e].push_back(p);
          ++rem[p];
        }
      }
      assert(rem[p] > 0);  // connected graphs of order >= 3 separate every pair somewhere
    }
    row.assign(static_cast<std::size_t>(npairs) * k * 2, kFar);
    mism.assign(static_cast<std::size_t>(npairs), 0);
    vmask.assign(static_cast<std::size_t>(n), 0);
    colors.assign(static_cast<std::size_t>(m), 0);
    stamp.assign(static_cast<std::size_t>(npairs), -1);
  }

  std::int16_t at(int v, int e) const {
    return vedist[static_cast<std::size_t>(v) * m + e];
  }

  void shift_mismatch(int p, int delta) {
    if (stamp[p] != serial) {
      stamp[p] = serial;
      mism_trail.emplace_back(p, mism[p]);
    }
    bool was_fatal = rem[p] == 0 && mism[p] == 0;
    mism[p] += delta;
    bool now_fatal = rem[p] == 0 && mism[p] == 0;
    fatal_pairs += static_cast<int>(now_fatal) - static_cast<int>(was_fatal);
  }

  // Assigns color c to edge e; false when some pair is now forced to collide.
  bool apply(int e, int c) {
    ++serial;
    frames.push_back({e, c, row_trail.size(), mism_trail.size(), fatal_pairs});
    colors[e] = c;
    std::uint64_t bit = 1ULL << (c - 1);
    vmask[g.edges[e].first] |= bit;
    vmask[g.edges[e].second] |= bit;
    for (int p = 0; p < npairs; ++p) {
      std::size_t base = (static_cast<std::size_t>(p) * k + (c - 1)) * 2;
      std::int16_t ou = row[base], ov = row[base + 1];
      std::int16_t nu = std::min(ou, at(pu[p], e));
      std::int16_t nv = std::min(ov, at(pv[p], e));
      if (nu == ou && nv == ov) continue;
      if (nu != ou) {
        row_trail.emplace_back(static_cast<int>(base), ou);
        row[base] = nu;
      }
      if (nv != ov) {
        row_trail.emplace_back(static_cast<int>(base + 1), ov);
        row[base + 1] = nv;
      }
      bool was_eq = ou == ov, now_eq = nu == nv;
      if (was_eq != now_eq) shift_mismatch(p, now_eq ? -1 : +1);
    }
    for (int p : diff_pairs[e]) {
      --rem[p];
      if (rem[p] == 0 && mism[p] == 0) ++fatal_pairs;
    }
    return fatal_pairs == 0;
  }

  void undo() {
    const Frame& f = frames.back();
    while (row_trail.size() > f.row_mark) {
      auto [idx, old] = row_trail.back();
      row[idx] = old;
      row_trail.pop_back();
    }
    while (mism_trail.size() > f.mism_mark) {
      auto [p, old] = mism_trail.back();
      mism[p] = old;
      mism_trail.pop_back();
    }
    for (int p : diff_pairs[f.edge]) ++rem[p];
    fatal_pairs = f.fatal_saved;
    colors[f.edge] = 0;
    std::uint64_t bit = 1ULL << (f.color - 1);
    vmask[g.edges[f.edge].first] &= ~bit;
    vmask[g.edges[f.edge].second] &= ~bit;
    frames.pop_back();
  }

  // Colors may only be introduced in ascending order, so a complete
  // assignment that passed the class quota uses all k classes, and reaching
  // one with no fatal pair means every vertex pair separated.
  bool search(std::size_t pos, int introduced, BudgetGovernor& budget, SolveStats& stats) {
    if (pos == order.size()) {
      ++stats.leaf_checks;
      return true;
    }
    int e = order[pos];
    std::uint64_t blocked = vmask[g.edges[e].first] | vmask[g.edges[e].second];
    int top = std::min(introduced + 1, k);
    long remaining_after = static_cast<long>(order.size() - pos - 1);
    for (int c = 1; c <= top; ++c) {
      if (blocked >> (c - 1) & 1) {
        ++stats.properness_rejections;
        continue;
      }
      int next_introduced = std::max(introduced, c);
      if (k - next_introduced > remaining_after) {
        ++stats.quota_prunes;
        continue;
      }
      if (!budget.spend()) return false;
      ++stats.nodes;
      if (apply(e, c)) {
        if (search(pos + 1, next_introduced, budget, stats)) return true;
        if (budget.out) {
          undo();
          return false;
        }
      } else {
        ++stats.pair_prunes;
      }
      undo();
    }
    return false;
  }
};

// Decides whether an edge-locating coloring with exactly k colors exists.
Decision decide(const Graph& g, const std::vector<std::int16_t>& vedist, int k,
                std::atomic<long>& node_cell, long node_budget, Clock::time_point deadline) {
  Decision result;
  auto t0 = Clock::now();
  int delta = g.max_degree();
  if (k < delta || k > g.m()) {  // properness needs >= delta; empty classes beyond m
    result.stats.wall_secs = seconds_since(t0);
    return result;
  }
  if (k > kMaxSearchColors) {
    throw std::invalid_argument("solver: counts above " + std::to_string(kMaxSearchColors) +
                                " colors are beyond desk scale");
  }

  Engine engine(g, vedist, k);
  int root = 0;
  while (g.degree(root) != delta) ++root;

  // One maximum-degree star is pre-colored 1..delta: any proper coloring can
  // be relabeled into this form, and relabeling preserves the property.
  bool doomed = false;
  int used = 0;
  for (int e : engine.g.incident[root]) {
    if (!engine.apply(e, ++used)) doomed = true;
  }
  if (!doomed) {
    engine.order.reserve(g.edges.size() - g.degree(root));
    for (int e : dfs_edge_order(g, root)) {
      auto [u, v] = g.edges[e];
      if (u != root && v != root) engine.order.push_back(e);
    }
    BudgetGovernor budget{&node_cell, node_budget, deadline};
    bool found = engine.search(0, delta, budget, result.stats);
    budget.flush();
    if (found) {
      EdgeColoring certificate{k, engine.colors};
      VerificationReport report = verify_elc(g, certificate);
      if (!report.passed) {
        throw std::logic_error("solver: internal certificate failed verification at " +
                               std::to_string(k) + " colors");
      }
      result.outcome = Outcome::feasible;
      result.certificate = std::move(certificate);
    } else {
      result.outcome = budget.out ? Outcome::budget : Outcome::infeasible;
    }
  }
  result.stats.wall_secs = seconds_since(t0);
  return result;
}

void merge_stats(SolveStats& into, const SolveStats& from) {
  into.nodes += from.nodes;
  into.properness_rejections += from.properness_rejections;
  into.quota_prunes += from.quota_prunes;
  into.pair_prunes += from.pair_prunes;
  into.leaf_checks += from.leaf_checks;
}

// Cheap verified coloring capping the search: the matching bound when the
// order allows it, injective colors otherwise.
EdgeColoring fallback_coloring(const Graph& g) {
  if (g.n >= 5) {
    Matching matching = maximum_matching(g);
    if (!matching.empty()) {
      std::vector<bool> in_matching(g.edges.size(), false);
      for (auto [u, v] : matching) in_matching[*g.edge_between(u, v)] = true;
      std::vector<int> colors(g.edges.size());
      int next = 1;
      for (int e = 0; e < g.m(); ++e) colors[e] = in_matching[e] ? 1 : ++next;
      EdgeColoring candidate{next, std::move(colors)};
      if (verify_elc(g, candidate).passed) return candidate;
    }
  }
  std::vector<int> colors(g.edges.size());
  std::iota(colors.begin(), colors.end(), 1);
  EdgeColoring rainbow{g.m(), std::move(colors)};
  if (!verify_elc(g, rainbow).passed) {
    throw std::logic_error("solver: injective fallback coloring failed verification");
  }
  return rainbow;
}

}  // namespace

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible_only: return "feasible_only";
    case SolveStatus::infeasible_at_k: return "infeasible_at_k";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

int lower_bound(const Graph& g) {
  require_connected(g, "lower_bound");
  require_order_at_least(g, 3, "lower_bound");
  int delta = g.max_degree();
  int at_max = 0;
  for (int v = 0; v < g.n; ++v) at_max += g.degree(v) == delta;
  int bound = std::max(2, delta + (at_max >= 2 ? 1 : 0));
  if (g.m() <= 20) bound = std::max(bound, chromatic_index_exact(g));
  return bound;
}

SolveResult feasible(const Graph& g, int k, const SolveOptions& options) {
  require_connected(g, "feasible");
  require_order_at_least(g, 3, "feasible");
  if (k < 1) throw std::invalid_argument("feasible: the color count must be positive");
  validate_options(options);

  auto t0 = Clock::now();
  DistanceTable dist = all_pairs_distances(g);
  std::vector<std::int16_t> vedist = vertex_edge_distances(g, dist);
  std::atomic<long> nodes{0};
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.time_budget_secs));
  Decision decision = decide(g, vedist, k, nodes, options.node_budget, deadline);

  SolveResult result;
  result.stats = decision.stats;
  result.stats.wall_secs = seconds_since(t0);
  switch (decision.outcome) {
    case Outcome::feasible:
      result.status = SolveStatus::feasible_only;
      result.k = k;
      result.certificate = std::move(decision.certificate);
      break;
    case Outcome::infeasible:
      result.status = SolveStatus::infeasible_at_k;
      result.exhausted_k = k;
      break;
    case Outcome::budget:
      result.status = SolveStatus::budget_exhausted;
      break;
  }
  return result;
}

SolveResult elc_number(const Graph& g, const SolveOptions& options) {
  require_connected(g, "elc_number");
  require_order_at_least(g, 3, "elc_number");
  validate_options(options);

  auto t0 = Clock::now();
  SolveResult result;
  int valid_floor = lower_bound(g);
  int start = std::max(1, options.lower_bound_override.value_or(valid_floor));
  result.exhausted_k = valid_floor - 1;

  EdgeColoring fallback = fallback_coloring(g);
  const int fallback_k = fallback.k;
  int cap = options.upper_bound_override.value_or(fallback_k);
  bool fallback_usable = fallback_k <= cap;
  int last_search = std::min(fallback_usable ? fallback_k - 1 : cap, kMaxSearchColors);

  DistanceTable dist = all_pairs_distances(g);
  std::vector<std::int16_t> vedist = vertex_edge_distances(g, dist);
  std::atomic<long> nodes{0};
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.time_budget_secs));

  auto finish = [&](SolveStatus status, std::optional<int> k,
                    std::optional<EdgeColoring> certificate) {
    result.status = status;
    result.k = k;
    result.certificate = std::move(certificate);
    result.stats.wall_secs = seconds_since(t0);
    return result;
  };
  auto finish_without_search_hit = [&]() {
    // No searched count was feasible; fall back to the constructed coloring
    // or, when an override capped the range, report the refutations.
    if (fallback_usable) {
      SolveStatus status = result.exhausted_k == fallback_k - 1 ? SolveStatus::optimal
                                                                 : SolveStatus::feasible_only;
      return finish(status, fallback_k, std::move(fallback));
    }
    return finish(SolveStatus::infeasible_at_k, std::nullopt, std::nullopt);
  };

  int probes = options.deterministic ? 1 : std::max(1, options.workers);
  for (int k = start; k <= last_search;) {
    int batch = std::min(probes, last_search - k + 1);
    std::vector<std::future<Decision>> running;
    for (int i = 1; i < batch; ++i) {
      running.push_back(std::async(std::launch::async, [&, probe_k = k + i] {
        return decide(g, vedist, probe_k, nodes, options.node_budget, deadline);
      }));
    }
    Decision first = decide(g, vedist, k, nodes, options.node_budget, deadline);
    std::vector<Decision> decisions;
    decisions.push_back(std::move(first));
    for (auto& f : running) decisions.push_back(f.get());

    for (int i = 0; i < batch; ++i) {
      int probe_k = k + i;
      merge_stats(result.stats, decisions[i].stats);
      switch (decisions[i].outcome) {
        case Outcome::infeasible:
          if (probe_k == result.exhausted_k + 1) result.exhausted_k = probe_k;
          break;
        case Outcome::feasible: {
          SolveStatus status = result.exhausted_k == probe_k - 1 ? SolveStatus::optimal
                                                                 : SolveStatus::feasible_only;
          return finish(status, probe_k, std::move(decisions[i].certificate));
        }
        case Outcome::budget:
          if (fallback_usable) {
            return finish(SolveStatus::budget_exhausted, fallback_k, std::move(fallback));
          }
          return finish(SolveStatus::budget_exhausted, std::nullopt, std::nullopt);
      }
    }
    k += batch;
  }
  return finish_without_search_hit();
}

}  // namespace elc
