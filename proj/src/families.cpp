#include "elc/families.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace elc {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_param_count(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    std::ostringstream os;
    os << "family '" << spec.name << "' takes " << count << " parameter"
       << (count == 1 ? "" : "s") << ", got " << spec.params.size();
    fail(os.str());
  }
}

void require_range(const FamilySpec& spec, std::size_t index, long lo, long hi) {
  long v = spec.params.at(index);
  if (v < lo || v > hi) {
    std::ostringstream os;
    os << "family '" << spec.name << "': parameter " << index + 1 << " = " << v
       << " out of range [" << lo << ", " << hi << "]";
    fail(os.str());
  }
}

using EdgeList = std::vector<std::pair<int, int>>;

Graph make_path(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int n, int m) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) edges.emplace_back(i, n + j);
  return Graph::from_edges(n + m, edges);
}

Graph make_star(int n) {
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n + 1, edges);
}

Graph make_double_star(int p, int q) {
  EdgeList edges;
  edges.emplace_back(0, 1);
  for (int i = 0; i < p; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < q; ++i) edges.emplace_back(1, 2 + p + i);
  return Graph::from_edges(2 + p + q, edges);
}

Graph make_wheel(int n) {
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edges(n + 1, edges);
}

Graph make_fan(int n) {
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n + 1, edges);
}

Graph make_windmill(int n) {
  EdgeList edges;
  for (int i = 1; i <= 2 * n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= n; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  return Graph::from_edges(2 * n + 1, edges);
}

Graph make_book(int n) {
  EdgeList edges;
  edges.emplace_back(0, 1);
  for (int j = 2; j <= 2 * n + 1; ++j) edges.emplace_back(0, j);
  for (int j = 2; j <= 2 * n + 1; ++j) edges.emplace_back(1, j);
  for (int i = 1; i <= n; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edges(2 * n + 2, edges);
}

Graph make_perfect_binary_tree(int depth) {
  int n = (1 << (depth + 1)) - 1;
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
  return Graph::from_edges(n, edges);
}

// Size-m tree with maximum degree k. For k >= 4 this is a "broom": hub vertex
// 1 carries leaves 0, 2..k-1 and a pendant path 1, k, k+1, ..., m. For k = 3
// it degenerates to the path on m+1 vertices.
Graph make_spectrum_tree(int m, int k) {
  if (k == 3) return make_path(m + 1);
  EdgeList edges;
  edges.emplace_back(1, 0);
  for (int j = 2; j < k; ++j) edges.emplace_back(1, j);
  edges.emplace_back(1, k);
  for (int j = k; j < m; ++j) edges.emplace_back(j, j + 1);
  return Graph::from_edges(m + 1, edges);
}

Graph make_complete_minus_matching(int n, int k) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool removed = (j == i + 1) && (i % 2 == 0) && (i / 2 < k);
      if (!removed) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

// Perfect binary tree of depth 3 (heap numbered 0..14) plus a pendant vertex
// 15 attached to the root.
Graph make_monotonicity_g() {
  EdgeList edges;
  for (int i = 1; i < 15; ++i) edges.emplace_back((i - 1) / 2, i);
  edges.emplace_back(0, 15);
  return Graph::from_edges(16, edges);
}

Graph make_monotonicity_h() {
  Graph g = make_monotonicity_g();
  EdgeList edges = g.edges;
  edges.emplace_back(0, 7);
  return Graph::from_edges(16, edges);
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << name;
  for (std::size_t i = 0; i < params.size(); ++i) os << (i == 0 ? ':' : ',') << params[i];
  return os.str();
}

FamilySpec parse_family(const std::string& text) {
  FamilySpec spec;
  std::size_t colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) fail("empty family name in '" + text + "'");
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    if (rest.empty()) fail("empty parameter list in '" + text + "'");
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string token = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail("bad integer parameter '" + token + "' in '" + text + "'");
      }
      spec.params.push_back(value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return spec;
}

Graph family_graph(const FamilySpec& spec) {
  const std::string& f = spec.name;
  if (f == "path") {
    require_param_count(spec, 1);
    require_range(spec, 0, 1, 100000);
    return make_path(static_cast<int>(spec.params[0]));
  }
  if (f == "cycle") {
    require_param_count(spec, 1);
    require_range(spec, 0, 3, 100000);
    return make_cycle(static_cast<int>(spec.params[0]));
  }
  if (f == "complete") {
    require_param_count(spec, 1);
    require_range(spec, 0, 1, 2000);
    return make_complete(static_cast<int>(spec.params[0]));
  }
  if (f == "complete_bipartite") {
    require_param_count(spec, 2);
    require_range(spec, 0, 1, 2000);
    require_range(spec, 1, 1, 2000);
    return make_complete_bipartite(static_cast<int>(spec.params[0]),
                                   static_cast<int>(spec.params[1]));
  }
  if (f == "star") {
    require_param_count(spec, 1);
    require_range(spec, 0, 1, 100000);
    return make_star(static_cast<int>(spec.params[0]));
  }
  if (f == "double_star") {
    require_param_count(spec, 2);
    require_range(spec, 0, 1, 100000);
    require_range(spec, 1, 1, spec.params[0]);  // convention: p >= q >= 1
    return make_double_star(static_cast<int>(spec.params[0]),
                            static_cast<int>(spec.params[1]));
  }
  if (f == "wheel") {
    require_param_count(spec, 1);
    require_range(spec, 0, 3, 100000);
    return make_wheel(static_cast<int>(spec.params[0]));
  }
  if (f == "fan") {
    require_param_count(spec, 1);
    require_range(spec, 0, 2, 100000);
    return make_fan(static_cast<int>(spec.params[0]));
  }
  if (f == "windmill") {
    require_param_count(spec, 1);
    require_range(spec, 0, 2, 100000);
    return make_windmill(static_cast<int>(spec.params[0]));
  }
  if (f == "book") {
    require_param_count(spec, 1);
    require_range(spec, 0, 2, 100000);
    return make_book(static_cast<int>(spec.params[0]));
  }
  if (f == "perfect_binary_tree") {
    require_param_count(spec, 1);
    require_range(spec, 0, 1, 20);
    return make_perfect_binary_tree(static_cast<int>(spec.params[0]));
  }
  if (f == "spectrum_tree") {
    require_param_count(spec, 2);
    require_range(spec, 0, 4, 100000);
    require_range(spec, 1, 3, spec.params[0]);
    return make_spectrum_tree(static_cast<int>(spec.params[0]),
                              static_cast<int>(spec.params[1]));
  }
  if (f == "complete_minus_matching") {
    require_param_count(spec, 2);
    require_range(spec, 0, 3, 2000);
    require_range(spec, 1, 1, spec.params[0] / 2);
    return make_complete_minus_matching(static_cast<int>(spec.params[0]),
                                        static_cast<int>(spec.params[1]));
  }
  if (f == "monotonicity_G") {
    require_param_count(spec, 0);
    return make_monotonicity_g();
  }
  if (f == "monotonicity_H") {
    require_param_count(spec, 0);
    return make_monotonicity_h();
  }
  fail("unknown family '" + f + "'");
}

Graph join_graphs(const Graph& g, const Graph& h) {
  EdgeList edges = g.edges;
  for (auto [u, v] : h.edges) edges.emplace_back(g.n + u, g.n + v);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < h.n; ++v) edges.emplace_back(u, g.n + v);
  return Graph::from_edges(g.n + h.n, edges);
}

}  // namespace elc
