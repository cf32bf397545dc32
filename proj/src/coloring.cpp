#include "elc/coloring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace elc {
namespace {

std::string edge_str(const Graph& g, int e) {
  std::ostringstream os;
  os << '(' << g.edges[e].first << '-' << g.edges[e].second << ')';
  return os.str();
}

std::string code_str(const std::vector<int>& code) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) os << ',';
    if (code[i] == kUnreachable) {
      os << '-';
    } else {
      os << code[i];
    }
  }
  os << ')';
  return os.str();
}

}  // namespace

int vertex_edge_distance(const DistanceTable& dist, int v, std::pair<int, int> e) {
  int a = dist.at(v, e.first);
  int b = dist.at(v, e.second);
  if (a == kUnreachable) return b;
  if (b == kUnreachable) return a;
  return std::min(a, b);
}

int edge_edge_distance(const DistanceTable& dist, std::pair<int, int> e,
                       std::pair<int, int> f) {
  int best = kUnreachable;
  for (int u : {e.first, e.second}) {
    for (int v : {f.first, f.second}) {
      int d = dist.at(u, v);
      if (d == kUnreachable) continue;
      if (best == kUnreachable || d < best) best = d;
    }
  }
  return best;
}

std::vector<int> color_code(const Graph& g, const DistanceTable& dist,
                            const EdgeColoring& coloring, int v) {
  std::vector<int> code(static_cast<std::size_t>(coloring.k), kUnreachable);
  for (int e = 0; e < g.m(); ++e) {
    int c = coloring.colors[e];
    int d = vertex_edge_distance(dist, v, g.edges[e]);
    if (d == kUnreachable) continue;
    int& slot = code[c - 1];
    if (slot == kUnreachable || d < slot) slot = d;
  }
  return code;
}

std::vector<std::vector<int>> all_color_codes(const Graph& g, const DistanceTable& dist,
                                              const EdgeColoring& coloring) {
  std::vector<std::vector<int>> codes;
  codes.reserve(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) codes.push_back(color_code(g, dist, coloring, v));
  return codes;
}

std::vector<int> incident_color_set(const Graph& g, const EdgeColoring& coloring, int v) {
  std::vector<int> result;
  result.reserve(g.incident[v].size());
  for (int e : g.incident[v]) result.push_back(coloring.colors[e]);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool is_proper(const Graph& g, const EdgeColoring& coloring) {
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> seen;
    seen.reserve(g.incident[v].size());
    for (int e : g.incident[v]) seen.push_back(coloring.colors[e]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool is_edge_locating(const Graph& g, const DistanceTable& dist,
                      const std::vector<int>& colors, int k) {
  EdgeColoring coloring{k, colors};
  if (!is_proper(g, coloring)) return false;
  std::vector<std::vector<int>> codes = all_color_codes(g, dist, coloring);
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

VerificationReport verify_elc(const Graph& g, const EdgeColoring& coloring) {
  VerificationReport report;
  auto& shape = report.shape_violations;

  if (g.n < 3) shape.push_back("graph has order < 3; edge-locating colorings are undefined");
  bool connected = is_connected(g);
  if (!connected) shape.push_back("graph is disconnected; codes are undefined");

  if (coloring.k < 1) shape.push_back("color count k must be >= 1");
  if (static_cast<int>(coloring.colors.size()) != g.m()) {
    std::ostringstream os;
    os << "coloring has " << coloring.colors.size() << " entries for " << g.m()
       << " edges";
    shape.push_back(os.str());
    return report;  // nothing further is computable
  }
  bool range_ok = true;
  for (int e = 0; e < g.m(); ++e) {
    if (coloring.colors[e] < 1 || coloring.colors[e] > coloring.k) {
      std::ostringstream os;
      os << "edge " << edge_str(g, e) << " has color " << coloring.colors[e]
         << " outside 1.." << coloring.k;
      shape.push_back(os.str());
      range_ok = false;
    }
  }
  if (!range_ok) return report;
  std::vector<int> class_size(static_cast<std::size_t>(coloring.k), 0);
  for (int c : coloring.colors) ++class_size[c - 1];
  for (int c = 1; c <= coloring.k; ++c) {
    if (class_size[c - 1] == 0) {
      std::ostringstream os;
      os << "color class " << c << " is empty";
      shape.push_back(os.str());
    }
  }

  for (int v = 0; v < g.n; ++v) {
    const auto& inc = g.incident[v];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (coloring.colors[inc[i]] == coloring.colors[inc[j]]) {
          report.proper_violations.push_back({inc[i], inc[j], v});
        }
      }
    }
  }

  if (connected) {
    DistanceTable dist = all_pairs_distances(g);
    report.codes = all_color_codes(g, dist, coloring);
    std::map<std::vector<int>, std::vector<int>> by_code;
    for (int v = 0; v < g.n; ++v) by_code[report.codes[v]].push_back(v);
    for (const auto& [code, vertices] : by_code) {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
          report.code_collisions.push_back({vertices[i], vertices[j], code});
        }
      }
    }
  }

  report.passed = report.well_formed() && report.proper_violations.empty() &&
                  report.code_collisions.empty();
  return report;
}

std::vector<std::string> VerificationReport::describe(const Graph& g) const {
  std::vector<std::string> lines = shape_violations;
  for (const auto& pv : proper_violations) {
    std::ostringstream os;
    os << "edges " << edge_str(g, pv.edge_a) << " and " << edge_str(g, pv.edge_b)
       << " meet at vertex " << pv.shared_vertex << " with the same color";
    lines.push_back(os.str());
  }
  for (const auto& cc : code_collisions) {
    std::ostringstream os;
    os << "vertices " << cc.vertex_u << " and " << cc.vertex_v << " share code "
       << code_str(cc.shared_code);
    lines.push_back(os.str());
  }
  return lines;
}

EdgeColoring normalize(const EdgeColoring& coloring) {
  EdgeColoring result;
  std::map<int, int> remap;
  result.colors.reserve(coloring.colors.size());
  for (int c : coloring.colors) {
    auto [it, inserted] = remap.emplace(c, static_cast<int>(remap.size()) + 1);
    result.colors.push_back(it->second);
  }
  result.k = static_cast<int>(remap.size());
  return result;
}

}  // namespace elc
