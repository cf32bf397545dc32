#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elc/graph.hpp"

namespace elc {

// An edge coloring of a graph: colors[e] is the color of g.edges[e], colors
// are 1-based. A coloring is well-formed for a graph when every edge has a
// color in 1..k and every color class 1..k is nonempty.
struct EdgeColoring {
  int k = 0;
  std::vector<int> colors;

  bool operator==(const EdgeColoring& other) const = default;
};

// Distance from vertex v to edge e: the smaller endpoint distance.
int vertex_edge_distance(const DistanceTable& dist, int v, std::pair<int, int> e);

// Distance between two edges: the smallest endpoint-to-endpoint distance.
int edge_edge_distance(const DistanceTable& dist, std::pair<int, int> e,
                       std::pair<int, int> f);

// The code of v: entry i is the distance from v to the nearest edge of color
// i+1 (kUnreachable when the class is empty).
std::vector<int> color_code(const Graph& g, const DistanceTable& dist,
                            const EdgeColoring& coloring, int v);

// All vertex codes as an n x k matrix.
std::vector<std::vector<int>> all_color_codes(const Graph& g, const DistanceTable& dist,
                                              const EdgeColoring& coloring);

// Set of colors appearing on edges incident to v.
std::vector<int> incident_color_set(const Graph& g, const EdgeColoring& coloring, int v);

bool is_proper(const Graph& g, const EdgeColoring& coloring);

// Fast combined check (well-formed shape assumed): proper and all codes
// distinct.
bool is_edge_locating(const Graph& g, const DistanceTable& dist,
                      const std::vector<int>& colors, int k);

// Two edges meeting at a vertex with the same color.
struct ProperViolation {
  int edge_a = 0;
  int edge_b = 0;
  int shared_vertex = 0;
  bool operator==(const ProperViolation&) const = default;
};

// Two vertices with identical codes.
struct CodeCollision {
  int vertex_u = 0;
  int vertex_v = 0;
  std::vector<int> shared_code;
  bool operator==(const CodeCollision&) const = default;
};

struct VerificationReport {
  bool passed = false;
  // Well-formedness problems (wrong length, color out of range, empty class,
  // disconnected graph, order < 3), as messages.
  std::vector<std::string> shape_violations;
  std::vector<ProperViolation> proper_violations;   // every offending pair
  std::vector<CodeCollision> code_collisions;       // every colliding pair
  std::vector<std::vector<int>> codes;              // vertex -> code, when computable

  bool well_formed() const { return shape_violations.empty(); }
  bool proper() const { return proper_violations.empty(); }
  bool locating() const { return well_formed() && code_collisions.empty(); }
  // All violations as human-readable lines.
  std::vector<std::string> describe(const Graph& g) const;
};

// Full verification with exhaustive violation reporting. A disconnected graph
// or order < 3 is reported as a shape violation, never silently accepted.
VerificationReport verify_elc(const Graph& g, const EdgeColoring& coloring);

// Renumbers colors densely to 1..k' by first occurrence along the edge list,
// dropping unused color indices. Does not change which edges share a color.
EdgeColoring normalize(const EdgeColoring& coloring);

}  // namespace elc
