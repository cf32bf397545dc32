#include "elc/serialize.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "elc/graph_io.hpp"

namespace elc {

namespace {

json optional_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n},
          {"m", g.m()},
          {"graph6", encode_graph6(g)},
          {"edges", edges}};
}

json coloring_to_json(const Graph& g, const EdgeColoring& coloring) {
  if (static_cast<int>(coloring.colors.size()) != g.m()) {
    throw std::invalid_argument(
        "coloring_to_json: coloring covers " +
        std::to_string(coloring.colors.size()) + " edges, graph has " +
        std::to_string(g.m()));
  }
  json edges = json::array();
  for (int e = 0; e < g.m(); ++e) {
    edges.push_back({g.edges[e].first, g.edges[e].second, coloring.colors[e]});
  }
  return {{"k", coloring.k}, {"edges", edges}};
}

EdgeColoring coloring_from_json(const Graph& g, const json& doc) {
  if (!doc.is_object() || !doc.contains("k") ||
      !doc["k"].is_number_integer() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw std::invalid_argument(
        "coloring document must be {\"k\": int, \"edges\": [[u, v, color], "
        "...]}");
  }
  EdgeColoring out;
  out.k = doc["k"].get<int>();
  out.colors.assign(g.m(), 0);
  std::vector<bool> seen(g.m(), false);
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_number_integer()) {
      throw std::invalid_argument(
          "coloring edge entries must be [u, v, color] integer triples");
    }
    const int u = entry[0].get<int>();
    const int v = entry[1].get<int>();
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
      throw std::invalid_argument("coloring names vertex outside 0.." +
                                  std::to_string(g.n - 1));
    }
    const std::optional<int> e = g.edge_between(u, v);
    if (!e) {
      throw std::invalid_argument("coloring names (" + std::to_string(u) +
                                  ", " + std::to_string(v) +
                                  "), which is not an edge of the graph");
    }
    if (seen[*e]) {
      throw std::invalid_argument("coloring names edge (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ") twice");
    }
    seen[*e] = true;
    out.colors[*e] = entry[2].get<int>();
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!seen[e]) {
      throw std::invalid_argument(
          "coloring is missing edge (" + std::to_string(g.edges[e].first) +
          ", " + std::to_string(g.edges[e].second) + ")");
    }
  }
  return out;
}

json report_to_json(const Graph& g, const VerificationReport& report) {
  json proper = json::array();
  for (const auto& v : report.proper_violations) {
    proper.push_back({{"edge_a", v.edge_a},
                      {"edge_b", v.edge_b},
                      {"shared_vertex", v.shared_vertex}});
  }
  json collisions = json::array();
  for (const auto& c : report.code_collisions) {
    collisions.push_back({{"vertex_u", c.vertex_u},
                          {"vertex_v", c.vertex_v},
                          {"code", c.shared_code}});
  }
  return {{"passed", report.passed},
          {"shape_violations", report.shape_violations},
          {"proper_violations", proper},
          {"code_collisions", collisions},
          {"codes", report.codes},
          {"messages", report.describe(g)}};
}

json solve_result_to_json(const Graph& g, const SolveResult& result) {
  json certificate = nullptr;
  if (result.certificate) {
    certificate = coloring_to_json(g, *result.certificate);
  }
  return {{"status", to_string(result.status)},
          {"k", optional_int(result.k)},
          {"exhausted_k", result.exhausted_k},
          {"certificate", certificate},
          {"stats",
           {{"nodes", result.stats.nodes},
            {"properness_rejections", result.stats.properness_rejections},
            {"quota_prunes", result.stats.quota_prunes},
            {"pair_prunes", result.stats.pair_prunes},
            {"leaf_checks", result.stats.leaf_checks},
            {"wall_secs", result.stats.wall_secs}}}};
}

json certified_to_json(const CertifiedColoring& certified) {
  return {{"graph", graph_to_json(certified.graph)},
          {"theorem", certified.theorem_tag},
          {"k", certified.claimed_k},
          {"coloring", coloring_to_json(certified.graph, certified.coloring)},
          {"verification",
           report_to_json(certified.graph, certified.report)}};
}

json bounds_report_to_json(const BoundsReport& report) {
  json bounds = json::array();
  for (const auto& b : report.bounds) {
    bounds.push_back({{"name", b.name},
                      {"applicable", b.applicable},
                      {"value", b.value ? json(*b.value) : json(nullptr)},
                      {"notes", b.notes}});
  }
  json census_rows = json::array();
  for (const auto& row : report.census.rows) {
    census_rows.push_back({{"degree", row.degree},
                           {"count", row.count},
                           {"required", row.required},
                           {"capacity", row.capacity},
                           {"pass", row.pass}});
  }
  json cone = {{"order", report.cone_check.order},
               {"max_degree", report.cone_check.max_degree},
               {"even_order", report.cone_check.even_order},
               {"universal_vertex",
                optional_int(report.cone_check.universal_vertex)},
               {"applicable", report.cone_check.applicable},
               {"claim", report.cone_check.claim},
               {"lower", optional_int(report.cone_check.lower)},
               {"upper", optional_int(report.cone_check.upper)},
               {"exact", optional_int(report.cone_check.exact)},
               {"holds", report.cone_check.holds
                             ? json(*report.cone_check.holds)
                             : json(nullptr)},
               {"notes", report.cone_check.notes}};
  return {{"graph6", report.graph_id},
          {"order", report.order},
          {"size", report.size},
          {"solver_status", to_string(report.solver.status)},
          {"exact", optional_int(report.exact)},
          {"bounds", bounds},
          {"diameter",
           {{"applicable", report.diameter.applicable},
            {"diameter", report.diameter.diameter},
            {"bound", optional_int(report.diameter.bound)},
            {"notes", report.diameter.notes}}},
          {"census",
           {{"applicable", report.census.applicable},
            {"k", report.census.k},
            {"diameter", report.census.diameter},
            {"all_pass", report.census.all_pass},
            {"rows", census_rows},
            {"notes", report.census.notes}}},
          {"sandwich",
           {{"chromatic_index", optional_int(report.sandwich.chromatic_index)},
            {"dim_edges_resolve_edges",
             optional_int(report.sandwich.dim_edges_resolve_edges)},
            {"dim_edges_resolve_vertices",
             optional_int(report.sandwich.dim_edges_resolve_vertices)},
            {"upper_edges_resolve_edges",
             optional_int(report.sandwich.upper_edges_resolve_edges)},
            {"upper_edges_resolve_vertices",
             optional_int(report.sandwich.upper_edges_resolve_vertices)},
            {"notes", report.sandwich.notes}}},
          {"cone_check", cone},
          {"flags", report.flags}};
}

std::string bounds_csv_header() {
  return "graph6,order,size,exact,solver_lower,diameter_bound,census,"
         "matching_upper,chromatic_index,sandwich_edges,sandwich_vertices,"
         "cone_claim,flags";
}

std::string bounds_csv_row(const BoundsReport& report) {
  const auto find = [&](const std::string& name) -> std::string {
    for (const auto& b : report.bounds) {
      if (b.name == name) {
        return b.applicable && b.value ? std::to_string(*b.value) : "";
      }
    }
    return "";
  };
  std::vector<std::string> fields;
  fields.push_back(csv_escape(report.graph_id));
  fields.push_back(std::to_string(report.order));
  fields.push_back(std::to_string(report.size));
  fields.push_back(report.exact ? std::to_string(*report.exact) : "");
  fields.push_back(find("solver_lower_bound"));
  fields.push_back(find("diameter_lower_bound"));
  fields.push_back(report.census.applicable
                       ? (report.census.all_pass ? "pass" : "fail")
                       : "");
  fields.push_back(find("matching_upper_bound"));
  fields.push_back(find("chromatic_index_lower_bound"));
  fields.push_back(find("sandwich_upper_edges_resolve_edges"));
  fields.push_back(find("sandwich_upper_edges_resolve_vertices"));
  fields.push_back(csv_escape(
      report.cone_check.applicable ? report.cone_check.claim : ""));
  std::string flags;
  for (const auto& f : report.flags) {
    if (!flags.empty()) flags += "; ";
    flags += f;
  }
  fields.push_back(csv_escape(flags));
  std::string row;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += fields[i];
  }
  return row;
}

}  // namespace elc
