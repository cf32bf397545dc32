#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "elc/bounds.hpp"
#include "elc/constructions.hpp"
#include "elc/families.hpp"
#include "elc/graph.hpp"
#include "elc/graph_io.hpp"
#include "elc/serialize.hpp"
#include "elc/solver.hpp"

using elc::EdgeColoring;
using elc::Graph;
using elc::json;

namespace {

Graph family(const std::string& spec) { return elc::family_graph(elc::parse_family(spec)); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("graphs serialize with their compact id and positional edges") {
  const Graph p4 = family("path:4");
  const json doc = elc::graph_to_json(p4);
  CHECK(doc["n"] == 4);
  CHECK(doc["m"] == 3);
  CHECK(doc["graph6"] == elc::encode_graph6(p4));
  CHECK(elc::parse_graph6(doc["graph6"].get<std::string>()) == p4);
  REQUIRE(doc["edges"].size() == 3);
  CHECK(doc["edges"][0] == json({0, 1}));
  CHECK(doc["edges"][2] == json({2, 3}));
}

TEST_CASE("colorings round-trip through their JSON form") {
  const Graph c5 = family("cycle:5");
  const EdgeColoring coloring = *elc::elc_number(c5, {}).certificate;
  const json doc = elc::coloring_to_json(c5, coloring);
  CHECK(doc["k"] == coloring.k);
  REQUIRE(doc["edges"].size() == 5);
  CHECK(elc::coloring_from_json(c5, doc) == coloring);
}

TEST_CASE("coloring documents are matched by endpoints, not edge order") {
  const Graph p4 = family("path:4");
  // Edges listed backwards with swapped endpoints still land on the right
  // positions.
  const json doc = {{"k", 3},
                    {"edges", {{3, 2, 3}, {2, 1, 2}, {1, 0, 1}}}};
  const EdgeColoring coloring = elc::coloring_from_json(p4, doc);
  CHECK(coloring.colors == std::vector<int>{1, 2, 3});
}

TEST_CASE("malformed coloring documents are rejected with pointed messages") {
  const Graph p4 = family("path:4");

  CHECK_THROWS_AS(elc::coloring_from_json(p4, json::array()), std::invalid_argument);
  CHECK_THROWS_AS(elc::coloring_from_json(p4, json{{"edges", json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(elc::coloring_from_json(p4, json{{"k", 3}}), std::invalid_argument);

  const json bad_entry = {{"k", 3}, {"edges", {{0, 1}}}};
  CHECK_THROWS_AS(elc::coloring_from_json(p4, bad_entry), std::invalid_argument);

  const json out_of_range = {{"k", 3}, {"edges", {{0, 9, 1}, {1, 2, 2}, {2, 3, 3}}}};
  CHECK_THROWS_AS(elc::coloring_from_json(p4, out_of_range), std::invalid_argument);

  const json non_edge = {{"k", 3}, {"edges", {{0, 2, 1}, {1, 2, 2}, {2, 3, 3}}}};
  CHECK_THROWS_WITH_AS(elc::coloring_from_json(p4, non_edge),
                       doctest::Contains("not an edge"), std::invalid_argument);

  const json duplicate = {{"k", 3}, {"edges", {{0, 1, 1}, {1, 0, 2}, {2, 3, 3}}}};
  CHECK_THROWS_WITH_AS(elc::coloring_from_json(p4, duplicate),
                       doctest::Contains("twice"), std::invalid_argument);

  const json missing = {{"k", 3}, {"edges", {{0, 1, 1}, {1, 2, 2}}}};
  CHECK_THROWS_WITH_AS(elc::coloring_from_json(p4, missing),
                       doctest::Contains("missing edge"), std::invalid_argument);

  EdgeColoring short_coloring{2, {1, 2}};
  CHECK_THROWS_AS(elc::coloring_to_json(p4, short_coloring), std::invalid_argument);
}

TEST_CASE("verification reports serialize violations and messages") {
  const Graph g = family("complete_bipartite:3,2");
  json doc = {{"k", 4},
              {"edges",
               {{0, 3, 1}, {0, 4, 4}, {1, 3, 2}, {1, 4, 1}, {2, 3, 3}, {2, 4, 1}}}};
  const EdgeColoring tampered = elc::coloring_from_json(g, doc);
  const json report = elc::report_to_json(g, elc::verify_elc(g, tampered));
  CHECK(report["passed"] == false);
  CHECK(report["proper_violations"].size() == 1);
  CHECK(report["proper_violations"][0]["shared_vertex"] == 4);
  CHECK_FALSE(report["code_collisions"].empty());
  CHECK_FALSE(report["messages"].empty());

  doc["edges"][5][2] = 2;  // restore the correct color
  const json clean = elc::report_to_json(g, elc::verify_elc(g, elc::coloring_from_json(g, doc)));
  CHECK(clean["passed"] == true);
  CHECK(clean["codes"].size() == 5);
  CHECK(clean["messages"].empty());
}

TEST_CASE("solver results serialize status, bounds, certificate, and stats") {
  const Graph c6 = family("cycle:6");
  const json doc = elc::solve_result_to_json(c6, elc::elc_number(c6, {}));
  CHECK(doc["status"] == "optimal");
  CHECK(doc["k"] == 4);
  CHECK(doc["exhausted_k"] == 3);
  CHECK(doc["certificate"]["k"] == 4);
  CHECK(doc["certificate"]["edges"].size() == 6);
  CHECK(doc["stats"]["nodes"].get<long>() >= 0);

  elc::SolveOptions tiny;
  tiny.node_budget = 10;
  const json capped = elc::solve_result_to_json(family("complete:8"),
                                                elc::elc_number(family("complete:8"), tiny));
  CHECK(capped["status"] == "budget_exhausted");
}

TEST_CASE("certified colorings serialize the graph, tag, and verification") {
  const json doc = elc::certified_to_json(elc::construct_coloring(elc::parse_family("book:2")));
  CHECK(doc["theorem"] == "book");
  CHECK(doc["k"] == 6);
  CHECK(doc["graph"]["n"] == 6);
  CHECK(doc["coloring"]["k"] == 6);
  CHECK(doc["verification"]["passed"] == true);
}

TEST_CASE("bounds reports serialize every section") {
  const elc::BoundsReport report = elc::bounds_report(family("cycle:6"));
  const json doc = elc::bounds_report_to_json(report);
  CHECK(doc["graph6"] == elc::encode_graph6(family("cycle:6")));
  CHECK(doc["order"] == 6);
  CHECK(doc["size"] == 6);
  CHECK(doc["solver_status"] == "optimal");
  CHECK(doc["exact"] == 4);
  CHECK(doc["flags"].empty());
  CHECK(doc["census"]["all_pass"] == true);
  CHECK(doc["cone_check"]["applicable"] == true);
  CHECK(doc["cone_check"]["holds"] == true);
  bool saw_chromatic = false;
  for (const auto& b : doc["bounds"]) {
    if (b["name"] == "chromatic_index_lower_bound") saw_chromatic = true;
  }
  CHECK(saw_chromatic);
}

TEST_CASE("the bounds regression table has a fixed column layout") {
  const std::string header = elc::bounds_csv_header();
  CHECK(split_csv_line(header).size() == 13);
  CHECK(header.rfind("graph6,order,size,exact,", 0) == 0);

  const elc::BoundsReport report = elc::bounds_report(family("cycle:6"));
  const std::vector<std::string> fields = split_csv_line(elc::bounds_csv_row(report));
  REQUIRE(fields.size() == 13);
  CHECK(fields[0] == elc::encode_graph6(family("cycle:6")));
  CHECK(fields[1] == "6");
  CHECK(fields[2] == "6");
  CHECK(fields[3] == "4");
  CHECK(fields[6] == "pass");
  CHECK(fields[12].empty());  // no flags
}

TEST_CASE("csv fields with commas or quotes are escaped") {
  elc::BoundsReport report;
  report.graph_id = "odd,\"id\"";
  report.order = 3;
  report.size = 2;
  const std::string row = elc::bounds_csv_row(report);
  CHECK(row.rfind("\"odd,\"\"id\"\"\",3,2,", 0) == 0);
}
