#include <doctest.h>

#include "odkit/render.hpp"

using namespace odkit;

namespace {
const SievedRange& sieve() {
  static const SievedRange s(1000);
  return s;
}
}  // namespace

TEST_CASE("DOT output") {
  CHECK(to_dot(gk_of(parse_group_expr("Ab(5,[4])"), sieve())) == "graph GK {\n  \"5\";\n}\n");
  CHECK(to_dot(gk_alt(5, sieve())) == "graph GK {\n  \"2\";\n  \"3\";\n  \"5\";\n}\n");
  CHECK(to_dot(gk_sym(5, sieve())) == "graph GK {\n  \"2\";\n  \"3\";\n  \"5\";\n  \"2\" -- \"3\";\n}\n");
  CHECK(to_dot(gk_of(parse_group_expr("Alt(624) x Ab(5,[4])"), sieve())) == to_dot(gk_alt(625, sieve())));
}

TEST_CASE("text output") {
  CHECK(pattern_text(degree_pattern(gk_alt(10, sieve()))) == "2:2 3:3 5:2 7:1");
  CHECK(pattern_text(degree_pattern(gk_alt(3, sieve()))) == "3:0");
  CHECK(graph_text(gk_alt(10, sieve())) == "vertices: 2 3 5 7\nedges: 2-3 2-5 3-5 3-7\n");
}

TEST_CASE("JSON round trips are fixpoints") {
  const auto g = gk_alt(40, sieve());
  const Json gj = to_json(g);
  CHECK(graph_from_json(gj) == g);
  CHECK(to_json(graph_from_json(Json::parse(gj.dump()))) == gj);

  const auto d = degree_pattern(g);
  CHECK(to_json(pattern_from_json(Json::parse(to_json(d).dump()))) == to_json(d));

  const auto o = order_of(GroupExpr::alt(625), sieve());
  CHECK(order_from_json(Json::parse(to_json(o).dump())) == o);

  for (const auto& w : search_candidates(10))
    CHECK(to_json(candidate_from_json(Json::parse(to_json(w).dump()))) == to_json(w));

  const auto r = verify_main_theorem(4, sieve());
  const Json rj = to_json(r);
  CHECK(to_json(report_from_json(Json::parse(rj.dump()))) == rj);
}

TEST_CASE("report JSON fields") {
  const Json j = to_json(verify_main_theorem(4, sieve()));
  CHECK(j.at("alpha") == 4);
  CHECK(j.at("p") == 619);
  CHECK(j.at("graph_identity") == true);
  CHECK(j.at("graph_identity_certificate") == "edge_sets");
  CHECK(j.at("od_class_size_lower_bound") == 6);
  CHECK(j.at("pass") == true);
  CHECK(j.at("part3").at("evidence").size() == 2);
  CHECK(j.at("part1").at("evidence").at(0).at("first_difference").is_null());
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(pattern_from_json(Json{{"primes", {2, 3}}, {"degrees", {1}}}));
  CHECK_THROWS(graph_from_json(Json{{"vertices", {2, 3}}, {"edges", {{2, 5}}}}));
  CHECK_THROWS(order_from_json(Json{{"factors", {{{"prime", 4}, {"exponent", 1}}}}}));
}
