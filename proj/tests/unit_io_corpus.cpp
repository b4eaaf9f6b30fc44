#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "ribbonforge/br_poly.hpp"
#include "ribbonforge/corpus.hpp"
#include "ribbonforge/io.hpp"
#include "test_util.hpp"

using namespace ribbonforge;
using namespace rftest;
using nlohmann::json;

TEST_CASE("graph json round trip") {
  for (const auto& g : exhaustive_corpus(2)) {
    json doc = io::graph_to_json(g);
    RibbonGraph back = io::graph_from_json(doc);
    CHECK(back.serialize() == g.serialize());
    CHECK(io::graph_to_json(back).dump() == doc.dump());  // stable serialization
  }
}

TEST_CASE("graph json diagnostics") {
  json doc = {
      {"vertices", {{{"id", "u"}, {"rotation", {"e.0"}}}}},
      {"edges", {{{"id", "e"}, {"halves", {"e.0", "e.1"}}, {"sign", 1}}}},
  };
  CHECK_THROWS_WITH_AS(io::graph_from_json(doc),
                       doctest::Contains("orphan half-edge"), std::invalid_argument);

  json dup = {
      {"vertices", {{{"id", "u"}, {"rotation", {"e.0", "e.0", "e.1"}}}}},
      {"edges", {{{"id", "e"}, {"halves", {"e.0", "e.1"}}, {"sign", 1}}}},
  };
  CHECK_THROWS_WITH_AS(io::graph_from_json(dup),
                       doctest::Contains("duplicated half-edge"), std::invalid_argument);
}

TEST_CASE("universe json round trip") {
  for (const auto& u : exhaustive_universes(2)) {
    json doc = io::universe_to_json(u);
    LinkUniverse back = io::universe_from_json(doc);
    CHECK(kauffman_bracket(back) == kauffman_bracket(u));
    CHECK(io::universe_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("exhaustive corpus contents") {
  auto corpus = exhaustive_corpus(1);
  // the edgeless vertex, both loops, and both bridges
  CHECK(corpus.size() == 5);
  int loops = 0, bridges = 0, edgeless = 0;
  for (const auto& g : corpus) {
    if (g.edge_count() == 0) ++edgeless;
    else if (g.is_loop(0)) ++loops;
    else ++bridges;
    CHECK(g.connected());
  }
  CHECK(edgeless == 1);
  CHECK(loops == 2);
  CHECK(bridges == 2);

  CHECK_THROWS_AS(exhaustive_corpus(8), std::invalid_argument);

  // no two corpus entries are isomorphic as labeled signed maps
  std::set<std::string> codes;
  for (const auto& g : exhaustive_corpus(2)) {
    CHECK(codes.insert(g.canonical_code()).second);
  }
}

TEST_CASE("random corpus is seed deterministic") {
  auto a = random_corpus(7, 42, 10);
  auto b = random_corpus(7, 42, 10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].serialize() == b[i].serialize());
    CHECK(a[i].connected());
  }
  auto c = random_corpus(7, 43, 10);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].serialize() != c[i].serialize()) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("poly json is canonical") {
  const VarTable& T = r_table();
  LaurentPoly p = parse_poly(T, "y^2*z^2 + 2*y + 1");
  json doc = io::poly_to_json(p);
  CHECK(doc["text"] == "y^2*z^2 + 2*y + 1");
  CHECK(doc["terms"].size() == 3);
  CHECK(doc["terms"][0]["exponents"][1] == "2");
}
