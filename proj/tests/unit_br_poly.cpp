#include <doctest.h>

#include <random>

#include "ribbonforge/br_poly.hpp"
#include "ribbonforge/corpus.hpp"
#include "test_util.hpp"

using namespace ribbonforge;
using namespace rftest;

namespace {

LaurentPoly parse_r(const std::string& s) { return parse_poly(r_table(), s); }

}  // namespace

TEST_CASE("state sum on the small canonical graphs") {
  CHECK(r_state_sum(loop_graph(1)) == parse_r("1 + y"));
  CHECK(r_state_sum(loop_graph(-1)) == parse_r("1 + y*z*w"));
  CHECK(r_state_sum(moebius_digon()) == parse_r("x + 1 + y*z*w"));
  CHECK(r_state_sum(isolated_vertex()) == parse_r("1"));
}

TEST_CASE("deletion-contraction agrees with the state sum") {
  CHECK(r_delcon(bridge_graph(1)) == parse_r("x"));
  CHECK(r_delcon(bridge_graph(-1)) == parse_r("x"));
  CHECK(r_delcon(moebius_digon()) == parse_r("x + 1 + y*z*w"));
  CHECK(r_delcon(plane_triangle()) == r_state_sum(plane_triangle()));

  for (const auto& g : exhaustive_corpus(3)) {
    CHECK(r_state_sum(g) == r_delcon(g));
  }
  std::mt19937_64 rng;
  for (const auto& g : random_corpus(6, 99, 25)) {
    CHECK(r_state_sum(g) == r_delcon(g));
  }
}

TEST_CASE("bouquet evaluation") {
  CHECK(bouquet_eval(ChordDiagram({}, {})) == parse_r("1"));
  CHECK(bouquet_eval(ChordDiagram({0, 1, 0, 1}, {1, 1})) == parse_r("y^2*z^2 + 2*y + 1"));
  // aabb with signs (+,-) is the join of the two small loops
  CHECK(bouquet_eval(ChordDiagram({0, 0, 1, 1}, {1, -1})) == parse_r("1 + y") * parse_r("1 + y*z*w"));
}

TEST_CASE("multiplicativity on disjoint unions and one-point joins") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    ChordDiagram a = random_diagram(rng, 3), b = random_diagram(rng, 3);
    RibbonGraph ga = a.to_bouquet(), gb = b.to_bouquet();
    CHECK(r_state_sum(ga.disjoint_union(gb)) == r_state_sum(ga) * r_state_sum(gb));
    CHECK(r_state_sum(ga.one_point_join(gb, 0, 0)) == r_state_sum(ga) * r_state_sum(gb));
  }
}

TEST_CASE("canonical forms from invariants") {
  CanonicalForm f = canonical_form(ChordDiagram({0, 1, 0, 1}, {1, 1}));
  CHECK(f.i == 2);
  CHECK(f.j == 1);
  CHECK(f.k == 0);

  f = canonical_form(ChordDiagram({0, 0}, {-1}));
  CHECK(f.i == 1);
  CHECK(f.j == 0);
  CHECK(f.k == 1);

  // abab with two negative chords fattens to a projective plane (bc = 2,
  // Euler genus 1), so the invariant classification gives (2, 0, 1).
  f = canonical_form(ChordDiagram({0, 1, 0, 1}, {-1, -1}));
  CHECK(f.i == 2);
  CHECK(f.j == 0);
  CHECK(f.k == 1);
}

TEST_CASE("product formula on canonical diagrams") {
  for (int i = 0; i <= 5; ++i) {
    for (int k = 0; k <= 2; ++k) {
      for (int j = 0; 2 * j + k <= i; ++j) {
        CanonicalForm f{i, j, k};
        CHECK(bouquet_eval(canonical_diagram(f)) == canonical_product(f));
      }
    }
  }
}

TEST_CASE("w-degree vanishes exactly on orientable graphs") {
  for (const auto& g : exhaustive_corpus(2)) {
    LaurentPoly r = r_state_sum(g);
    bool any_w = r.max_exp_half("w") > 0;
    bool any_nonorientable_state = false;
    for (std::uint64_t mask = 0; mask < (1ULL << g.edge_count()); ++mask) {
      auto st = g.stats(mask);
      if (st.t == 1) any_nonorientable_state = true;
      if (st.t == 0) CHECK(st.eg % 2 == 0);
    }
    CHECK(any_w == any_nonorientable_state);
  }
}

TEST_CASE("recipe theorem: identity spec reproduces the polynomial") {
  RecipeSpec id = identity_recipe_spec();
  for (const auto& g : exhaustive_corpus(2)) {
    CHECK(recipe_evaluate(g, id) == r_state_sum(g));
  }
}

TEST_CASE("recipe theorem: oriented three-variable spec") {
  RecipeSpec c = c_polynomial_recipe_spec();
  LaurentPoly half_z = LaurentPoly::variable(r_table(), "z", 1);
  for (const auto& g : random_corpus(5, 123, 15, /*all_positive=*/true)) {
    LaurentPoly direct = r_state_sum(g).substitute({{"z", half_z}});
    CHECK(recipe_evaluate(g, c) == direct);
  }
}

TEST_CASE("recipe relation violations are reported") {
  RecipeSpec bad = identity_recipe_spec();
  bad.v = LaurentPoly::constant(r_table(), 2);  // 2 != 4
  CHECK_THROWS_AS(recipe_evaluate(loop_graph(), bad), RelationViolated);

  RecipeSpec bad2 = identity_recipe_spec();
  bad2.s = bad2.s + LaurentPoly::constant(r_table(), 1);
  CHECK_THROWS_AS(recipe_evaluate(loop_graph(), bad2), RelationViolated);

  RecipeSpec bad3 = identity_recipe_spec();
  bad3.alpha = bad3.q;  // 1 + y is not invertible
  CHECK_THROWS_AS(recipe_evaluate(loop_graph(), bad3), NonInvertibleAlpha);
}

TEST_CASE("classical Tutte polynomial") {
  CHECK(classical_tutte(bridge_graph()) == parse_poly(tutte_table(), "x"));
  CHECK(classical_tutte(loop_graph()) == parse_poly(tutte_table(), "y"));
  CHECK(classical_tutte(plane_triangle()) == parse_poly(tutte_table(), "x^2 + x + y"));
}

TEST_CASE("classical Tutte is independent of the embedding") {
  // all rotation systems and signs of the theta graph (two vertices, three
  // parallel edges) give the same Tutte polynomial
  LaurentPoly expect;
  bool first = true;
  std::vector<std::vector<int>> perms = {{1, 3, 5}, {1, 5, 3}, {3, 1, 5}, {3, 5, 1}, {5, 1, 3}, {5, 3, 1}};
  for (const auto& p : perms) {
    for (int smask = 0; smask < 8; ++smask) {
      std::vector<int> signs = {(smask & 1) ? -1 : 1, (smask & 2) ? -1 : 1, (smask & 4) ? -1 : 1};
      RibbonGraph g = RibbonGraph::from_rotation_system({{0, 2, 4}, p}, signs);
      LaurentPoly t = classical_tutte(g);
      if (first) {
        expect = t;
        first = false;
      } else {
        CHECK(t == expect);
      }
    }
  }
}
