#include <doctest.h>

#include "ribbonforge/br_poly.hpp"
#include "ribbonforge/corpus.hpp"
#include "ribbonforge/transition.hpp"
#include "test_util.hpp"

using namespace ribbonforge;
using namespace rftest;

namespace {

const VarTable& T() { return transition_table(); }
LaurentPoly av() { return LaurentPoly::variable(T(), "alpha"); }
LaurentPoly bv() { return LaurentPoly::variable(T(), "beta"); }

}  // namespace

TEST_CASE("medial weight system") {
  MedialGraph m = medial(loop_graph(1));
  WeightSystem w = medial_weights(m, av(), bv());
  REQUIRE(w.vertex_count() == 1);
  const auto& opts = w.options(0);
  REQUIRE(opts.size() == 3);
  CHECK(opts[0].weight_a * opts[0].weight_b == av());
  CHECK(opts[1].weight_a * opts[1].weight_b == bv());
  CHECK((opts[2].weight_a * opts[2].weight_b).is_zero());

  // alpha = beta = 1 makes every admissible pairing weight 1
  WeightSystem w1 = medial_weights(m, LaurentPoly::constant(T(), 1), LaurentPoly::constant(T(), 1));
  CHECK(w1.options(0)[0].weight_a * w1.options(0)[0].weight_b == LaurentPoly::constant(T(), 1));

  MedialGraph unsourced;
  unsourced.graph = m.graph;
  CHECK_THROWS_AS(medial_weights(unsourced, av(), bv()), std::invalid_argument);
}

TEST_CASE("dual and signed weight systems") {
  MedialGraph m = medial(moebius_digon());
  WeightSystem w = medial_weights(m, av(), bv());
  WeightSystem ww = dual_weights(dual_weights(w));
  for (int v = 0; v < w.vertex_count(); ++v) {
    for (int i = 0; i < 3; ++i) {
      CHECK(ww.options(v)[i].weight_a == w.options(v)[i].weight_a);
    }
  }
  CHECK(dual_weights(w).options(0)[0].weight_a * dual_weights(w).options(0)[0].weight_b == bv());

  // all-positive crossing signs reproduce the medial weights
  std::map<std::string, int> pos = {{"e0", 1}, {"e1", 1}};
  WeightSystem ws = signed_weights(m, av(), bv(), pos);
  for (int v = 0; v < 2; ++v) CHECK(ws.options(v)[0].weight_a == w.options(v)[0].weight_a);

  // a negative crossing sign swaps the roles at that vertex only
  std::map<std::string, int> mixed = {{"e0", 1}, {"e1", -1}};
  WeightSystem wm = signed_weights(m, av(), bv(), mixed);
  CHECK(wm.options(0)[0].weight_a * wm.options(0)[0].weight_b == av());
  CHECK(wm.options(1)[0].weight_a * wm.options(1)[0].weight_b == bv());

  std::map<std::string, int> missing = {{"e0", 1}};
  CHECK_THROWS_AS(signed_weights(m, av(), bv(), missing), std::invalid_argument);
}

TEST_CASE("transition polynomial state sums") {
  // a single free loop contributes exactly t
  MedialGraph free_loop = medial(isolated_vertex());
  WeightSystem empty_w(T(), {});
  CHECK(q_transition(free_loop, empty_w, "t") == LaurentPoly::variable(T(), "t"));

  // medial of the plane loop: alpha t^2 + beta t
  MedialGraph m = medial(loop_graph(1));
  LaurentPoly q = q_transition(m, medial_weights(m, av(), bv()), "t");
  LaurentPoly t = LaurentPoly::variable(T(), "t");
  CHECK(q == av() * t * t + bv() * t);
}

TEST_CASE("alpha = beta = 1 counts boundary components of spanning subgraphs") {
  VarTable xt({"x"});
  LaurentPoly one = LaurentPoly::constant(xt, 1);
  for (const auto& g : exhaustive_corpus(2)) {
    MedialGraph m = medial(g);
    LaurentPoly q = q_transition(m, medial_weights(m, one, one), "x");
    LaurentPoly expect = LaurentPoly::zero(xt);
    for (std::uint64_t mask = 0; mask < (1ULL << g.edge_count()); ++mask) {
      expect += LaurentPoly::variable(xt, "x").pow(g.stats(mask).bc);
    }
    CHECK(q == expect);
  }
}

TEST_CASE("medial identity on small graphs") {
  CHECK(verify_transpoly(isolated_vertex()).ok);
  CHECK(verify_transpoly(loop_graph(1)).ok);
  CHECK(verify_transpoly(loop_graph(-1)).ok);
  CHECK(verify_transpoly(moebius_digon()).ok);
  CHECK(verify_transpoly(plane_triangle()).ok);
}

TEST_CASE("duality identity on small graphs") {
  CHECK(verify_duality(isolated_vertex()).ok);
  CHECK(verify_duality(plane_triangle()).ok);   // against the 3-dipole
  CHECK(verify_duality(loop_graph(-1)).ok);     // Euler genus 1
  CHECK(verify_duality(moebius_digon()).ok);
}

TEST_CASE("dual weights match the medial of the dual graph") {
  for (const auto& g : exhaustive_corpus(2)) {
    MedialGraph m = medial(g);
    MedialGraph md = medial(g.dual());
    LaurentPoly lhs = q_transition(md, medial_weights(md, av(), bv()), "t");
    LaurentPoly rhs = q_transition(m, dual_weights(medial_weights(m, av(), bv())), "t");
    CHECK(lhs == rhs);
  }
}

TEST_CASE("circuit partition polynomial") {
  VarTable xt({"x"});
  CHECK(circuit_partition(isolated_vertex()) == LaurentPoly::variable(xt, "x"));
  CHECK(circuit_partition(loop_graph(1)) == parse_poly(xt, "x^2 + x"));
  CHECK_THROWS_AS(circuit_partition(loop_graph(-1)), NonPlanarInput);

  // j(G_m; x) = x^k T(G; x+1, x+1) on plane graphs
  for (const auto& g : exhaustive_corpus(3)) {
    auto st = g.stats();
    if (st.eg != 0 || st.t != 0) continue;
    LaurentPoly j = circuit_partition(g);
    LaurentPoly x = LaurentPoly::variable(xt, "x");
    LaurentPoly xp1 = x + LaurentPoly::constant(xt, 1);
    LaurentPoly expect = x.pow(st.k) * classical_tutte(g).substitute({{"x", xp1}, {"y", xp1}}, xt);
    CHECK(j == expect);
  }
}

TEST_CASE("identities on disconnected graphs and isolated vertices") {
  RibbonGraph neg_loop = loop_graph(-1);
  RibbonGraph mixed = neg_loop.disjoint_union(plane_triangle()).disjoint_union(isolated_vertex());
  CHECK(mixed.stats().k == 3);
  CHECK(verify_transpoly(mixed).ok);
  CHECK(verify_duality(mixed).ok);  // gamma sums Euler genus over components

  RibbonGraph two = moebius_digon().disjoint_union(loop_graph(1));
  CHECK(verify_transpoly(two).ok);
  CHECK(verify_duality(two).ok);
  CHECK(r_state_sum(two) == r_delcon(two));
  CHECK(r_state_sum(mixed) == r_delcon(mixed));
}

TEST_CASE("state count and degree bounds") {
  for (const auto& g : exhaustive_corpus(2)) {
    if (g.edge_count() == 0) continue;
    MedialGraph m = medial(g);
    LaurentPoly q = q_transition(m, medial_weights(m, av(), bv()), "t");
    CHECK(q.max_exp_half("t") <= 2 * (m.graph.vertex_count() + m.free_loops + 1));
    for (const auto& [e, c] : q.terms()) {
      CHECK(e[0] + e[1] == 2 * m.graph.vertex_count());  // alpha-deg + beta-deg
    }
  }
}
