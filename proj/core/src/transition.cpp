#include "ribbonforge/transition.hpp"

#include <algorithm>
#include <stdexcept>

#include "ribbonforge/br_poly.hpp"
#include "ribbonforge/parallel.hpp"

namespace ribbonforge {

const VarTable& transition_table() {
  static const VarTable t({"alpha", "beta", "t"});
  return t;
}

namespace {

LaurentPoly must_sqrt(const LaurentPoly& p, const char* what) {
  auto r = p.monomial_sqrt();
  if (!r) throw std::domain_error(std::string("pair weights need an exact square root of ") + what);
  return *r;
}

}  // namespace

WeightSystem medial_weights(const MedialGraph& m, const LaurentPoly& alpha, const LaurentPoly& beta) {
  if (!m.has_back_reference()) {
    throw std::invalid_argument("medial weights need a medial graph with a source back-reference");
  }
  if (alpha.table() != beta.table()) throw std::invalid_argument("alpha and beta over different tables");
  LaurentPoly sa = must_sqrt(alpha, "alpha");
  LaurentPoly sb = must_sqrt(beta, "beta");
  LaurentPoly zero = LaurentPoly::zero(alpha.table());
  std::vector<std::vector<PairingOption>> per(m.graph.vertex_count());
  for (int v = 0; v < m.graph.vertex_count(); ++v) {
    per[v] = {
        {m.pairing(v, MedialState::Uncut), sa, sa},
        {m.pairing(v, MedialState::Cut), sb, sb},
        {m.pairing(v, MedialState::Crossing), zero, zero},
    };
  }
  return WeightSystem(alpha.table(), std::move(per));
}

WeightSystem dual_weights(const WeightSystem& w) {
  WeightSystem out = w;
  for (int v = 0; v < out.vertex_count(); ++v) {
    auto& opts = out.options(v);
    if (opts.size() < 2) throw std::invalid_argument("weight system has fewer than two states at a vertex");
    std::swap(opts[0].weight_a, opts[1].weight_a);
    std::swap(opts[0].weight_b, opts[1].weight_b);
  }
  return out;
}

WeightSystem signed_weights(const MedialGraph& m, const LaurentPoly& alpha, const LaurentPoly& beta,
                            const std::map<std::string, int>& crossing_signs) {
  WeightSystem w = medial_weights(m, alpha, beta);
  for (int v = 0; v < w.vertex_count(); ++v) {
    auto it = crossing_signs.find(m.source_edge.at(v));
    if (it == crossing_signs.end()) {
      throw std::invalid_argument("missing crossing sign for source edge " + m.source_edge.at(v));
    }
    if (it->second < 0) {
      auto& opts = w.options(v);
      std::swap(opts[0].weight_a, opts[1].weight_a);
      std::swap(opts[0].weight_b, opts[1].weight_b);
    }
  }
  return w;
}

int state_components(const RibbonGraph& g4, const std::vector<Pairing>& choice) {
  UnionFind uf(g4.dart_count());
  int parts = g4.dart_count();
  for (int e = 0; e < g4.edge_count(); ++e) {
    if (uf.unite(2 * e, 2 * e + 1)) --parts;
  }
  for (const auto& p : choice) {
    if (uf.unite(p.a[0], p.a[1])) --parts;
    if (uf.unite(p.b[0], p.b[1])) --parts;
  }
  return parts;
}

LaurentPoly q_transition(const RibbonGraph& g4, int free_loops, const WeightSystem& w,
                         const std::string& tvar) {
  if (w.vertex_count() != g4.vertex_count()) {
    throw std::invalid_argument("weight system does not cover every vertex");
  }
  const VarTable& T = w.table();
  if (T.index_of(tvar) < 0) throw std::invalid_argument("unknown state variable: " + tvar);
  for (int v = 0; v < g4.vertex_count(); ++v) {
    if (g4.degree(v) != 4) throw std::invalid_argument("transition polynomial needs a 4-regular graph");
  }

  // Only nonzero-weight pairings participate in states.
  std::vector<std::vector<const PairingOption*>> live(g4.vertex_count());
  std::uint64_t total = 1;
  for (int v = 0; v < g4.vertex_count(); ++v) {
    for (const auto& opt : w.options(v)) {
      if (!(opt.weight_a * opt.weight_b).is_zero()) live[v].push_back(&opt);
    }
    total *= std::max<std::size_t>(live[v].size(), 1);
    if (live[v].empty()) total = 0;
  }
  if (total == 0) return LaurentPoly::zero(T);

  auto eval_state = [&](std::uint64_t index) {
    LaurentPoly weight = LaurentPoly::constant(T, 1);
    std::vector<Pairing> choice(g4.vertex_count());
    std::uint64_t rest = index;
    for (int v = 0; v < g4.vertex_count(); ++v) {
      const auto& opts = live[v];
      const PairingOption* opt = opts[rest % opts.size()];
      rest /= opts.size();
      choice[v] = opt->pairing;
      weight *= opt->weight_a * opt->weight_b;
    }
    int c = state_components(g4, choice) + free_loops;
    return weight * LaurentPoly::variable(T, tvar).pow(c);
  };
  return parallel_reduce<LaurentPoly>(
      total, LaurentPoly::zero(T), eval_state,
      [](LaurentPoly acc, LaurentPoly t) {
        acc += t;
        return acc;
      });
}

LaurentPoly q_transition(const MedialGraph& m, const WeightSystem& w, const std::string& tvar) {
  return q_transition(m.graph, m.free_loops, w, tvar);
}

namespace {

/// R(G; b t/a + 1, a t/b, 1/t, 1) over (alpha, beta, t), where (a, b) is
/// (alpha, beta), or (beta, alpha) when swapped.
LaurentPoly r_at_transition_point(const RibbonGraph& g, bool swapped) {
  const VarTable& T = transition_table();
  LaurentPoly a = LaurentPoly::variable(T, swapped ? "beta" : "alpha");
  LaurentPoly b = LaurentPoly::variable(T, swapped ? "alpha" : "beta");
  LaurentPoly t = LaurentPoly::variable(T, "t");
  return r_state_sum_basis(g).substitute(
      {{"x-1", b * t * a.monomial_inverse()},
       {"y", a * t * b.monomial_inverse()},
       {"z", t.monomial_inverse()},
       {"w", LaurentPoly::constant(T, 1)}},
      T);
}

/// alpha^r beta^n t^k R(G; beta t/alpha + 1, alpha t/beta, 1/t, 1).
LaurentPoly transpoly_rhs(const RibbonGraph& g) {
  const VarTable& T = transition_table();
  LaurentPoly a = LaurentPoly::variable(T, "alpha");
  LaurentPoly b = LaurentPoly::variable(T, "beta");
  LaurentPoly t = LaurentPoly::variable(T, "t");
  SubgraphStats st = g.stats();
  return a.pow(st.r) * b.pow(st.n) * t.pow(st.k) * r_at_transition_point(g, false);
}

Rational spot(const LaurentPoly& p) {
  return p.eval({{"alpha", Rational(2)}, {"beta", Rational(3)}, {"t", Rational(5)}});
}

}  // namespace

VerifyResult verify_transpoly(const RibbonGraph& g) {
  const VarTable& T = transition_table();
  MedialGraph m = medial(g);
  WeightSystem w = medial_weights(m, LaurentPoly::variable(T, "alpha"), LaurentPoly::variable(T, "beta"));
  LaurentPoly lhs = q_transition(m, w, "t");
  LaurentPoly rhs = transpoly_rhs(g);
  if (lhs != rhs) {
    return {false, "Q(G_m; W, t) != alpha^r beta^n t^k R(...) for " + g.serialize() + "\n  lhs = " +
                       lhs.text() + "\n  rhs = " + rhs.text()};
  }
  if (spot(lhs) != spot(rhs)) {
    return {false, "rational spot check disagrees for " + g.serialize()};
  }
  return {};
}

LaurentPoly circuit_partition(const RibbonGraph& g, const std::string& xvar) {
  SubgraphStats st = g.stats();
  if (st.eg != 0 || st.t != 0) throw NonPlanarInput();
  VarTable T({xvar});
  LaurentPoly one = LaurentPoly::constant(T, 1);
  MedialGraph m = medial(g);
  return q_transition(m, medial_weights(m, one, one), xvar);
}

VerifyResult verify_duality(const RibbonGraph& g) {
  const VarTable& T = transition_table();
  RibbonGraph dual_g = g.dual();
  int gamma = g.stats().eg;

  LaurentPoly a = LaurentPoly::variable(T, "alpha");
  LaurentPoly b = LaurentPoly::variable(T, "beta");
  // beta^gamma R(G*; bt/a+1, at/b, 1/t, 1) = alpha^gamma R(G; at/b+1, bt/a, 1/t, 1)
  LaurentPoly lhs = b.pow(gamma) * r_at_transition_point(dual_g, false);
  LaurentPoly rhs = a.pow(gamma) * r_at_transition_point(g, true);
  if (lhs != rhs) {
    return {false, "two-variable duality identity fails for " + g.serialize() + "\n  lhs = " + lhs.text() +
                       "\n  rhs = " + rhs.text()};
  }
  if (spot(lhs) != spot(rhs)) {
    return {false, "duality rational spot check disagrees for " + g.serialize()};
  }

  // Transition form: Q(G*_m; W, t) = Q(G_m; W*, t).
  MedialGraph m = medial(g);
  MedialGraph m_dual = medial(dual_g);
  WeightSystem w_dual_graph = medial_weights(m_dual, a, b);
  WeightSystem w_star = dual_weights(medial_weights(m, a, b));
  LaurentPoly q_lhs = q_transition(m_dual, w_dual_graph, "t");
  LaurentPoly q_rhs = q_transition(m, w_star, "t");
  if (q_lhs != q_rhs) {
    return {false, "Q(G*_m; W, t) != Q(G_m; W*, t) for " + g.serialize() + "\n  lhs = " + q_lhs.text() +
                       "\n  rhs = " + q_rhs.text()};
  }
  return {};
}

}  // namespace ribbonforge
