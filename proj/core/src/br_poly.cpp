#include "ribbonforge/br_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ribbonforge/parallel.hpp"

namespace ribbonforge {

const VarTable& r_table() {
  static const VarTable t({"x", "y", "z", "w"}, {"w"});
  return t;
}

const VarTable& r_basis_table() {
  static const VarTable t({"x-1", "y", "z", "w"}, {"w"});
  return t;
}

const VarTable& tutte_table() {
  static const VarTable t({"x", "y"});
  return t;
}

LaurentPoly r_state_sum_basis(const RibbonGraph& g) {
  const VarTable& T = r_basis_table();
  const int m = g.edge_count();
  if (m > 62) throw std::invalid_argument("subset state sums support at most 62 edges");
  const int rG = g.stats().r;
  const std::uint64_t total = 1ULL << m;
  auto term = [&](std::uint64_t mask) {
    SubgraphStats st = g.stats(mask);
    ExpVec e(4, 0);
    e[0] = 2 * (rG - st.r);
    e[1] = 2 * st.n;
    e[2] = 2 * st.eg;
    e[3] = 2 * st.t;
    return LaurentPoly::monomial(T, Rational(1), e);
  };
  return parallel_reduce<LaurentPoly>(
      total, LaurentPoly::zero(T), term,
      [](LaurentPoly acc, LaurentPoly t) {
        acc += t;
        return acc;
      });
}

LaurentPoly r_state_sum(const RibbonGraph& g) {
  const VarTable& T = r_table();
  LaurentPoly xm1 = LaurentPoly::variable(T, "x") - LaurentPoly::constant(T, 1);
  return r_state_sum_basis(g).substitute(
      {{"x-1", xm1},
       {"y", LaurentPoly::variable(T, "y")},
       {"z", LaurentPoly::variable(T, "z")},
       {"w", LaurentPoly::variable(T, "w")}},
      T);
}

LaurentPoly bouquet_eval(const ChordDiagram& d) {
  const VarTable& T = r_table();
  const int m = d.chord_count();
  if (m > 62) throw std::invalid_argument("subdiagram state sums support at most 62 chords");
  LaurentPoly acc = LaurentPoly::zero(T);
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    ChordDiagram sub = d.subdiagram(mask);
    SubgraphStats st = sub.to_bouquet().stats();
    ExpVec e(4, 0);
    e[1] = 2 * st.n;
    e[2] = 2 * (1 - st.bc + st.n);
    e[3] = 2 * st.t;
    acc.add_term(e, Rational(1));
  }
  return acc;
}

namespace {

LaurentPoly delcon_rec(const RibbonGraph& g, std::map<std::string, LaurentPoly>& memo) {
  std::string key = g.serialize();
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  const VarTable& T = r_table();
  int pivot_ordinary = -1, pivot_bridge = -1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    if (g.is_bridge(e)) {
      if (pivot_bridge < 0 || g.edge(e).id < g.edge(pivot_bridge).id) pivot_bridge = e;
    } else {
      if (pivot_ordinary < 0 || g.edge(e).id < g.edge(pivot_ordinary).id) pivot_ordinary = e;
    }
  }
  LaurentPoly out(T);
  if (pivot_ordinary >= 0) {
    out = delcon_rec(g.contracted(pivot_ordinary), memo) + delcon_rec(g.deleted(pivot_ordinary), memo);
  } else if (pivot_bridge >= 0) {
    out = LaurentPoly::variable(T, "x") * delcon_rec(g.contracted(pivot_bridge), memo);
  } else {
    // Every edge is a loop: a disjoint union of embedded bouquets, where
    // the polynomial is multiplicative.
    out = LaurentPoly::constant(T, 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.rotation(v).empty()) continue;
      std::vector<int> word;
      std::map<int, int> chord_of_edge;
      std::vector<int> signs;
      std::vector<std::string> ids;
      for (int dart : g.rotation(v)) {
        int e = RibbonGraph::edge_of_dart(dart);
        auto it = chord_of_edge.find(e);
        if (it == chord_of_edge.end()) {
          it = chord_of_edge.emplace(e, static_cast<int>(signs.size())).first;
          signs.push_back(g.edge(e).sign);
          ids.push_back(g.edge(e).id);
        }
        word.push_back(it->second);
      }
      out *= bouquet_eval(ChordDiagram(std::move(word), std::move(signs), std::move(ids)));
    }
  }
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

LaurentPoly r_delcon(const RibbonGraph& g) {
  std::map<std::string, LaurentPoly> memo;
  return delcon_rec(g, memo);
}

CanonicalForm canonical_form(const ChordDiagram& d) {
  SubgraphStats st = d.to_bouquet().stats();
  CanonicalForm f;
  f.i = d.chord_count();
  int genus = st.eg;
  if (st.t == 0) {
    if (genus % 2 != 0) throw std::logic_error("orientable diagram with odd Euler genus");
    f.j = genus / 2;
    f.k = 0;
  } else {
    f.k = (genus % 2 != 0) ? 1 : 2;
    f.j = (genus - f.k) / 2;
  }
  if (f.i - 2 * f.j - f.k < 0) throw std::logic_error("canonical form with negative isolated-chord count");
  return f;
}

ChordDiagram canonical_diagram(const CanonicalForm& f) {
  int iso = f.i - 2 * f.j - f.k;
  if (iso < 0 || f.k < 0 || f.k > 2 || f.j < 0) throw std::invalid_argument("invalid canonical form");
  std::vector<int> word;
  std::vector<int> signs;
  for (int c = 0; c < iso; ++c) {
    int idx = static_cast<int>(signs.size());
    word.push_back(idx);
    word.push_back(idx);
    signs.push_back(1);
  }
  for (int p = 0; p < f.j; ++p) {
    int a = static_cast<int>(signs.size());
    signs.push_back(1);
    int b = static_cast<int>(signs.size());
    signs.push_back(1);
    word.push_back(a);
    word.push_back(b);
    word.push_back(a);
    word.push_back(b);
  }
  for (int c = 0; c < f.k; ++c) {
    int idx = static_cast<int>(signs.size());
    word.push_back(idx);
    word.push_back(idx);
    signs.push_back(-1);
  }
  return ChordDiagram(std::move(word), std::move(signs));
}

LaurentPoly canonical_product(const CanonicalForm& f) {
  const VarTable& T = r_table();
  int iso = f.i - 2 * f.j - f.k;
  if (iso < 0) throw std::invalid_argument("invalid canonical form");
  LaurentPoly y = LaurentPoly::variable(T, "y");
  LaurentPoly z = LaurentPoly::variable(T, "z");
  LaurentPoly w = LaurentPoly::variable(T, "w");
  LaurentPoly one = LaurentPoly::constant(T, 1);
  LaurentPoly loop_pos = one + y;
  LaurentPoly loop_neg = one + y * z * w;
  LaurentPoly pair = y * y * z * z + LaurentPoly::constant(T, 2) * y + one;
  return loop_pos.pow(iso) * pair.pow(f.j) * loop_neg.pow(f.k);
}

namespace {

// Canonical split around a pivot chord. Writing the diagram cyclically as
// (a e b c e d), we take c = last foot of the arc between the pivot's feet
// and d = first foot of the other arc; the rewrites exchange the arcs with
// one-step compensating rotations, which makes both moves involutions.
struct MoveSplit {
  std::vector<int> a, b, c, d;  // word positions
};

MoveSplit move_split(const ChordDiagram& diag, int chord) {
  auto [p1, p2] = diag.feet(chord);
  const int len = static_cast<int>(diag.word().size());
  std::vector<int> arc1, arc2;
  for (int i = p1 + 1; i < p2; ++i) arc1.push_back(i);
  for (int i = p2 + 1; i < len; ++i) arc2.push_back(i);
  for (int i = 0; i < p1; ++i) arc2.push_back(i);
  MoveSplit s;
  // One-foot splits on both sides keep the move an involution; with an
  // empty arc the move degenerates to the identity rearrangement.
  if (!arc1.empty() && !arc2.empty()) {
    s.c = {arc1.back()};
    s.b.assign(arc1.begin(), arc1.end() - 1);
    s.d = {arc2.front()};
    s.a.assign(arc2.begin() + 1, arc2.end());
  } else {
    s.b = arc1;
    s.a = arc2;
  }
  return s;
}

ChordDiagram assemble_move(const ChordDiagram& diag, int chord, bool twist) {
  MoveSplit s = move_split(diag, chord);
  std::vector<int> positions;
  auto append = [&](const std::vector<int>& block, bool reversed) {
    if (reversed) {
      for (auto it = block.rbegin(); it != block.rend(); ++it) positions.push_back(*it);
    } else {
      for (int p : block) positions.push_back(p);
    }
  };
  // rotation: (a e b c e d) -> (b e a d e c)
  // twist:    (a e b c e d) -> (b e a c' e d'), moved-segment signs handled below
  append(s.b, false);
  positions.push_back(-1);  // pivot foot
  append(s.a, false);
  append(twist ? s.c : s.d, twist);
  positions.push_back(-1);
  append(twist ? s.d : s.c, twist);

  std::vector<int> word;
  word.reserve(diag.word().size());
  for (int p : positions) word.push_back(p < 0 ? chord : diag.word()[p]);

  std::vector<int> signs(diag.chord_count());
  std::vector<std::string> ids(diag.chord_count());
  for (int cd = 0; cd < diag.chord_count(); ++cd) {
    signs[cd] = diag.sign(cd);
    ids[cd] = diag.chord_id(cd);
  }
  if (twist) {
    std::vector<int> moved_count(diag.chord_count(), 0);
    for (int p : s.c) ++moved_count[diag.word()[p]];
    for (int p : s.d) ++moved_count[diag.word()[p]];
    for (int cd = 0; cd < diag.chord_count(); ++cd) {
      if (moved_count[cd] == 1) signs[cd] = -signs[cd];
    }
  }
  return ChordDiagram(std::move(word), std::move(signs), std::move(ids));
}

}  // namespace

ChordDiagram rotate_move(const ChordDiagram& d, int chord) {
  if (chord < 0 || chord >= d.chord_count()) throw std::invalid_argument("unknown chord index");
  if (d.sign(chord) < 0) throw std::domain_error("rotation move needs a positive pivot chord");
  return assemble_move(d, chord, /*twist=*/false);
}

ChordDiagram twist_move(const ChordDiagram& d, int chord) {
  if (chord < 0 || chord >= d.chord_count()) throw std::invalid_argument("unknown chord index");
  if (d.sign(chord) > 0) throw std::domain_error("twist move needs a negative pivot chord");
  return assemble_move(d, chord, /*twist=*/true);
}

bool move_mu_is_one(const ChordDiagram& d, int chord) {
  MoveSplit s = move_split(d, chord);
  std::vector<int> moved_count(d.chord_count(), 0);
  for (int p : s.c) ++moved_count[d.word()[p]];
  for (int p : s.d) ++moved_count[d.word()[p]];
  for (int cd = 0; cd < d.chord_count(); ++cd) {
    if (cd != chord && moved_count[cd] == 1) return true;
  }
  return false;
}

LaurentPoly recipe_evaluate(const RibbonGraph& g, const RecipeSpec& spec) {
  const VarTable& T = spec.alpha.table();
  for (const LaurentPoly* p : {&spec.x, &spec.q, &spec.r, &spec.s, &spec.u, &spec.v}) {
    if (p->table() != T) throw std::invalid_argument("recipe spec over mixed variable tables");
  }
  if (!spec.alpha.is_monomial()) throw NonInvertibleAlpha();
  LaurentPoly alpha_inv = spec.alpha.monomial_inverse();

  LaurentPoly qa = spec.q - spec.alpha;
  LaurentPoly lhs1 = qa * qa * spec.u * spec.u;
  LaurentPoly rhs1 =
      spec.alpha * (spec.s - LaurentPoly::constant(T, 2) * spec.q + spec.alpha);
  if (lhs1 != rhs1) throw RelationViolated("(q-alpha)^2 u^2 = alpha(s - 2q + alpha)");
  if (qa * spec.u * spec.v != spec.r - spec.alpha) {
    throw RelationViolated("(q-alpha) u v = r - alpha");
  }
  if (spec.v != spec.v * spec.v) throw RelationViolated("v = v^2");

  LaurentPoly y_bind = alpha_inv * spec.q - LaurentPoly::constant(T, 1);
  LaurentPoly x_bind = spec.x - LaurentPoly::constant(T, 1);
  LaurentPoly base = r_state_sum_basis(g).substitute(
      {{"x-1", x_bind}, {"y", y_bind}, {"z", spec.u}, {"w", spec.v}}, T);
  return spec.alpha.pow(g.stats().k) * base;
}

RecipeSpec identity_recipe_spec() {
  const VarTable& T = r_table();
  LaurentPoly one = LaurentPoly::constant(T, 1);
  LaurentPoly y = LaurentPoly::variable(T, "y");
  LaurentPoly z = LaurentPoly::variable(T, "z");
  LaurentPoly w = LaurentPoly::variable(T, "w");
  RecipeSpec s;
  s.alpha = one;
  s.x = LaurentPoly::variable(T, "x");
  s.q = one + y;
  s.r = one + y * z * w;
  s.s = y * y * z * z + LaurentPoly::constant(T, 2) * y + one;
  s.u = z;
  s.v = w;
  return s;
}

RecipeSpec c_polynomial_recipe_spec() {
  const VarTable& T = r_table();
  LaurentPoly one = LaurentPoly::constant(T, 1);
  LaurentPoly y = LaurentPoly::variable(T, "y");
  LaurentPoly z = LaurentPoly::variable(T, "z");
  LaurentPoly w = LaurentPoly::variable(T, "w");
  LaurentPoly sqrt_z = LaurentPoly::variable(T, "z", 1);  // z^(1/2)
  RecipeSpec s;
  s.alpha = one;
  s.x = LaurentPoly::variable(T, "x");
  s.q = one + y;
  s.r = one + y * sqrt_z * w;
  s.s = one + LaurentPoly::constant(T, 2) * y + y * y * z;
  s.u = sqrt_z;
  s.v = w;
  return s;
}

LaurentPoly classical_tutte(const RibbonGraph& g) {
  const VarTable& T = tutte_table();
  LaurentPoly x = LaurentPoly::variable(T, "x");
  LaurentPoly y = LaurentPoly::variable(T, "y");
  LaurentPoly one = LaurentPoly::constant(T, 1);
  return r_state_sum_basis(g).substitute(
      {{"x-1", x - one}, {"y", y - one}, {"z", one}, {"w", one}}, T);
}

}  // namespace ribbonforge
