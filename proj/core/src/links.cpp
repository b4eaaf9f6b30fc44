#include "ribbonforge/links.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "ribbonforge/br_poly.hpp"

namespace ribbonforge {

namespace {

bool is_adjacent_pairing(const RibbonGraph& g, int v, const Pairing& p) {
  return p == positional_pairing(g, v, MedialState::Uncut) ||
         p == positional_pairing(g, v, MedialState::Cut);
}

/// Faces of an all-positive graph: orbits of d -> partner(next(d)). The
/// corner (d, next d) is identified with dart d.
std::pair<std::vector<int>, int> face_orbits(const RibbonGraph& g) {
  std::vector<int> face(g.dart_count(), -1);
  int n = 0;
  for (int d0 = 0; d0 < g.dart_count(); ++d0) {
    if (face[d0] >= 0) continue;
    int d = d0;
    while (face[d] < 0) {
      face[d] = n;
      d = RibbonGraph::partner(g.next_dart(d));
    }
    ++n;
  }
  return {face, n};
}

}  // namespace

LinkUniverse::LinkUniverse(RibbonGraph graph, int free_loops, std::vector<Pairing> a_split,
                           std::vector<Pairing> b_split)
    : free_loops_(free_loops), a_(std::move(a_split)), b_(std::move(b_split)) {
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) != 4) throw std::invalid_argument("link universe must be 4-regular");
  }
  if (free_loops_ < 0) throw std::invalid_argument("negative free loop count");
  if (graph.stats().t != 0) throw std::invalid_argument("link universe must be orientable");
  graph_ = graph.orientation_normalized();
  if (static_cast<int>(a_.size()) != graph_.vertex_count() ||
      static_cast<int>(b_.size()) != graph_.vertex_count()) {
    throw std::invalid_argument("one A and one B pairing per crossing expected");
  }
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    if (!is_adjacent_pairing(graph_, v, a_[v]) || !is_adjacent_pairing(graph_, v, b_[v])) {
      throw std::invalid_argument("A/B pairings must be the two non-crossing pairings");
    }
    if (a_[v] == b_[v]) throw std::invalid_argument("A and B pairings must differ");
  }
}

LinkUniverse LinkUniverse::with_swapped_labels() const {
  return LinkUniverse(graph_, free_loops_, b_, a_);
}

std::optional<CheckerboardColoring> try_checkerboard_color(const LinkUniverse& u) {
  const RibbonGraph& g = u.graph();
  CheckerboardColoring col;
  auto [face, nfaces] = face_orbits(g);
  col.face_of_dart = face;
  col.face_count = nfaces;
  col.green.assign(nfaces, false);

  // Adjacent corners around a crossing lie in faces of different colors.
  std::vector<std::vector<int>> adj(nfaces);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    for (int i = 0; i < 4; ++i) {
      int f1 = face[rot[i]];
      int f2 = face[rot[(i + 1) % 4]];
      adj[f1].push_back(f2);
      adj[f2].push_back(f1);
    }
  }
  std::vector<int> color(nfaces, -1);
  std::vector<int> min_dart_of_face(nfaces, g.dart_count());
  for (int d = 0; d < g.dart_count(); ++d) {
    min_dart_of_face[face[d]] = std::min(min_dart_of_face[face[d]], d);
  }
  std::vector<char> seen(nfaces, 0);
  for (int start = 0; start < nfaces; ++start) {
    if (seen[start]) continue;
    // Collect the constraint component, then make the face holding its
    // lowest corner green.
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      comp.push_back(f);
      for (int nb : adj[f]) {
        if (!seen[nb]) {
          seen[nb] = 1;
          q.push(nb);
        }
      }
    }
    int root = comp.front();
    for (int f : comp) {
      if (min_dart_of_face[f] < min_dart_of_face[root]) root = f;
    }
    color[root] = 1;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int f = bfs.front();
      bfs.pop();
      for (int nb : adj[f]) {
        if (color[nb] < 0) {
          color[nb] = color[f] ^ 1;
          bfs.push(nb);
        } else if (color[nb] == color[f]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int f = 0; f < nfaces; ++f) col.green[f] = color[f] == 1;
  return col;
}

CheckerboardColoring checkerboard_color(const LinkUniverse& u) {
  auto col = try_checkerboard_color(u);
  if (!col) throw NotCheckerboardColorable();
  return *col;
}

SignedRibbonGraph green_face_graph(const LinkUniverse& u, const CheckerboardColoring& coloring) {
  const RibbonGraph& g = u.graph();
  if (static_cast<int>(coloring.face_of_dart.size()) != g.dart_count()) {
    throw std::invalid_argument("coloring does not match the universe");
  }
  // Green faces become vertices; each crossing contributes one edge whose
  // darts sit in the crossing's two green corners, in boundary-walk order.
  std::vector<int> green_faces;
  for (int f = 0; f < coloring.face_count; ++f) {
    if (coloring.green[f]) green_faces.push_back(f);
  }
  std::vector<int> vertex_of_face(coloring.face_count, -1);
  for (std::size_t i = 0; i < green_faces.size(); ++i) vertex_of_face[green_faces[i]] = static_cast<int>(i);

  std::vector<int> min_dart_of_face(coloring.face_count, g.dart_count());
  for (int d = 0; d < g.dart_count(); ++d) {
    int f = coloring.face_of_dart[d];
    min_dart_of_face[f] = std::min(min_dart_of_face[f], d);
  }

  std::vector<std::vector<int>> rotations(green_faces.size());
  std::vector<int> halves_seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < green_faces.size(); ++i) {
    int f = green_faces[i];
    int d0 = min_dart_of_face[f];
    int d = d0;
    do {
      int crossing = g.vertex_of_dart(d);
      int dart = 2 * crossing + halves_seen[crossing];
      ++halves_seen[crossing];
      rotations[i].push_back(dart);
      d = RibbonGraph::partner(g.next_dart(d));
    } while (d != d0);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (halves_seen[v] != 2) {
      throw std::logic_error("crossing does not meet exactly two green corners");
    }
  }
  // Isolated green-face vertices for crossingless components.
  std::vector<std::string> vids(green_faces.size());
  for (std::size_t i = 0; i < green_faces.size(); ++i) {
    vids[i] = "F" + std::to_string(min_dart_of_face[green_faces[i]]);
  }
  for (int l = 0; l < u.free_loops(); ++l) {
    vids.push_back("L" + std::to_string(l));
    rotations.push_back({});
  }

  std::vector<RibbonEdge> edges(g.vertex_count());
  SignedRibbonGraph out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    edges[v] = {g.vertex_id(v), 1};
    // A merges the two corners its pairs do not hug; +1 when those merged
    // corners are green.
    const auto& rot = g.rotation(v);
    Pairing uncut = positional_pairing(g, v, MedialState::Uncut);
    int merged_corner_dart = (u.a_split(v) == uncut) ? rot[1] : rot[0];
    bool merged_green = coloring.green[coloring.face_of_dart[merged_corner_dart]];
    out.crossing_sign[g.vertex_id(v)] = merged_green ? 1 : -1;
  }
  out.graph = RibbonGraph(std::move(vids), std::move(rotations), std::move(edges));
  return out;
}

const VarTable& bracket_table() {
  static const VarTable t({"A", "B", "d"});
  return t;
}

const VarTable& signed_r_table() {
  static const VarTable t({"x-1", "y", "z"});
  return t;
}

LaurentPoly kauffman_bracket(const LinkUniverse& u) {
  const VarTable& T = bracket_table();
  const RibbonGraph& g = u.graph();
  const int v = g.vertex_count();
  if (v > 62) throw std::invalid_argument("bracket state sums support at most 62 crossings");
  LaurentPoly acc = LaurentPoly::zero(T);
  LaurentPoly A = LaurentPoly::variable(T, "A");
  LaurentPoly B = LaurentPoly::variable(T, "B");
  LaurentPoly d = LaurentPoly::variable(T, "d");
  for (std::uint64_t mask = 0; mask < (1ULL << v); ++mask) {
    std::vector<Pairing> choice(v);
    int a_count = 0;
    for (int i = 0; i < v; ++i) {
      bool use_a = (mask >> i & 1ULL) == 0;
      choice[i] = use_a ? u.a_split(i) : u.b_split(i);
      if (use_a) ++a_count;
    }
    int c = state_components(g, choice) + u.free_loops();
    acc += A.pow(a_count) * B.pow(v - a_count) * d.pow(c - 1);
  }
  return acc;
}

WeightSystem link_weight_system(const LinkUniverse& u) {
  const VarTable& T = bracket_table();
  LaurentPoly sqrtA = LaurentPoly::variable(T, "A", 1);
  LaurentPoly sqrtB = LaurentPoly::variable(T, "B", 1);
  std::vector<std::vector<PairingOption>> per(u.crossing_count());
  for (int v = 0; v < u.crossing_count(); ++v) {
    per[v] = {
        {u.a_split(v), sqrtA, sqrtA},
        {u.b_split(v), sqrtB, sqrtB},
    };
  }
  return WeightSystem(T, std::move(per));
}

LaurentPoly signed_r(const SignedRibbonGraph& sg) {
  const RibbonGraph& g = sg.graph;
  const VarTable& T = signed_r_table();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).sign != 1) {
      throw std::invalid_argument("signed ribbon graphs carry all-positive topological signs");
    }
    if (!sg.crossing_sign.count(g.edge(e).id)) {
      throw std::invalid_argument("missing crossing sign for edge " + g.edge(e).id);
    }
  }
  int total_negative = 0;
  std::vector<int> neg(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    neg[e] = sg.crossing_sign.at(g.edge(e).id) < 0 ? 1 : 0;
    total_negative += neg[e];
  }
  if (g.edge_count() > 62) throw std::invalid_argument("subset state sums support at most 62 edges");
  const int rG = g.stats().r;
  LaurentPoly acc = LaurentPoly::zero(T);
  for (std::uint64_t mask = 0; mask < (1ULL << g.edge_count()); ++mask) {
    SubgraphStats st = g.stats(mask);
    int f1 = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (mask >> e & 1ULL) f1 += neg[e];
    }
    int f2 = total_negative - f1;
    // s(F) = (f1 - f2)/2, carried in half-units: 2*s = f1 - f2.
    ExpVec exps(3, 0);
    exps[0] = 2 * (rG - st.r) + (f1 - f2);
    exps[1] = 2 * st.n - (f1 - f2);
    exps[2] = 2 * st.eg;
    acc.add_term(exps, Rational(1));
  }
  return acc;
}

namespace {

Rational bracket_spot(const LaurentPoly& p) {
  // A=4, B=9, d=25: perfect squares keep the half-exponent evaluation exact.
  return p.eval({{"A", Rational(4)}, {"B", Rational(9)}, {"d", Rational(25)}});
}

/// A^r B^n t^k R_sgn(B t/A + 1, A t/B, 1/t) over (A, B, d) with t = d.
LaurentPoly signed_rhs(const SignedRibbonGraph& sg, int extra_d_exponent) {
  const VarTable& T = bracket_table();
  LaurentPoly A = LaurentPoly::variable(T, "A");
  LaurentPoly B = LaurentPoly::variable(T, "B");
  LaurentPoly d = LaurentPoly::variable(T, "d");
  SubgraphStats st = sg.graph.stats();
  LaurentPoly base = signed_r(sg).substitute(
      {{"x-1", B * d * A.monomial_inverse()},
       {"y", A * d * B.monomial_inverse()},
       {"z", d.monomial_inverse()}},
      T);
  return A.pow(st.r) * B.pow(st.n) * d.pow(st.k + extra_d_exponent) * base;
}

}  // namespace

VerifyResult verify_chmutov_pak(const LinkUniverse& u) {
  CheckerboardColoring coloring = checkerboard_color(u);
  SignedRibbonGraph sg = green_face_graph(u, coloring);

  // Bracket identity: [L](A,B,d) = A^r B^n d^(k-1) R_sgn(Bd/A+1, Ad/B, 1/d).
  LaurentPoly lhs = kauffman_bracket(u);
  LaurentPoly rhs = signed_rhs(sg, /*extra_d_exponent=*/-1);
  if (lhs != rhs) {
    return {false, "bracket identity fails for " + u.graph().serialize() + "\n  bracket = " + lhs.text() +
                       "\n  rhs = " + rhs.text()};
  }
  if (bracket_spot(lhs) != bracket_spot(rhs)) {
    return {false, "bracket rational spot check disagrees for " + u.graph().serialize()};
  }

  // Signed transition identity on the green-face medial:
  // Q(G_m; W^-, t) = A^r B^n t^k R_sgn(Bt/A+1, At/B, 1/t).
  MedialGraph m = medial(sg.graph);
  const VarTable& T = bracket_table();
  WeightSystem wminus =
      signed_weights(m, LaurentPoly::variable(T, "A"), LaurentPoly::variable(T, "B"), sg.crossing_sign);
  LaurentPoly q_lhs = q_transition(m, wminus, "d");
  LaurentPoly q_rhs = signed_rhs(sg, /*extra_d_exponent=*/0);
  if (q_lhs != q_rhs) {
    return {false, "signed transition identity fails for " + u.graph().serialize() + "\n  lhs = " +
                       q_lhs.text() + "\n  rhs = " + q_rhs.text()};
  }
  return {};
}

}  // namespace ribbonforge
