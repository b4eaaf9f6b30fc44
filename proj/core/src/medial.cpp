#include "ribbonforge/medial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonforge {

Pairing Pairing::normalized() const {
  DartPair pa{std::min(a[0], a[1]), std::max(a[0], a[1])};
  DartPair pb{std::min(b[0], b[1]), std::max(b[0], b[1])};
  if (pb < pa) std::swap(pa, pb);
  return Pairing{pa, pb};
}

bool Pairing::operator==(const Pairing& rhs) const {
  Pairing x = normalized(), y = rhs.normalized();
  return x.a == y.a && x.b == y.b;
}

Pairing positional_pairing(const RibbonGraph& g, int vertex, MedialState state) {
  const auto& rot = g.rotation(vertex);
  if (rot.size() != 4) throw std::invalid_argument("pairings need a 4-valent vertex");
  switch (state) {
    case MedialState::Uncut:
      return Pairing{{rot[0], rot[1]}, {rot[2], rot[3]}};
    case MedialState::Cut:
      return Pairing{{rot[1], rot[2]}, {rot[3], rot[0]}};
    case MedialState::Crossing:
      return Pairing{{rot[0], rot[2]}, {rot[1], rot[3]}};
  }
  throw std::logic_error("unreachable");
}

Pairing MedialGraph::pairing(int vertex, MedialState state) const {
  return positional_pairing(graph, vertex, state);
}

MedialGraph medial(const RibbonGraph& g) {
  // Slot layout at the medial vertex of edge e = {h, h'}:
  //   positive e: (L(h), R(h'), L(h'), R(h))
  //   negative e: (L(h), L(h'), R(h'), R(h)), far-end slots carry twist marks
  // where L(d) faces the corner (prev(d), d) and R(d) the corner (d, next(d)).
  // A medial edge runs through each corner (d, next(d)), joining slot R(d)
  // to slot L(next(d)); its sign is minus one per marked end slot.
  const int m = g.edge_count();
  // slot holders: per medial vertex, 4 slots to be filled with medial darts
  std::vector<std::array<int, 4>> slots(m, {-1, -1, -1, -1});
  std::vector<std::array<bool, 4>> marked(m);
  for (int e = 0; e < m; ++e) marked[e] = {false, false, false, false};

  auto slot_L = [&](int dart) {
    int e = RibbonGraph::edge_of_dart(dart);
    bool first_half = (dart & 1) == 0;
    if (first_half) return 0;
    return g.edge(e).sign > 0 ? 2 : 1;
  };
  auto slot_R = [&](int dart) {
    int e = RibbonGraph::edge_of_dart(dart);
    bool first_half = (dart & 1) == 0;
    if (first_half) return 3;
    return g.edge(e).sign > 0 ? 1 : 2;
  };
  for (int e = 0; e < m; ++e) {
    if (g.edge(e).sign < 0) {
      marked[e][1] = marked[e][2] = true;
    }
  }

  std::vector<RibbonEdge> medial_edges;
  int free_loops = 0;
  // Corners in deterministic order: vertices in order, positions in order.
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) {
      ++free_loops;
      continue;
    }
    for (std::size_t p = 0; p < rot.size(); ++p) {
      int d = rot[p];
      int dn = rot[(p + 1) % rot.size()];
      int j = static_cast<int>(medial_edges.size());
      int e1 = RibbonGraph::edge_of_dart(d);
      int e2 = RibbonGraph::edge_of_dart(dn);
      int s1 = slot_R(d);
      int s2 = slot_L(dn);
      slots[e1][s1] = 2 * j;
      slots[e2][s2] = 2 * j + 1;
      int sign = (marked[e1][s1] ? -1 : 1) * (marked[e2][s2] ? -1 : 1);
      medial_edges.push_back({"c" + std::to_string(j), sign});
    }
  }

  std::vector<std::string> vids(m);
  std::vector<std::vector<int>> rot(m);
  std::vector<std::string> source(m);
  for (int e = 0; e < m; ++e) {
    vids[e] = g.edge(e).id;
    source[e] = g.edge(e).id;
    rot[e] = {slots[e][0], slots[e][1], slots[e][2], slots[e][3]};
  }
  MedialGraph out;
  out.graph = RibbonGraph(std::move(vids), std::move(rot), std::move(medial_edges));
  out.free_loops = free_loops;
  out.sourced = true;
  out.source_edge = std::move(source);
  return out;
}

}  // namespace ribbonforge
