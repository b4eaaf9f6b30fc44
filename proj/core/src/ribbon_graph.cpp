#include "ribbonforge/ribbon_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

RibbonGraph::RibbonGraph(std::vector<std::string> vertex_ids,
                         std::vector<std::vector<int>> rotations,
                         std::vector<RibbonEdge> edges)
    : vertex_ids_(std::move(vertex_ids)), rotations_(std::move(rotations)), edges_(std::move(edges)) {
  if (vertex_ids_.size() != rotations_.size()) throw std::invalid_argument("vertex id/rotation arity mismatch");
  auto diag = diagnose(rotations_, edges_.size());
  if (!diag.empty()) throw std::invalid_argument("invalid ribbon graph: " + diag.front());
  for (const auto& e : edges_) {
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("edge sign must be +1 or -1");
  }
  index_darts();
}

RibbonGraph RibbonGraph::from_rotation_system(const std::vector<std::vector<int>>& rotations,
                                              const std::vector<int>& signs) {
  std::vector<std::string> vids(rotations.size());
  for (std::size_t i = 0; i < rotations.size(); ++i) vids[i] = "v" + std::to_string(i);
  std::vector<RibbonEdge> edges(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) edges[i] = {"e" + std::to_string(i), signs[i]};
  return RibbonGraph(std::move(vids), rotations, std::move(edges));
}

std::vector<std::string> RibbonGraph::diagnose(const std::vector<std::vector<int>>& rotations,
                                               std::size_t edge_count) {
  std::vector<std::string> out;
  std::vector<int> seen(2 * edge_count, 0);
  for (const auto& rot : rotations) {
    for (int d : rot) {
      if (d < 0 || d >= static_cast<int>(2 * edge_count)) {
        out.push_back("rotation references unknown half-edge " + std::to_string(d));
        return out;
      }
      ++seen[d];
    }
  }
  for (std::size_t d = 0; d < seen.size(); ++d) {
    if (seen[d] == 0) {
      out.push_back("orphan half-edge " + std::to_string(d) + " (in an edge, missing from all rotations)");
      return out;
    }
    if (seen[d] > 1) {
      out.push_back("duplicated half-edge " + std::to_string(d) + " (appears in more than one rotation slot)");
      return out;
    }
  }
  return out;
}

void RibbonGraph::index_darts() {
  dart_vertex_.assign(dart_count(), -1);
  dart_pos_.assign(dart_count(), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int p = 0; p < static_cast<int>(rotations_[v].size()); ++p) {
      int d = rotations_[v][p];
      dart_vertex_[d] = v;
      dart_pos_[d] = p;
    }
  }
}

int RibbonGraph::vertex_index(const std::string& id) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertex_ids_[v] == id) return v;
  }
  throw std::invalid_argument("unknown vertex id: " + id);
}

int RibbonGraph::edge_index(const std::string& id) const {
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e].id == id) return e;
  }
  throw std::invalid_argument("unknown edge id: " + id);
}

int RibbonGraph::next_dart(int d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  int p = dart_pos_[d];
  return rot[(p + 1) % rot.size()];
}

int RibbonGraph::prev_dart(int d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  int p = dart_pos_[d];
  return rot[(p + rot.size() - 1) % rot.size()];
}

bool RibbonGraph::is_loop(int e) const {
  return vertex_of_dart(2 * e) == vertex_of_dart(2 * e + 1);
}

bool RibbonGraph::is_bridge(int e) const {
  if (is_loop(e)) return false;
  UnionFind uf(vertex_count());
  for (int f = 0; f < edge_count(); ++f) {
    if (f == e) continue;
    uf.unite(vertex_of_dart(2 * f), vertex_of_dart(2 * f + 1));
  }
  return uf.find(vertex_of_dart(2 * e)) != uf.find(vertex_of_dart(2 * e + 1));
}

bool RibbonGraph::connected() const {
  if (vertex_count() == 0) return false;
  UnionFind uf(vertex_count());
  int k = vertex_count();
  for (int e = 0; e < edge_count(); ++e) {
    if (uf.unite(vertex_of_dart(2 * e), vertex_of_dart(2 * e + 1))) --k;
  }
  return k == 1;
}

std::uint64_t RibbonGraph::full_mask() const {
  return edge_count() == 64 ? ~0ULL : ((1ULL << edge_count()) - 1);
}

std::uint64_t RibbonGraph::mask_of(const std::vector<std::string>& edge_ids) const {
  std::uint64_t m = 0;
  for (const auto& id : edge_ids) m |= 1ULL << edge_index(id);
  return m;
}

std::vector<BoundaryWalk> RibbonGraph::boundary_walks(std::uint64_t edge_mask) const {
  // States (dart, flag) with flag +-1; a walk step traverses a corner and
  // then crosses a ribbon. Advancing from (h, s): cross g = rotation
  // successor of h (predecessor when s = -1), toggling s on a negative
  // edge. Each boundary component is a pair of mutually reversed orbits;
  // we emit one representative per component.
  std::vector<std::vector<int>> rot(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) {
    for (int d : rotations_[v]) {
      if (edge_mask >> edge_of_dart(d) & 1ULL) rot[v].push_back(d);
    }
  }
  std::vector<int> pos(dart_count(), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int p = 0; p < static_cast<int>(rot[v].size()); ++p) pos[rot[v][p]] = p;
  }
  auto step_dart = [&](int d, int s) {
    const auto& r = rot[dart_vertex_[d]];
    int p = pos[d];
    int q = s > 0 ? (p + 1) % r.size() : (p + r.size() - 1) % r.size();
    return r[q];
  };
  auto encode = [](int d, int s) { return 2 * d + (s < 0 ? 1 : 0); };

  std::vector<char> visited(2 * dart_count(), 0);
  std::vector<BoundaryWalk> walks;
  // Positive-flag starts first, so orientable graphs get all-positive
  // representative walks (and hence all-positive duals).
  for (int s0 : {+1, -1}) {
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (!(edge_mask >> edge_of_dart(d0) & 1ULL)) continue;
      if (visited[encode(d0, s0)]) continue;
      BoundaryWalk walk;
      int d = d0, s = s0;
      do {
        visited[encode(d, s)] = 1;
        // Reverse traversal of the same corner belongs to the mirror orbit.
        int md = s > 0 ? step_dart(d, +1) : step_dart(d, -1);
        visited[encode(md, -s)] = 1;
        int g = step_dart(d, s);
        walk.steps.emplace_back(g, s);
        int s2 = s * edges_[edge_of_dart(g)].sign;
        d = partner(g);
        s = s2;
      } while (!(d == d0 && s == s0));
      walks.push_back(std::move(walk));
    }
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (rot[v].empty()) {
      BoundaryWalk w;
      w.isolated_vertex = v;
      walks.push_back(std::move(w));
    }
  }
  return walks;
}

SubgraphStats RibbonGraph::stats(std::uint64_t edge_mask) const {
  SubgraphStats st;
  int m = 0;
  UnionFind uf(vertex_count());
  int k = vertex_count();
  for (int e = 0; e < edge_count(); ++e) {
    if (!(edge_mask >> e & 1ULL)) continue;
    ++m;
    if (uf.unite(vertex_of_dart(2 * e), vertex_of_dart(2 * e + 1))) --k;
  }
  st.k = k;
  st.r = vertex_count() - k;
  st.n = m - st.r;

  // Orientability: the subgraph is orientable iff vertex signs can be
  // chosen making every edge positive (parity union-find; a negative loop
  // is immediately unbalanced).
  std::vector<int> par_parent(vertex_count()), par_off(vertex_count(), 0);
  for (int v = 0; v < vertex_count(); ++v) par_parent[v] = v;
  std::function<std::pair<int, int>(int)> pfind = [&](int a) -> std::pair<int, int> {
    if (par_parent[a] == a) return {a, 0};
    auto [root, off] = pfind(par_parent[a]);
    par_parent[a] = root;
    par_off[a] = (par_off[a] + off) & 1;
    return {root, par_off[a]};
  };
  int balanced = 1;
  for (int e = 0; e < edge_count() && balanced; ++e) {
    if (!(edge_mask >> e & 1ULL)) continue;
    int u = vertex_of_dart(2 * e), v = vertex_of_dart(2 * e + 1);
    int want = edges_[e].sign < 0 ? 1 : 0;
    auto [ru, ou] = pfind(u);
    auto [rv, ov] = pfind(v);
    if (ru == rv) {
      if (((ou + ov) & 1) != want) balanced = 0;
    } else {
      par_parent[ru] = rv;
      par_off[ru] = (ou + ov + want) & 1;
    }
  }
  st.t = balanced ? 0 : 1;

  auto walks = boundary_walks(edge_mask);
  st.bc = static_cast<int>(walks.size());
  st.eg = st.k - st.bc + st.n;
  return st;
}

SubgraphStats RibbonGraph::stats(const std::vector<std::string>& edge_ids) const {
  return stats(mask_of(edge_ids));
}

RibbonGraph RibbonGraph::deleted(int e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("unknown edge index");
  std::vector<RibbonEdge> edges;
  std::vector<int> remap(dart_count(), -1);
  for (int f = 0; f < edge_count(); ++f) {
    if (f == e) continue;
    remap[2 * f] = 2 * static_cast<int>(edges.size());
    remap[2 * f + 1] = 2 * static_cast<int>(edges.size()) + 1;
    edges.push_back(edges_[f]);
  }
  std::vector<std::vector<int>> rot(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) {
    for (int d : rotations_[v]) {
      if (remap[d] >= 0) rot[v].push_back(remap[d]);
    }
  }
  return RibbonGraph(vertex_ids_, std::move(rot), std::move(edges));
}

RibbonGraph RibbonGraph::vertex_flipped(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("unknown vertex index");
  auto rot = rotations_;
  std::reverse(rot[v].begin(), rot[v].end());
  auto edges = edges_;
  for (int e = 0; e < edge_count(); ++e) {
    bool a = vertex_of_dart(2 * e) == v;
    bool b = vertex_of_dart(2 * e + 1) == v;
    if (a != b) edges[e].sign = -edges[e].sign;
  }
  return RibbonGraph(vertex_ids_, std::move(rot), std::move(edges));
}

RibbonGraph RibbonGraph::contracted(int e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("unknown edge index");
  if (is_loop(e)) throw std::invalid_argument("cannot contract a loop");
  if (edges_[e].sign < 0) {
    // Flip one endpoint to clear the half twist first.
    return vertex_flipped(vertex_of_dart(2 * e + 1)).contracted(e);
  }
  int u = vertex_of_dart(2 * e), v = vertex_of_dart(2 * e + 1);
  // Merged rotation: u's cyclic order beginning after the contracted edge,
  // followed by v's, again beginning after it.
  std::vector<int> merged;
  {
    const auto& ru = rotations_[u];
    int p = dart_pos_[2 * e];
    for (std::size_t i = 1; i < ru.size(); ++i) merged.push_back(ru[(p + i) % ru.size()]);
    const auto& rv = rotations_[v];
    int q = dart_pos_[2 * e + 1];
    for (std::size_t i = 1; i < rv.size(); ++i) merged.push_back(rv[(q + i) % rv.size()]);
  }
  std::vector<std::string> vids;
  std::vector<std::vector<int>> rot;
  for (int w = 0; w < vertex_count(); ++w) {
    if (w == u || w == v) continue;
    vids.push_back(vertex_ids_[w]);
    rot.push_back(rotations_[w]);
  }
  vids.push_back(std::min(vertex_ids_[u], vertex_ids_[v]));
  rot.push_back(std::move(merged));

  std::vector<RibbonEdge> edges;
  std::vector<int> remap(dart_count(), -1);
  for (int f = 0; f < edge_count(); ++f) {
    if (f == e) continue;
    remap[2 * f] = 2 * static_cast<int>(edges.size());
    remap[2 * f + 1] = 2 * static_cast<int>(edges.size()) + 1;
    edges.push_back(edges_[f]);
  }
  for (auto& r : rot) {
    for (auto& d : r) d = remap[d];
  }
  return RibbonGraph(std::move(vids), std::move(rot), std::move(edges));
}

RibbonGraph RibbonGraph::disjoint_union(const RibbonGraph& other) const {
  std::set<std::string> vid_taken(vertex_ids_.begin(), vertex_ids_.end());
  std::set<std::string> eid_taken;
  for (const auto& e : edges_) eid_taken.insert(e.id);

  std::vector<std::string> vids = vertex_ids_;
  std::vector<std::vector<int>> rot = rotations_;
  std::vector<RibbonEdge> edges = edges_;
  int shift = dart_count();
  for (int v = 0; v < other.vertex_count(); ++v) {
    std::string id = other.vertex_id(v);
    while (vid_taken.count(id)) id += "'";
    vid_taken.insert(id);
    vids.push_back(id);
    std::vector<int> r = other.rotation(v);
    for (auto& d : r) d += shift;
    rot.push_back(std::move(r));
  }
  for (int e = 0; e < other.edge_count(); ++e) {
    RibbonEdge re = other.edge(e);
    while (eid_taken.count(re.id)) re.id += "'";
    eid_taken.insert(re.id);
    edges.push_back(std::move(re));
  }
  return RibbonGraph(std::move(vids), std::move(rot), std::move(edges));
}

RibbonGraph RibbonGraph::one_point_join(const RibbonGraph& other, int v_this, int v_other) const {
  if (v_this < 0 || v_this >= vertex_count()) throw std::invalid_argument("unknown vertex index");
  if (v_other < 0 || v_other >= other.vertex_count()) throw std::invalid_argument("unknown vertex index");
  RibbonGraph u = disjoint_union(other);
  int a = v_this;
  int b = vertex_count() + v_other;
  std::vector<std::string> vids;
  std::vector<std::vector<int>> rot;
  for (int v = 0; v < u.vertex_count(); ++v) {
    if (v == b) continue;
    vids.push_back(u.vertex_id(v));
    if (v == a) {
      std::vector<int> r = u.rotation(a);
      const auto& rb = u.rotation(b);
      r.insert(r.end(), rb.begin(), rb.end());
      rot.push_back(std::move(r));
    } else {
      rot.push_back(u.rotation(v));
    }
  }
  std::vector<RibbonEdge> edges;
  for (int e = 0; e < u.edge_count(); ++e) edges.push_back(u.edge(e));
  return RibbonGraph(std::move(vids), std::move(rot), std::move(edges));
}

RibbonGraph RibbonGraph::dual() const {
  auto walks = boundary_walks(full_mask());
  // Each edge is crossed exactly twice over the representative walks; the
  // two crossings become the darts of the dual edge. The dual edge is
  // positive exactly when the walks cross the edge once from each end,
  // and negative when they cross through the same half-edge twice.
  std::vector<std::array<int, 2>> crossed(edge_count(), {-1, -1});
  std::vector<int> times_seen(edge_count(), 0);
  std::vector<std::vector<int>> rot;
  std::vector<std::string> vids;
  for (const auto& walk : walks) {
    std::vector<int> r;
    for (const auto& [dart, flag] : walk.steps) {
      int e = edge_of_dart(dart);
      int occ = times_seen[e]++;
      if (occ > 1) throw std::logic_error("edge crossed more than twice during boundary trace");
      crossed[e][occ] = dart;
      r.push_back(2 * e + occ);
      (void)flag;
    }
    vids.push_back("f" + std::to_string(vids.size()));
    rot.push_back(std::move(r));
  }
  std::vector<RibbonEdge> edges(edge_count());
  for (int e = 0; e < edge_count(); ++e) {
    edges[e] = {edges_[e].id, crossed[e][0] != crossed[e][1] ? 1 : -1};
  }
  return RibbonGraph(std::move(vids), std::move(rot), std::move(edges));
}

RibbonGraph RibbonGraph::orientation_normalized() const {
  // Vertex signs making every edge positive; exists iff the graph is
  // orientable. Flipping the negative-class vertices realizes them.
  std::vector<int> color(vertex_count(), -1);
  for (int start = 0; start < vertex_count(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : rotations_[v]) {
        int e = edge_of_dart(d);
        int w = vertex_of_dart(partner(d));
        int want = edges_[e].sign < 0 ? 1 : 0;
        if (w == v) {
          if (want) throw std::domain_error("graph is not orientable (negative loop)");
          continue;
        }
        int c = color[v] ^ want;
        if (color[w] < 0) {
          color[w] = c;
          q.push(w);
        } else if (color[w] != c) {
          throw std::domain_error("graph is not orientable (odd negative cycle)");
        }
      }
    }
  }
  std::vector<std::vector<int>> rot = rotations_;
  auto edges = edges_;
  for (int v = 0; v < vertex_count(); ++v) {
    if (color[v] == 1) std::reverse(rot[v].begin(), rot[v].end());
  }
  for (int e = 0; e < edge_count(); ++e) {
    int u = vertex_of_dart(2 * e), v = vertex_of_dart(2 * e + 1);
    if (color[u] != color[v]) edges[e].sign = -edges[e].sign;
  }
  return RibbonGraph(vertex_ids_, std::move(rot), std::move(edges));
}

std::string RibbonGraph::serialize() const {
  std::vector<int> order(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vertex_ids_[a] < vertex_ids_[b]; });
  std::ostringstream out;
  out << "V[";
  for (int v : order) {
    out << vertex_ids_[v] << ":(";
    for (std::size_t i = 0; i < rotations_[v].size(); ++i) {
      if (i) out << ',';
      int d = rotations_[v][i];
      out << edges_[edge_of_dart(d)].id << '.' << (d & 1);
    }
    out << ")";
  }
  out << "]E[";
  std::vector<int> eorder(edge_count());
  for (int i = 0; i < edge_count(); ++i) eorder[i] = i;
  std::sort(eorder.begin(), eorder.end(), [&](int a, int b) { return edges_[a].id < edges_[b].id; });
  for (int e : eorder) out << edges_[e].id << (edges_[e].sign > 0 ? '+' : '-');
  out << "]";
  return out.str();
}

std::string RibbonGraph::canonical_code() const {
  // Rooted BFS codes over the dart set with generators (rotation successor,
  // partner); the minimum over roots is relabeling-invariant.
  std::string best;
  std::vector<int> disc(dart_count());
  std::vector<char> comp_done(dart_count(), 0);
  std::vector<std::string> component_codes;
  for (int seed = 0; seed < dart_count(); ++seed) {
    if (comp_done[seed]) continue;
    // Collect this component's darts.
    std::vector<int> comp;
    {
      std::vector<char> vis(dart_count(), 0);
      std::queue<int> q;
      q.push(seed);
      vis[seed] = 1;
      while (!q.empty()) {
        int d = q.front();
        q.pop();
        comp.push_back(d);
        for (int nb : {next_dart(d), partner(d)}) {
          if (!vis[nb]) {
            vis[nb] = 1;
            q.push(nb);
          }
        }
      }
    }
    std::string comp_best;
    for (int root : comp) {
      std::fill(disc.begin(), disc.end(), -1);
      std::vector<int> order;
      order.reserve(comp.size());
      disc[root] = 0;
      order.push_back(root);
      for (std::size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int nb : {next_dart(d), partner(d)}) {
          if (disc[nb] < 0) {
            disc[nb] = static_cast<int>(order.size());
            order.push_back(nb);
          }
        }
      }
      std::ostringstream code;
      for (int d : order) {
        code << disc[next_dart(d)] << ',' << disc[partner(d)] << ','
             << (edges_[edge_of_dart(d)].sign > 0 ? '+' : '-') << ';';
      }
      std::string s = code.str();
      if (comp_best.empty() || s < comp_best) comp_best = s;
    }
    for (int d : comp) comp_done[d] = 1;
    component_codes.push_back(std::move(comp_best));
  }
  std::sort(component_codes.begin(), component_codes.end());
  std::ostringstream out;
  for (const auto& c : component_codes) out << '{' << c << '}';
  int isolated = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (rotations_[v].empty()) ++isolated;
  }
  out << "iso:" << isolated;
  return out.str();
}

}  // namespace ribbonforge
