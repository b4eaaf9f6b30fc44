#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ribbonforge {

/// An edge of a ribbon graph: two half-edges (darts) and a sign.
/// The darts of edge i are the integers 2i and 2i+1; a negative sign
/// means the ribbon carries a half twist.
struct RibbonEdge {
  std::string id;
  int sign = 1;  // +1 or -1
};

struct SubgraphStats {
  int k = 0;   // connected components, isolated vertices included
  int r = 0;   // rank v - k
  int n = 0;   // nullity |A| - r
  int bc = 0;  // boundary components of the ribbon surface
  int t = 0;   // 0 orientable, 1 not
  int eg = 0;  // Euler genus k - bc + n
};

/// One representative boundary walk per boundary component. Each step
/// records the dart whose ribbon is crossed and the orientation flag held
/// on entry; isolated vertices appear as walks with no steps.
struct BoundaryWalk {
  std::vector<std::pair<int, int>> steps;  // (dart crossed, entry flag +-1)
  int isolated_vertex = -1;                // vertex index when the walk is a bare disk
};

/// Ribbon graph as a signed rotation system. Vertices hold cyclic
/// sequences of darts; dart d belongs to edge d/2 and its partner is d^1.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  /// rotations[v] lists darts in cyclic order; edge ids/signs per edge.
  RibbonGraph(std::vector<std::string> vertex_ids,
              std::vector<std::vector<int>> rotations,
              std::vector<RibbonEdge> edges);

  /// Vertices "v0..", edges "e0..": the common case for generated graphs.
  static RibbonGraph from_rotation_system(const std::vector<std::vector<int>>& rotations,
                                          const std::vector<int>& signs);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  const std::vector<int>& rotation(int v) const { return rotations_.at(v); }
  const RibbonEdge& edge(int e) const { return edges_.at(e); }
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  static int edge_of_dart(int d) { return d / 2; }
  static int partner(int d) { return d ^ 1; }
  int vertex_of_dart(int d) const { return dart_vertex_.at(d); }
  int dart_position(int d) const { return dart_pos_.at(d); }
  /// Rotation successor / predecessor of a dart at its vertex.
  int next_dart(int d) const;
  int prev_dart(int d) const;

  bool is_loop(int e) const;
  bool is_bridge(int e) const;
  /// Connected in the usual graph sense; edgeless single vertex counts.
  bool connected() const;
  int degree(int v) const { return static_cast<int>(rotations_.at(v).size()); }

  /// Invariant diagnostics; empty means valid. Construction via the public
  /// constructors already enforces these, so this is mainly for IO input.
  static std::vector<std::string> diagnose(const std::vector<std::vector<int>>& rotations,
                                           std::size_t edge_count);

  // --- subgraph invariants -------------------------------------------------

  /// Stats of the spanning subgraph on an edge subset (bitmask over edges).
  SubgraphStats stats(std::uint64_t edge_mask) const;
  SubgraphStats stats() const { return stats(full_mask()); }
  SubgraphStats stats(const std::vector<std::string>& edge_ids) const;
  std::uint64_t full_mask() const;
  std::uint64_t mask_of(const std::vector<std::string>& edge_ids) const;

  /// Representative boundary walks of the spanning subgraph.
  std::vector<BoundaryWalk> boundary_walks(std::uint64_t edge_mask) const;

  // --- constructions -------------------------------------------------------

  RibbonGraph deleted(int e) const;
  RibbonGraph contracted(int e) const;  // e must not be a loop
  RibbonGraph vertex_flipped(int v) const;
  RibbonGraph disjoint_union(const RibbonGraph& other) const;
  RibbonGraph one_point_join(const RibbonGraph& other, int v_this, int v_other) const;
  RibbonGraph dual() const;
  /// All edge signs made +1 by vertex flips; requires an orientable graph.
  RibbonGraph orientation_normalized() const;

  /// Deterministic serialization with the graph's own labels.
  std::string serialize() const;
  /// Label-free canonical code; equal codes mean isomorphic labeled maps.
  std::string canonical_code() const;

 private:
  void index_darts();

  std::vector<std::string> vertex_ids_;
  std::vector<std::vector<int>> rotations_;
  std::vector<RibbonEdge> edges_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_pos_;
};

/// Plain union-find over n items.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace ribbonforge
