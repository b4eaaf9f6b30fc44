#pragma once

#include <array>
#include <string>
#include <vector>

#include "ribbonforge/ribbon_graph.hpp"

namespace ribbonforge {

/// A pairing of the four darts at a 4-valent vertex into two strands.
using DartPair = std::array<int, 2>;
struct Pairing {
  DartPair a;
  DartPair b;

  /// Order-insensitive normal form for comparisons.
  Pairing normalized() const;
  bool operator==(const Pairing& rhs) const;
};

enum class MedialState { Uncut, Cut, Crossing };

/// 4-regular ribbon graph plus free loops (vertexless closed curves) and,
/// when built by medial(), a back-reference from each vertex to the source
/// edge it sits on. Vertex rotations are stored in the canonical slot order,
/// so the uncut/cut/crossing pairings are positional.
struct MedialGraph {
  RibbonGraph graph;
  int free_loops = 0;
  bool sourced = false;                  // built by medial() from a source graph
  std::vector<std::string> source_edge;  // per medial vertex when sourced

  bool has_back_reference() const { return sourced; }
  /// The uncut / cut / crossing pairing at a medial vertex.
  Pairing pairing(int vertex, MedialState state) const;
};

/// Topological medial graph: one 4-valent vertex per edge, one edge per
/// corner of the source rotation system, one free loop per isolated vertex.
/// A negative source edge swaps and half-twist-marks its far-end slots;
/// medial edge signs take one minus per marked end slot.
MedialGraph medial(const RibbonGraph& g);

/// Positional pairings for any 4-valent vertex of a 4-regular graph.
Pairing positional_pairing(const RibbonGraph& g, int vertex, MedialState state);

}  // namespace ribbonforge
