#pragma once

#include <cstdint>
#include <vector>

#include "ribbonforge/links.hpp"
#include "ribbonforge/ribbon_graph.hpp"

namespace ribbonforge {

inline constexpr int kExhaustiveEdgeBound = 7;

/// Every connected ribbon graph with at most max_edges edges: all rotation
/// systems up to relabeling, times all sign patterns. Includes the edgeless
/// single vertex. Deterministic order. max_edges <= 7; sizes grow steeply
/// past 5.
std::vector<RibbonGraph> exhaustive_corpus(int max_edges);

/// Seed-deterministic random connected ribbon graphs with 1..max_edges
/// edges. all_positive restricts to orientable (all-sign-positive) graphs.
std::vector<RibbonGraph> random_corpus(int max_edges, std::uint64_t seed, int count,
                                       bool all_positive = false);

/// Every connected orientable 4-regular map with 1..max_crossings vertices,
/// with all 2^v A/B labelings, plus the crossingless single free loop.
/// Universes that are not checkerboard colorable are included; callers
/// filter as needed.
std::vector<LinkUniverse> exhaustive_universes(int max_crossings);

}  // namespace ribbonforge
