#include "ribbonforge/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace ribbonforge {

namespace {

/// Min-over-roots BFS code of a map given by a successor permutation and a
/// partner involution on darts. Equal codes mean isomorphic labeled maps.
std::vector<int> map_code(const std::vector<int>& succ, const std::vector<int>& partner) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> best;
  std::vector<int> disc(n);
  std::vector<int> order;
  order.reserve(n);
  for (int root = 0; root < n; ++root) {
    std::fill(disc.begin(), disc.end(), -1);
    order.clear();
    disc[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int d = order[i];
      for (int nb : {succ[d], partner[d]}) {
        if (disc[nb] < 0) {
          disc[nb] = static_cast<int>(order.size());
          order.push_back(nb);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) {
      throw std::logic_error("map_code expects a connected map");
    }
    std::vector<int> code;
    code.reserve(2 * n);
    for (int d : order) {
      code.push_back(disc[succ[d]]);
      code.push_back(disc[partner[d]]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool transitive(const std::vector<int>& succ, const std::vector<int>& partner) {
  const int n = static_cast<int>(succ.size());
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int nb : {succ[d], partner[d]}) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++count;
        stack.push_back(nb);
      }
    }
  }
  return count == n;
}

std::vector<std::vector<int>> rotations_from_successor(const std::vector<int>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> rot;
  for (int d0 = 0; d0 < n; ++d0) {
    if (used[d0]) continue;
    std::vector<int> cycle;
    int d = d0;
    while (!used[d]) {
      used[d] = 1;
      cycle.push_back(d);
      d = succ[d];
    }
    rot.push_back(std::move(cycle));
  }
  return rot;
}

RibbonGraph edgeless_vertex() { return RibbonGraph::from_rotation_system({{}}, {}); }

}  // namespace

std::vector<RibbonGraph> exhaustive_corpus(int max_edges) {
  if (max_edges < 0) throw std::invalid_argument("max_edges must be nonnegative");
  if (max_edges > kExhaustiveEdgeBound) {
    throw std::invalid_argument("exhaustive bound exceeded: max_edges must be at most " +
                                std::to_string(kExhaustiveEdgeBound));
  }
  std::vector<RibbonGraph> out;
  out.push_back(edgeless_vertex());
  for (int m = 1; m <= max_edges; ++m) {
    const int n = 2 * m;
    std::vector<int> partner(n);
    for (int d = 0; d < n; ++d) partner[d] = d ^ 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> seen_codes;
    std::vector<std::vector<std::vector<int>>> reps;  // rotation systems
    do {
      if (!transitive(perm, partner)) continue;
      auto code = map_code(perm, partner);
      if (seen_codes.insert(std::move(code)).second) {
        reps.push_back(rotations_from_successor(perm));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Sign patterns on isomorphic maps can coincide as labeled signed maps;
    // a second canonical pass deduplicates those.
    std::set<std::string> seen_signed;
    for (const auto& rot : reps) {
      for (std::uint64_t signs = 0; signs < (1ULL << m); ++signs) {
        std::vector<int> sv(m);
        for (int e = 0; e < m; ++e) sv[e] = (signs >> e & 1ULL) ? -1 : 1;
        RibbonGraph g = RibbonGraph::from_rotation_system(rot, sv);
        if (seen_signed.insert(g.canonical_code()).second) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::vector<RibbonGraph> random_corpus(int max_edges, std::uint64_t seed, int count,
                                       bool all_positive) {
  if (max_edges < 1) throw std::invalid_argument("max_edges must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<RibbonGraph> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
    const int n = 2 * m;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> partner(n);
    for (int d = 0; d < n; ++d) partner[d] = d ^ 1;
    std::vector<int> sv(m, 1);
    if (!all_positive) {
      for (int e = 0; e < m; ++e) sv[e] = (rng() & 1ULL) ? -1 : 1;
    }
    if (!transitive(perm, partner)) continue;
    out.push_back(RibbonGraph::from_rotation_system(rotations_from_successor(perm), sv));
  }
  return out;
}

std::vector<LinkUniverse> exhaustive_universes(int max_crossings) {
  if (max_crossings < 0 || max_crossings > 5) {
    throw std::invalid_argument("exhaustive universes support at most 5 crossings");
  }
  std::vector<LinkUniverse> out;
  // The crossingless diagram: a single free loop.
  out.emplace_back(RibbonGraph({}, {}, {}), 1, std::vector<Pairing>{}, std::vector<Pairing>{});

  for (int v = 1; v <= max_crossings; ++v) {
    const int n = 4 * v;
    std::vector<int> succ(n);
    for (int d = 0; d < n; ++d) succ[d] = 4 * (d / 4) + (d % 4 + 1) % 4;

    std::set<std::vector<int>> seen_codes;
    std::vector<std::vector<int>> matchings;
    std::vector<int> partner(n, -1);
    // All perfect matchings on the darts, lexicographically.
    std::function<void()> rec = [&]() {
      int first = -1;
      for (int d = 0; d < n; ++d) {
        if (partner[d] < 0) {
          first = d;
          break;
        }
      }
      if (first < 0) {
        if (!transitive(succ, partner)) return;
        auto code = map_code(succ, partner);
        if (seen_codes.insert(std::move(code)).second) matchings.push_back(partner);
        return;
      }
      for (int d = first + 1; d < n; ++d) {
        if (partner[d] >= 0) continue;
        partner[first] = d;
        partner[d] = first;
        rec();
        partner[first] = -1;
        partner[d] = -1;
      }
    };
    rec();

    for (const auto& match : matchings) {
      // Edges from the matching; ribbon darts 2e, 2e+1.
      std::vector<int> dart_of(n, -1);
      std::vector<int> signs;
      int e = 0;
      for (int d = 0; d < n; ++d) {
        if (dart_of[d] >= 0) continue;
        dart_of[d] = 2 * e;
        dart_of[match[d]] = 2 * e + 1;
        signs.push_back(1);
        ++e;
      }
      std::vector<std::vector<int>> rot(v);
      for (int c = 0; c < v; ++c) {
        for (int s = 0; s < 4; ++s) rot[c].push_back(dart_of[4 * c + s]);
      }
      RibbonGraph g = RibbonGraph::from_rotation_system(rot, signs);
      for (std::uint64_t labels = 0; labels < (1ULL << v); ++labels) {
        std::vector<Pairing> a(v), b(v);
        for (int c = 0; c < v; ++c) {
          Pairing uncut = positional_pairing(g, c, MedialState::Uncut);
          Pairing cut = positional_pairing(g, c, MedialState::Cut);
          if (labels >> c & 1ULL) {
            a[c] = cut;
            b[c] = uncut;
          } else {
            a[c] = uncut;
            b[c] = cut;
          }
        }
        out.emplace_back(g, 0, std::move(a), std::move(b));
      }
    }
  }
  return out;
}

}  // namespace ribbonforge
