#include "ribbonforge/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

ChordDiagram::ChordDiagram(std::vector<int> word, std::vector<int> signs,
                           std::vector<std::string> chord_ids)
    : word_(std::move(word)), signs_(std::move(signs)), chord_ids_(std::move(chord_ids)) {
  std::vector<int> count(signs_.size(), 0);
  for (int c : word_) {
    if (c < 0 || c >= chord_count()) throw std::invalid_argument("word references unknown chord");
    ++count[c];
  }
  for (int c = 0; c < chord_count(); ++c) {
    if (count[c] != 2) throw std::invalid_argument("each chord label must occur exactly twice");
    if (signs_[c] != 1 && signs_[c] != -1) throw std::invalid_argument("chord sign must be +1 or -1");
  }
  if (chord_ids_.empty()) {
    chord_ids_.resize(chord_count());
    for (int c = 0; c < chord_count(); ++c) chord_ids_[c] = std::string(1, static_cast<char>('a' + c % 26)) +
                                                            (c >= 26 ? std::to_string(c / 26) : "");
  }
  if (static_cast<int>(chord_ids_.size()) != chord_count()) {
    throw std::invalid_argument("chord id arity mismatch");
  }
}

ChordDiagram ChordDiagram::from_labels(const std::vector<std::string>& labels,
                                       const std::vector<int>& signs_by_first_occurrence) {
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  std::vector<int> word;
  for (const auto& l : labels) {
    auto it = index.find(l);
    if (it == index.end()) {
      index.emplace(l, static_cast<int>(ids.size()));
      word.push_back(static_cast<int>(ids.size()));
      ids.push_back(l);
    } else {
      word.push_back(it->second);
    }
  }
  if (signs_by_first_occurrence.size() != ids.size()) {
    throw std::invalid_argument("one sign per chord expected");
  }
  return ChordDiagram(std::move(word), signs_by_first_occurrence, std::move(ids));
}

int ChordDiagram::chord_index(const std::string& id) const {
  for (int c = 0; c < chord_count(); ++c) {
    if (chord_ids_[c] == id) return c;
  }
  throw std::invalid_argument("unknown chord id: " + id);
}

std::pair<int, int> ChordDiagram::feet(int chord) const {
  int a = -1, b = -1;
  for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
    if (word_[i] == chord) {
      if (a < 0) {
        a = i;
      } else {
        b = i;
      }
    }
  }
  if (b < 0) throw std::invalid_argument("unknown chord index");
  return {a, b};
}

ChordDiagram ChordDiagram::without_chord(int chord) const {
  std::uint64_t mask = 0;
  for (int c = 0; c < chord_count(); ++c) {
    if (c != chord) mask |= 1ULL << c;
  }
  return subdiagram(mask);
}

ChordDiagram ChordDiagram::subdiagram(std::uint64_t chord_mask) const {
  std::vector<int> remap(chord_count(), -1);
  std::vector<int> signs;
  std::vector<std::string> ids;
  for (int c = 0; c < chord_count(); ++c) {
    if (chord_mask >> c & 1ULL) {
      remap[c] = static_cast<int>(signs.size());
      signs.push_back(signs_[c]);
      ids.push_back(chord_ids_[c]);
    }
  }
  std::vector<int> word;
  for (int c : word_) {
    if (remap[c] >= 0) word.push_back(remap[c]);
  }
  return ChordDiagram(std::move(word), std::move(signs), std::move(ids));
}

RibbonGraph ChordDiagram::to_bouquet() const {
  std::vector<int> seen(chord_count(), 0);
  std::vector<int> rot;
  for (int c : word_) {
    rot.push_back(2 * c + seen[c]);
    ++seen[c];
  }
  std::vector<RibbonEdge> edges(chord_count());
  for (int c = 0; c < chord_count(); ++c) edges[c] = {chord_ids_[c], signs_[c]};
  return RibbonGraph({"v0"}, {rot}, std::move(edges));
}

std::string ChordDiagram::canonical_word() const {
  // Minimal rotation of the word pattern with chords renamed in order of
  // first appearance; signs ride along.
  std::string best;
  int len = static_cast<int>(word_.size());
  for (int start = 0; start < std::max(len, 1); ++start) {
    std::vector<int> rename(chord_count(), -1);
    int next_name = 0;
    std::ostringstream s;
    for (int i = 0; i < len; ++i) {
      int c = word_[(start + i) % len];
      if (rename[c] < 0) rename[c] = next_name++;
      s << rename[c] << (signs_[c] > 0 ? '+' : '-') << '.';
    }
    std::string cand = s.str();
    if (best.empty() || cand < best) best = cand;
  }
  if (len == 0) best = "empty";
  return best;
}

std::string ChordDiagram::text() const {
  std::ostringstream s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s << ' ';
    s << chord_ids_[word_[i]];
  }
  s << " |";
  for (int c = 0; c < chord_count(); ++c) {
    s << ' ' << chord_ids_[c] << (signs_[c] > 0 ? '+' : '-');
  }
  return s.str();
}

ChordDiagram to_chord_diagram(const RibbonGraph& g) {
  if (g.vertex_count() != 1) {
    throw std::invalid_argument("chord diagram extraction needs a bouquet (exactly one vertex)");
  }
  std::vector<int> word;
  for (int d : g.rotation(0)) word.push_back(RibbonGraph::edge_of_dart(d));
  std::vector<int> signs(g.edge_count());
  std::vector<std::string> ids(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    signs[e] = g.edge(e).sign;
    ids[e] = g.edge(e).id;
  }
  return ChordDiagram(std::move(word), std::move(signs), std::move(ids));
}

}  // namespace ribbonforge
