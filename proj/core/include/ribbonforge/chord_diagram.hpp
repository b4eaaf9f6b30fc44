#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbonforge/ribbon_graph.hpp"

namespace ribbonforge {

/// Signed chord diagram: a cyclic word in which every chord label occurs
/// exactly twice, plus a sign per chord. Encodes a one-vertex ribbon graph.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// word holds chord indices 0..m-1, each exactly twice; signs per chord.
  ChordDiagram(std::vector<int> word, std::vector<int> signs,
               std::vector<std::string> chord_ids = {});

  static ChordDiagram from_labels(const std::vector<std::string>& labels,
                                  const std::vector<int>& signs_by_first_occurrence);

  int chord_count() const { return static_cast<int>(signs_.size()); }
  const std::vector<int>& word() const { return word_; }
  int sign(int chord) const { return signs_.at(chord); }
  const std::string& chord_id(int chord) const { return chord_ids_.at(chord); }
  int chord_index(const std::string& id) const;

  /// Positions (two) of a chord in the word.
  std::pair<int, int> feet(int chord) const;

  ChordDiagram without_chord(int chord) const;
  ChordDiagram subdiagram(std::uint64_t chord_mask) const;

  /// The one-vertex ribbon graph this diagram encodes.
  RibbonGraph to_bouquet() const;

  /// Equality as cyclic words up to chord relabeling.
  std::string canonical_word() const;
  bool equivalent(const ChordDiagram& other) const {
    return canonical_word() == other.canonical_word();
  }

  std::string text() const;

 private:
  std::vector<int> word_;
  std::vector<int> signs_;
  std::vector<std::string> chord_ids_;
};

/// Chord diagram of a bouquet (single-vertex graph, all loops).
ChordDiagram to_chord_diagram(const RibbonGraph& g);

}  // namespace ribbonforge
