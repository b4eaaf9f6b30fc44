#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbonforge/laurent.hpp"
#include "ribbonforge/medial.hpp"
#include "ribbonforge/ribbon_graph.hpp"
#include "ribbonforge/transition.hpp"

namespace ribbonforge {

struct NotCheckerboardColorable : std::domain_error {
  NotCheckerboardColorable() : std::domain_error("universe admits no checkerboard coloring") {}
};

/// Surface-embedded universe of a virtual link: an orientable 4-regular
/// ribbon graph plus free loops, with the A- and B-splitting labelled at
/// every crossing. Stored orientation-normalized (all edge signs +1).
class LinkUniverse {
 public:
  LinkUniverse(RibbonGraph graph, int free_loops, std::vector<Pairing> a_split,
               std::vector<Pairing> b_split);

  const RibbonGraph& graph() const { return graph_; }
  int free_loops() const { return free_loops_; }
  int crossing_count() const { return graph_.vertex_count(); }
  const Pairing& a_split(int v) const { return a_.at(v); }
  const Pairing& b_split(int v) const { return b_.at(v); }

  /// Universe with the A and B labels exchanged at every crossing.
  LinkUniverse with_swapped_labels() const;

 private:
  RibbonGraph graph_;
  int free_loops_ = 0;
  std::vector<Pairing> a_, b_;
};

/// Faces of the universe (boundary components of its ribbon surface) with a
/// green/white 2-coloring alternating around every crossing.
struct CheckerboardColoring {
  std::vector<int> face_of_dart;  // face id of the corner (d, next d)
  int face_count = 0;
  std::vector<bool> green;  // per face id
};

/// Alternating face 2-coloring, green chosen per constraint component so
/// the face containing the lowest dart is green. Throws
/// NotCheckerboardColorable when the corner constraints form an odd cycle.
CheckerboardColoring checkerboard_color(const LinkUniverse& u);
std::optional<CheckerboardColoring> try_checkerboard_color(const LinkUniverse& u);

/// Orientable ribbon graph (topological signs all +1) with an auxiliary
/// crossing sign per edge recording over/under information.
struct SignedRibbonGraph {
  RibbonGraph graph;
  std::map<std::string, int> crossing_sign;  // per edge id
};

/// Graph on the green faces: one vertex per green face, one edge per
/// crossing, rotations following the green boundary walks. The crossing
/// sign of an edge is +1 exactly when the A-splitting at that crossing
/// merges the green corners (equivalently: when A is the uncut pairing of
/// the green-face medial).
SignedRibbonGraph green_face_graph(const LinkUniverse& u, const CheckerboardColoring& coloring);

/// Variables (A, B, d) of bracket computations.
const VarTable& bracket_table();

/// Generalized Kauffman bracket: sum over A/B states of
/// A^a(S) B^b(S) d^(c(S)-1).
LaurentPoly kauffman_bracket(const LinkUniverse& u);

/// The weight system the link diagram induces on its universe: pair weight
/// sqrt(A) on A-pairs and sqrt(B) on B-pairs.
WeightSystem link_weight_system(const LinkUniverse& u);

/// Variables (x-1, y, z) of the signed ribbon graph polynomial.
const VarTable& signed_r_table();

/// Signed ribbon graph polynomial: sum over edge subsets F of
/// (x-1)^(r(G)-r(F)+s(F)) y^(n(F)-s(F)) z^(k(F)-bc(F)+n(F)) with
/// s(F) = (negative edges in F - negative edges outside F)/2.
LaurentPoly signed_r(const SignedRibbonGraph& sg);

/// Exact check of the bracket identity
/// [L](A,B,d) = A^r B^n d^(k-1) R_sgn(Bd/A + 1, Ad/B, 1/d)
/// and of the signed transition identity on the green-face medial.
VerifyResult verify_chmutov_pak(const LinkUniverse& u);

}  // namespace ribbonforge
