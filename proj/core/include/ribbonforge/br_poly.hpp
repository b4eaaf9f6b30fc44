#pragma once

#include <stdexcept>
#include <string>

#include "ribbonforge/chord_diagram.hpp"
#include "ribbonforge/laurent.hpp"
#include "ribbonforge/ribbon_graph.hpp"

namespace ribbonforge {

/// Variables (x, y, z, w) with w idempotent.
const VarTable& r_table();
/// Variables (x-1, y, z, w): the state-sum basis in which substitutions of
/// x-1 by monomial fractions stay monomial.
const VarTable& r_basis_table();

/// Ribbon graph polynomial by the spanning-subgraph state sum, expanded in
/// (x, y, z, w).
LaurentPoly r_state_sum(const RibbonGraph& g);
/// Same sum kept in the (x-1, y, z, w) basis.
LaurentPoly r_state_sum_basis(const RibbonGraph& g);

/// Ribbon graph polynomial by deletion-contraction with embedded bouquets
/// as terminal forms. Equals r_state_sum exactly.
LaurentPoly r_delcon(const RibbonGraph& g);

/// Subdiagram state sum for a signed chord diagram (one-vertex graphs).
LaurentPoly bouquet_eval(const ChordDiagram& d);

/// Canonical diagram parameters: i chords, j interlocking positive pairs,
/// k isolated negative chords.
struct CanonicalForm {
  int i = 0;
  int j = 0;
  int k = 0;
};

/// Classify a diagram by its invariants (chord count, boundary components,
/// orientability); the contract bouquet_eval(d) == canonical_product(form)
/// is enforced by tests.
CanonicalForm canonical_form(const ChordDiagram& d);

/// The canonical diagram D_ijk itself.
ChordDiagram canonical_diagram(const CanonicalForm& f);

/// (1+y)^(i-2j-k) (y^2 z^2 + 2y + 1)^j (1+yzw)^k over r_table().
LaurentPoly canonical_product(const CanonicalForm& f);

/// Single-step rewrites about a pivot chord. The rotation applies to a
/// positive pivot and exchanges the two arcs with compensating one-step
/// rotations; the twist applies to a negative pivot and additionally
/// reverses the moved segments and toggles the signs of chords linking
/// them to the rest. Both preserve the diagram's polynomial and that of
/// the diagram minus the pivot, and both are involutions.
ChordDiagram rotate_move(const ChordDiagram& d, int chord);
ChordDiagram twist_move(const ChordDiagram& d, int chord);
/// True when a non-pivot chord joins the moved segments to the rest; the
/// deletion-contraction identity for the move then carries coefficient 1,
/// otherwise x.
bool move_mu_is_one(const ChordDiagram& d, int chord);

struct RelationViolated : std::domain_error {
  explicit RelationViolated(const std::string& which)
      : std::domain_error("recipe relation violated: " + which) {}
};
struct NonInvertibleAlpha : std::domain_error {
  NonInvertibleAlpha() : std::domain_error("alpha must be an invertible monomial") {}
};

/// Data of a deletion-contraction invariant: its values on the three small
/// canonical diagrams plus the ring elements of the translation.
struct RecipeSpec {
  LaurentPoly alpha, x, q, r, s, u, v;
};

/// alpha^k(G) * R(G; x, alpha^-1 q - 1, u, v), after checking the spec
/// relations (q-a)^2 u^2 = a(s-2q+a), (q-a)uv = r-a, v = v^2.
LaurentPoly recipe_evaluate(const RibbonGraph& g, const RecipeSpec& spec);

/// The identity spec (reproduces the polynomial itself) over r_table().
RecipeSpec identity_recipe_spec();
/// The spec of the oriented three-variable invariant: u = z^(1/2), v = w.
RecipeSpec c_polynomial_recipe_spec();

/// Classical Tutte polynomial of the underlying abstract graph,
/// T(G; x, y) = R(G; x, y-1, 1, 1).
LaurentPoly classical_tutte(const RibbonGraph& g);
const VarTable& tutte_table();

}  // namespace ribbonforge
