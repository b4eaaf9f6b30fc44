#pragma once

#include <map>
#include <string>
#include <vector>

#include "ribbonforge/laurent.hpp"
#include "ribbonforge/medial.hpp"
#include "ribbonforge/ribbon_graph.hpp"

namespace ribbonforge {

/// One admissible reconfiguration at a 4-valent vertex: a pairing of its
/// darts with a pair weight per strand; the vertex state weight is the
/// product of the two.
struct PairingOption {
  Pairing pairing;
  LaurentPoly weight_a;
  LaurentPoly weight_b;
};

/// Pair-weight assignment at every 4-valent vertex.
class WeightSystem {
 public:
  WeightSystem() = default;
  WeightSystem(VarTable table, std::vector<std::vector<PairingOption>> per_vertex)
      : table_(std::move(table)), per_vertex_(std::move(per_vertex)) {}

  const VarTable& table() const { return table_; }
  int vertex_count() const { return static_cast<int>(per_vertex_.size()); }
  const std::vector<PairingOption>& options(int v) const { return per_vertex_.at(v); }
  std::vector<PairingOption>& options(int v) { return per_vertex_.at(v); }

 private:
  VarTable table_;
  std::vector<std::vector<PairingOption>> per_vertex_;
};

/// A chosen pairing per vertex (indices into the weight system's options).
using GraphState = std::vector<int>;

/// Medial weight system: uncut states weigh alpha, cut states beta, the
/// crossing state zero; pair weights are the square roots, carried on half
/// exponents. alpha and beta must be monomials with exact square roots.
WeightSystem medial_weights(const MedialGraph& m, const LaurentPoly& alpha, const LaurentPoly& beta);

/// Exchange of the first two options' weights at every vertex (alpha <-> beta
/// for medial systems).
WeightSystem dual_weights(const WeightSystem& w);

/// Medial weights with alpha and beta exchanged exactly at the medial
/// vertices whose source edge carries a negative crossing sign.
WeightSystem signed_weights(const MedialGraph& m, const LaurentPoly& alpha, const LaurentPoly& beta,
                            const std::map<std::string, int>& crossing_signs);

/// Generalized transition polynomial: sum over graph states of the state
/// weight times t^(number of closed curves, free loops included).
LaurentPoly q_transition(const RibbonGraph& four_regular, int free_loops, const WeightSystem& w,
                         const std::string& tvar);
LaurentPoly q_transition(const MedialGraph& m, const WeightSystem& w, const std::string& tvar);

/// Curves after applying one pairing per vertex (free loops not included).
int state_components(const RibbonGraph& four_regular, const std::vector<Pairing>& choice);

struct VerifyResult {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Variables (alpha, beta, t) used by the symbolic identity checks.
const VarTable& transition_table();

/// Exact check of the medial identity
/// Q(G_m; W, t) = alpha^r(G) beta^n(G) t^k(G) R(G; beta t/alpha + 1, alpha t/beta, 1/t, 1),
/// plus an independent rational spot evaluation.
VerifyResult verify_transpoly(const RibbonGraph& g);

/// Circuit partition polynomial j of the medial of a plane graph;
/// equals x^k(G) T(G; x+1, x+1).
LaurentPoly circuit_partition(const RibbonGraph& g, const std::string& xvar = "x");

struct NonPlanarInput : std::domain_error {
  NonPlanarInput() : std::domain_error("circuit partition needs a plane graph (orientable, Euler genus 0)") {}
};

/// Exact check of the two-variable duality identity and of the
/// transition-side form Q(G*_m; W, t) = Q(G_m; W*, t).
VerifyResult verify_duality(const RibbonGraph& g);

}  // namespace ribbonforge
