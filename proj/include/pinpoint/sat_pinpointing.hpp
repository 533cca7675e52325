#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pinpoint/ontology.hpp"
#include "pinpoint/sat.hpp"
#include "pinpoint/saturation.hpp"

namespace pinpoint {

struct VarLabel {
  enum class Kind { kAxiom, kDerived };
  Kind kind = Kind::kAxiom;
  std::size_t index = 0;  // axiom index or fact id of the trace
};

/// Horn encoding of a traced saturation run: one clause per inference step
/// (premises and axiom selectors imply the conclusion), a unit p_b for each
/// axiom b, and the negated goal. Unsatisfiable iff the goal is derivable
/// from the axioms.
struct PinpointingFormula {
  Cnf cnf;
  std::vector<VarLabel> labels;  // labels[v - 1] describes variable v
  std::vector<bool> hard;        // every clause except the axiom units
  std::map<AxiomIndex, std::size_t> axiom_units;  // axiom -> clause index of p_b
  int goal_var = 0;
  std::size_t goal_clause = 0;   // clause index of the negated goal

  int axiom_var(AxiomIndex b) const { return static_cast<int>(b) + 1; }
};

PinpointingFormula encode(const Ontology& o, const Gci& goal, const InferenceTrace& trace);
/// Saturates only the star module of the goal's signature.
PinpointingFormula encode(const Ontology& o, const Gci& goal);

/// Keeps the clauses whose head is backward-reachable from the goal variable,
/// plus the negated goal. Variable numbering is unchanged.
PinpointingFormula restrict_to_cone(const PinpointingFormula& f);

struct MembershipResult {
  AxiomSet union_set;
  std::size_t sat_calls = 0;
  std::size_t cone_clauses = 0;
  std::size_t cone_axioms = 0;
};

/// Union of all justifications as the axioms whose unit clause lies in a
/// minimal unsatisfiable subset of the goal's cone. Throws Error(kNotEntailed).
MembershipResult union_via_membership(const Ontology& o, const Gci& goal);

/// DIMACS text with one "c axiom <id> var <k>" line per axiom selector.
std::string to_dimacs(const PinpointingFormula& f, const Ontology& o);

}  // namespace pinpoint
