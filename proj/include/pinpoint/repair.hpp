#pragma once

#include "pinpoint/ontology.hpp"
#include "pinpoint/tableau.hpp"

namespace pinpoint {

struct RepairSet {
  AxiomFamily repairs;
  /// All members are repairs of maximum cardinality.
  bool optimal = true;
};

/// All inclusion-minimal hitting sets. Throws Error(kEmptyMember) if a member
/// is empty and Error(kPreconditionViolated) if the family is empty.
AxiomFamily minimal_hitting_sets(const AxiomFamily& family);

/// Minimal hitting sets of smallest cardinality, by branch and bound.
AxiomFamily smallest_hitting_sets(const AxiomFamily& family);

/// Optimal repairs: complements of the core axioms when the core is
/// non-empty, otherwise complements of the smallest hitting sets of all
/// justifications. Throws Error(kNotEntailed) and Error(kNoRepair).
RepairSet optimal_repairs(EntailmentOracle& oracle, const Gci& goal);

/// Same result computed through the hitting sets even when the core is
/// non-empty.
RepairSet optimal_repairs_by_hitting_sets(EntailmentOracle& oracle, const Gci& goal);

/// r does not entail the goal and adding back any other axiom restores it.
bool is_repair(EntailmentOracle& oracle, const Gci& goal, const AxiomSet& r);

}  // namespace pinpoint
