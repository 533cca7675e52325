#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pinpoint/normalize.hpp"
#include "pinpoint/ontology.hpp"

namespace pinpoint {

struct Literal {
  std::string name;
  bool negated = false;
  auto operator<=>(const Literal&) const = default;
};

/// A concept name or an existential some R.(l1 and ... and lk).
struct Disjunct {
  std::string name;  // concept name, or the role of an existential
  bool existential = false;
  std::vector<Literal> filler;
  auto operator<=>(const Disjunct&) const = default;
};

/// A derived fact: either a clause  (and lhs) [= (or rhs)  or a role
/// subsumption  sub [=* sup.
struct DerivedSubsumption {
  enum class Kind { kConcept, kRole };
  Kind kind = Kind::kConcept;
  std::vector<Literal> lhs;
  std::vector<Disjunct> rhs;
  std::string sub;
  std::string sup;
  bool operator==(const DerivedSubsumption&) const = default;
};

std::string to_string(const DerivedSubsumption& s);

enum class Rule {
  kInit,          // H [= A for A in H
  kNegation,      // drop A from the right when not A is in H
  kConjunction,   // hyperresolution with A1 and ... and An [= M
  kExistsIntro,   // A [= some R.B
  kExistsElim,    // some S.A [= B propagated back from a successor context
  kExistsBottom,  // successor context is unsatisfiable
  kForall,        // A [= all S.B pushed into a successor context
  kRoleInit,      // R [=* R
  kRoleChain,     // R [=* S, S [= T  gives  R [=* T
  kGoalBottom     // {A} [= Bot gives {A} [= B
};

const char* to_string(Rule r);

struct InferenceStep {
  Rule rule = Rule::kInit;
  std::vector<std::size_t> premises;   // fact ids
  std::vector<std::size_t> side;       // indices into the normalized TBox
  AxiomSet axioms;                     // source axioms of `side`
  std::size_t conclusion = 0;          // fact id
};

/// Every rule application of a saturation run, not only the first
/// derivation of each fact. Steps are recorded in derivation order: every
/// premise is the conclusion of an earlier step.
struct InferenceTrace {
  std::vector<DerivedSubsumption> facts;
  std::vector<InferenceStep> steps;
  /// Fact  {A} [= B  for goal A [= B; present iff the goal was derived.
  std::optional<std::size_t> goal_fact;

  bool concludes_goal() const { return goal_fact.has_value(); }
  /// One line per step: "RULE; premises; axioms; conclusion".
  std::string dump(const Ontology& o) const;
};

struct SaturationOptions {
  /// Maximum number of distinct derived facts.
  std::size_t fact_budget = 500'000;
  /// Maximum number of distinct inference steps.
  std::size_t step_budget = 4'000'000;
};

/// Saturates the normalized ontology from the context of the goal's left-hand
/// side and records every inference. Only goals between concept names are
/// supported (Error kInvalidArgument otherwise). Exceeding the budget throws
/// Error(kResourceLimit).
InferenceTrace saturate_with_tracing(const Ontology& o, const Gci& goal,
                                     SaturationOptions options = {});
InferenceTrace saturate_with_tracing(const NormalizedTBox& n, const Gci& goal,
                                     SaturationOptions options = {});

}  // namespace pinpoint
