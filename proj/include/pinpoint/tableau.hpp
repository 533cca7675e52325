#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "pinpoint/ontology.hpp"

namespace pinpoint {

struct ReasonerOptions {
  /// Maximum tableau node expansions per entailment test.
  std::size_t node_budget = 1'000'000;
};

namespace detail {
class ConceptPool;
}

/// Tableau-based entailment oracle for ALC with role inclusions.
///
/// Decides O' |= C [= D for sub-ontologies O' of a fixed source ontology by
/// testing C and not D for unsatisfiability. Concepts are kept in negation
/// normal form and interned; axioms with a concept name among the left-hand
/// conjuncts are absorbed into lazy unfolding rules, the rest are
/// internalized. Blocking is subset blocking against ancestors; unsatisfiable
/// labels are cached for the duration of a single test.
///
/// Exceeding the node budget throws Error(kResourceLimit); the oracle never
/// guesses.
class EntailmentOracle {
 public:
  explicit EntailmentOracle(const Ontology& o, ReasonerOptions options = {});
  ~EntailmentOracle();
  EntailmentOracle(EntailmentOracle&&) noexcept;
  EntailmentOracle& operator=(EntailmentOracle&&) noexcept;

  const Ontology& ontology() const { return *ontology_; }

  bool entails(const AxiomSet& subset, const Gci& goal);
  bool entails(const Gci& goal) { return entails(ontology_->all(), goal); }

  /// True iff C is satisfiable w.r.t. the sub-ontology.
  bool satisfiable(const AxiomSet& subset, const Concept& c);

  /// Number of entails()/satisfiable() calls since construction or reset.
  std::size_t calls() const { return calls_; }
  void reset_calls() { calls_ = 0; }
  void set_calls(std::size_t n) { calls_ = n; }

 private:
  struct Prepared;

  const Ontology* ontology_;
  ReasonerOptions options_;
  std::unique_ptr<detail::ConceptPool> pool_;
  std::vector<Prepared> prepared_;
  std::size_t calls_ = 0;
};

bool entails(const Ontology& o, const Gci& goal, ReasonerOptions options = {});

/// All A [= B over distinct concept names of sig(o) that o entails, sorted.
std::vector<Gci> classify(const Ontology& o, ReasonerOptions options = {});

}  // namespace pinpoint
