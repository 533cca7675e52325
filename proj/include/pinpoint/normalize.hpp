#pragma once

#include <string>
#include <vector>

#include "pinpoint/ontology.hpp"

namespace pinpoint {

/// One axiom in the normal forms consumed by the saturation calculus.
struct NormalAxiom {
  enum class Kind {
    kSubsumption,   // A1 and ... and An [= B1 or ... or Bm   (n, m >= 0)
    kExistsRight,   // A [= some R.B
    kExistsLeft,    // some R.A [= B
    kForallRight,   // A [= all R.B
    kRoleInclusion  // R [= S
  };

  Kind kind = Kind::kSubsumption;
  std::vector<std::string> lhs;  // conjunction; the single A for the quantifier forms
  std::vector<std::string> rhs;  // disjunction; the single B for kExistsLeft
  std::string role;              // R for quantifier forms, sub role for kRoleInclusion
  std::string filler;            // B for kExistsRight/kForallRight, A for kExistsLeft
  std::string super_role;        // S for kRoleInclusion
  /// Source axiom. Every normal axiom comes from exactly one source axiom.
  AxiomIndex origin = 0;

  bool operator==(const NormalAxiom&) const = default;
};

std::string to_string(const NormalAxiom& a);

struct NormalizedTBox {
  std::vector<NormalAxiom> axioms;
  /// Names introduced by the structural transformation. They start with '#',
  /// which the text format never accepts, so they cannot clash with source names.
  std::vector<std::string> fresh_names;
};

/// Structural transformation, axiom by axiom. The result is a conservative
/// extension: it entails exactly the same inclusions over the source signature.
/// Tautological axioms produce no normal axioms.
NormalizedTBox normalize(const Ontology& o);

}  // namespace pinpoint
