#pragma once

#include "pinpoint/ontology.hpp"

namespace pinpoint {

// Syntactic locality for ALC with role inclusions. An axiom is bot-local
// (top-local) w.r.t. a signature when replacing every concept and role name
// outside the signature by the empty set (the full domain, the universal
// relation) makes it a tautology, decided by the usual syntactic grammar.

bool is_bot_local(const Axiom& axiom, const Signature& sig);
bool is_top_local(const Axiom& axiom, const Signature& sig);

/// Bot- and top-module extraction alternated to a fixpoint. Returns a subset
/// of `subset` (default: all of o), in source order.
AxiomSet extract_star_module(const Ontology& o, const Signature& sig);
AxiomSet extract_star_module(const Ontology& o, const AxiomSet& subset, const Signature& sig);

}  // namespace pinpoint
