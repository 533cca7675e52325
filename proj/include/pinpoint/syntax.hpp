#pragma once

#include <string>
#include <string_view>

#include "pinpoint/ontology.hpp"

namespace pinpoint {

// Ontology text format, one axiom per line, '#' comments:
//
//   line    := [ID ':'] axiom
//   axiom   := '(sub' C C ')' | '(rsub' NAME NAME ')'
//   C       := NAME | 'Top' | 'Bot' | '(not' C ')' | '(and' C C+ ')'
//            | '(or' C C+ ')' | '(some' NAME C ')' | '(all' NAME C ')'
//   NAME    := [A-Za-z_][A-Za-z0-9_.-]*
//
// Unlabelled axioms get ax<k>, k being the 1-based axiom position.
// Assertion forms ('(inst', '(type', '(rel') are rejected.

/// Throws ParseError, Error(kDuplicateId) or Error(kUnsupportedConstruct).
Ontology parse_ontology(std::string_view text);

/// Single GCI in the axiom grammar, e.g. "(sub A C)". No label allowed.
Gci parse_gci(std::string_view text);

Concept parse_concept(std::string_view text);

/// Canonical form: "id: axiom" lines joined by '\n', no trailing newline.
std::string serialize_ontology(const Ontology& o);

/// Reads and parses a file; Error(kIo) when it cannot be read.
Ontology load_ontology(const std::string& path);

}  // namespace pinpoint
