#include "doctest.h"

#include "pinpoint/error.hpp"
#include "pinpoint/syntax.hpp"
#include "support/fixtures.hpp"

using namespace pinpoint;

TEST_CASE("parse assigns ids in textual order") {
  Ontology o = parse_ontology("(sub A B)\n(sub B C)");
  REQUIRE(o.size() == 2);
  CHECK(o[0].id == "ax1");
  CHECK(o[1].id == "ax2");
  CHECK(o[0].gci() == Gci{Concept::atom("A"), Concept::atom("B")});
  CHECK(o[1].gci() == Gci{Concept::atom("B"), Concept::atom("C")});
}

TEST_CASE("empty text parses to the empty ontology") {
  CHECK(parse_ontology("").empty());
  CHECK(parse_ontology("  # only a comment\n\n").empty());
}

TEST_CASE("explicit labels are kept") {
  Ontology o = parse_ontology("j1: (sub A (some r D))");
  REQUIRE(o.size() == 1);
  CHECK(o[0].id == "j1");
  CHECK(o[0].gci() == Gci{Concept::atom("A"), Concept::some("r", Concept::atom("D"))});
}

TEST_CASE("auto ids follow position when mixed with labels") {
  Ontology o = parse_ontology("x: (sub A B)\n(sub B C)\n(rsub r s)");
  CHECK(o.ids(o.all()) == std::vector<std::string>{"x", "ax2", "ax3"});
  CHECK(o[2].role_inclusion() == RoleInclusion{"r", "s"});
}

TEST_CASE("full concept grammar") {
  Ontology o = parse_ontology(
      "(sub (and A (or B (not C)) Top) (all r (some s Bot)))  # trailing comment");
  const Gci& g = o[0].gci();
  CHECK(g.lhs.kind == Concept::Kind::kAnd);
  CHECK(g.lhs.args.size() == 3);
  CHECK(g.lhs.args[1].kind == Concept::Kind::kOr);
  CHECK(g.lhs.args[1].args[1] == Concept::negation(Concept::atom("C")));
  CHECK(g.rhs == Concept::all("r", Concept::some("s", Concept::bot())));
}

TEST_CASE("malformed input reports line and column") {
  try {
    parse_ontology("(sub A B)\n(sub A");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_ontology("(sub A B C)"), ParseError);
  CHECK_THROWS_AS(parse_ontology("(and A)"), ParseError);
  CHECK_THROWS_AS(parse_ontology("(sub (and A) B)"), ParseError);
  CHECK_THROWS_AS(parse_ontology("(sub 1A B)"), ParseError);
  CHECK_THROWS_AS(parse_gci("(rsub r s)"), ParseError);
}

TEST_CASE("duplicate labels are rejected") {
  try {
    parse_ontology("a: (sub A B)\na: (sub B C)");
    FAIL("expected DuplicateId");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDuplicateId);
  }
}

TEST_CASE("assertions are rejected as unsupported") {
  for (const char* text : {"(inst a A)", "(type a A)", "(rel r a b)"}) {
    try {
      parse_ontology(text);
      FAIL("expected UnsupportedConstruct");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnsupportedConstruct);
    }
  }
}

TEST_CASE("serialize uses the canonical labelled form") {
  CHECK(serialize_ontology(Ontology{}) == "");
  CHECK(serialize_ontology(fixtures::o2()) == "ax1: (sub A B)\nax2: (sub B C)");
}

TEST_CASE("signature") {
  Axiom a{"x", Gci{Concept::atom("A"), Concept::some("r", Concept::atom("D"))}};
  Signature s = signature_of(a);
  CHECK(s.concepts == std::set<std::string>{"A", "D"});
  CHECK(s.roles == std::set<std::string>{"r"});
  CHECK(signature_of(Gci{Concept::top(), Concept::bot()}) == Signature{});
  CHECK(signature_of(fixtures::o2()).concepts == std::set<std::string>{"A", "B", "C"});
  CHECK(signature_of(fixtures::o2()).roles.empty());
}

TEST_CASE("axiom identity is by id, not structure") {
  Ontology o = parse_ontology("(sub A B)\n(sub A B)");
  CHECK(o.size() == 2);
  CHECK(o.select({"ax1"}) != o.select({"ax2"}));
  CHECK_THROWS_AS(o.select({"nope"}), Error);
}

TEST_CASE("axiom set algebra") {
  AxiomSet a{3, 1, 2, 1};
  CHECK(a.items() == std::vector<AxiomIndex>{1, 2, 3});
  AxiomSet b{2, 5};
  CHECK((a | b) == AxiomSet{1, 2, 3, 5});
  CHECK((a & b) == AxiomSet{2});
  CHECK((a - b) == AxiomSet{1, 3});
  CHECK(a.without(2) == AxiomSet{1, 3});
  CHECK(AxiomSet{2}.is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK_FALSE(AxiomSet{}.intersects(a));
}

TEST_CASE("families are ordered by size then members") {
  AxiomFamily f{AxiomSet{1, 2}, AxiomSet{3}, AxiomSet{0, 4}, AxiomSet{3}};
  normalize_family(f);
  CHECK(f == AxiomFamily{AxiomSet{3}, AxiomSet{0, 4}, AxiomSet{1, 2}});
}

TEST_CASE("property: parse and serialize round-trip on generated ontologies") {
  for (const auto& inst : fixtures::suite(100, 10)) {
    const std::string text = serialize_ontology(inst.ontology);
    Ontology back = parse_ontology(text);
    CHECK(back == inst.ontology);
    CHECK(serialize_ontology(back) == text);
  }
}

TEST_CASE("property: signature of an ontology is the union over its axioms") {
  for (const auto& inst : fixtures::suite(50, 10)) {
    Signature expected;
    for (const Axiom& a : inst.ontology) expected.merge(signature_of(a));
    CHECK(signature_of(inst.ontology) == expected);
  }
}
