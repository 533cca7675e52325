#include "doctest.h"

#include "pinpoint/blackbox.hpp"
#include "pinpoint/error.hpp"
#include "pinpoint/locality.hpp"
#include "support/fixtures.hpp"

using namespace pinpoint;
using fixtures::goal;
using fixtures::ids;

namespace {

Signature sig(std::set<std::string> concepts, std::set<std::string> roles = {}) {
  return Signature{std::move(concepts), std::move(roles)};
}

Axiom axiom(const char* text) { return parse_ontology(text)[0]; }

// Justifications of small modules by the definition, used as the reference.
AxiomFamily reference_justifications(EntailmentOracle& oracle, const Gci& g) {
  return brute_force_justifications(oracle, g).justifications;
}

}  // namespace

TEST_CASE("locality of single axioms") {
  CHECK(is_top_local(axiom("(sub A (some r D))"), sig({"A", "C"})));
  CHECK_FALSE(is_bot_local(axiom("(sub A B)"), sig({"A", "B"})));
  CHECK(is_bot_local(axiom("(sub D B)"), sig({"B"})));
  CHECK_FALSE(is_top_local(axiom("(sub D B)"), sig({"B"})));
  CHECK(is_bot_local(axiom("(sub (some r A) B)"), sig({"A", "B"})));
  CHECK_FALSE(is_bot_local(axiom("(sub (some r A) B)"), sig({"A", "B"}, {"r"})));
  CHECK(is_bot_local(axiom("(rsub r s)"), sig({}, {"s"})));
  CHECK(is_top_local(axiom("(rsub r s)"), sig({}, {"r"})));
  CHECK(is_bot_local(axiom("(sub (and A X) B)"), sig({"A", "B"})));
  CHECK(is_top_local(axiom("(sub A (or B X))"), sig({"A", "B"})));
  CHECK(is_bot_local(axiom("(sub A (all r B))"), sig({"A", "B"})));
}

TEST_CASE("star module") {
  CHECK(extract_star_module(Ontology{}, sig({"A"})).empty());
  Ontology o1 = fixtures::o1();
  CHECK(extract_star_module(o1, sig({"A", "C"})) == ids(o1, {"ax1", "ax2", "ax3"}));
  Ontology o = parse_ontology("(sub A B)\n(sub E F)\n(sub B C)");
  CHECK(extract_star_module(o, sig({"A", "C"})) == ids(o, {"ax1", "ax3"}));
}

TEST_CASE("property: module is idempotent and keeps every justification") {
  for (const auto& inst : fixtures::suite(80, 6)) {
    EntailmentOracle oracle(inst.ontology);
    for (const Gci& g : classify(inst.ontology)) {
      const Signature s = signature_of(g);
      const AxiomSet m = extract_star_module(inst.ontology, s);
      CHECK(extract_star_module(inst.ontology, m, s) == m);
      CHECK(oracle.entails(m, g));
      for (const auto& j : reference_justifications(oracle, g)) CHECK(j.is_subset_of(m));
    }
  }
}

TEST_CASE("core on the worked examples") {
  Ontology o1 = fixtures::o1(), o2 = fixtures::o2(), o3 = fixtures::o3();
  EntailmentOracle a(o1), b(o2), c(o3);
  CHECK(compute_core(a, goal("(sub A C)")).empty());
  CHECK(compute_core(b, goal("(sub A C)")) == ids(o2, {"ax1", "ax2"}));
  CHECK(compute_core(c, goal("(sub A C)")) == ids(o3, {"ax1"}));
}

TEST_CASE("core requires entailment") {
  Ontology o1 = fixtures::o1();
  EntailmentOracle a(o1);
  try {
    compute_core(a, goal("(sub C A)"));
    FAIL("expected NotEntailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEntailed);
  }
}

TEST_CASE("single justification skips core axioms") {
  Ontology o2 = fixtures::o2(), o1 = fixtures::o1();
  EntailmentOracle b(o2);
  const AxiomSet core = ids(o2, {"ax1", "ax2"});
  b.reset_calls();
  CHECK(single_justification(b, goal("(sub A C)"), core) == core);
  CHECK(b.calls() == 0);

  EntailmentOracle a(o1);
  CHECK(single_justification(a, goal("(sub A C)"), AxiomSet{}) == ids(o1, {"ax3"}));
}

TEST_CASE("union on the worked examples") {
  Ontology o1 = fixtures::o1(), o2 = fixtures::o2(), o3 = fixtures::o3();
  EntailmentOracle a(o1), b(o2), c(o3);

  PinpointResult r1 = union_of_all_justifications(a, goal("(sub A C)"), AxiomSet{});
  CHECK(r1.union_set == ids(o1, {"ax1", "ax2", "ax3"}));
  CHECK_FALSE(r1.early_return);

  PinpointResult r2 = union_of_all_justifications(b, goal("(sub A C)"), ids(o2, {"ax1", "ax2"}));
  CHECK(r2.union_set == ids(o2, {"ax1", "ax2"}));
  CHECK(r2.early_return);
  CHECK(r2.justifications == AxiomFamily{ids(o2, {"ax1", "ax2"})});

  const AxiomIndex ax1 = *o3.find("ax1");
  PinpointResult r3 = union_of_all_justifications(c, goal("(sub A C)"), AxiomSet{ax1});
  CHECK(r3.union_set == o3.all());
  for (AxiomIndex label : r3.edge_labels) CHECK(label != ax1);
}

TEST_CASE("tautological goals have the empty justification") {
  Ontology o1 = fixtures::o1();
  EntailmentOracle a(o1);
  const Gci g = goal("(sub A Top)");
  CHECK(compute_core(a, g).empty());
  PinpointResult r = union_of_all_justifications(a, g, AxiomSet{});
  CHECK(r.union_set.empty());
  CHECK(r.justifications == AxiomFamily{AxiomSet{}});
  CHECK(enumerate_all_justifications(a, g) == AxiomFamily{AxiomSet{}});
}

TEST_CASE("enumeration on the worked examples") {
  Ontology o1 = fixtures::o1(), o2 = fixtures::o2(), o3 = fixtures::o3();
  EntailmentOracle a(o1), b(o2), c(o3);
  CHECK(enumerate_all_justifications(a, goal("(sub A C)")) ==
        fixtures::family(o1, {{"ax3"}, {"ax1", "ax2"}}));
  CHECK(enumerate_all_justifications(b, goal("(sub A C)")) ==
        fixtures::family(o2, {{"ax1", "ax2"}}));
  CHECK(enumerate_all_justifications(c, goal("(sub A C)")) ==
        fixtures::family(o3, {{"ax1", "ax2"}, {"ax1", "ax3", "ax4"}}));
}

TEST_CASE("path redundancy") {
  SearchTree t;
  const auto w = t.add_child(SearchTree::kRoot, 1);
  CHECK(is_path_redundant(t, SearchTree::kRoot, AxiomSet{1, 2}, {w}));
  t.add_child(w, 3);
  CHECK(is_path_redundant(t, SearchTree::kRoot, AxiomSet{1}, {w}));
  CHECK_FALSE(is_path_redundant(t, SearchTree::kRoot, AxiomSet{2}, {w}));
  CHECK_FALSE(is_path_redundant(t, SearchTree::kRoot, AxiomSet{1, 2}, {w}));
  CHECK(t.path_labels(t.children(w).front()) == AxiomSet{1, 3});
  CHECK(t.path_sequence(t.children(w).front()) == std::vector<AxiomIndex>{1, 3});
}

TEST_CASE("property: results match the definition on generated instances") {
  std::size_t goals = 0;
  for (const auto& inst : fixtures::suite(80, 6)) {
    EntailmentOracle oracle(inst.ontology);
    for (const Gci& g : classify(inst.ontology)) {
      BruteForceResult ref = brute_force_justifications(oracle, g);
      const AxiomSet core = compute_core(oracle, g);
      CHECK(core == ref.core);

      const AxiomSet just = single_justification(oracle, g, core);
      CHECK(core.is_subset_of(just));
      CHECK(oracle.entails(just, g));
      for (AxiomIndex b : just) CHECK_FALSE(oracle.entails(just.without(b), g));

      PinpointResult pruned = union_of_all_justifications(oracle, g, core);
      PinpointResult plain =
          union_of_all_justifications(oracle, g, core, UnionOptions{false, false});
      CHECK(pruned.union_set == ref.union_set);
      CHECK(plain.union_set == ref.union_set);
      CHECK(just.is_subset_of(pruned.union_set));
      for (const auto& j : pruned.justifications) {
        CHECK(core.is_subset_of(j));
        CHECK(j.is_subset_of(pruned.union_set));
      }

      PinpointResult full = enumerate_justifications_hst(oracle, g);
      CHECK(full.justifications == ref.justifications);
      CHECK(pruned.oracle_calls <= full.oracle_calls);
      if (just == core) CHECK(ref.justifications.size() == 1);
      ++goals;
    }
  }
  CHECK(goals > 100);
}

TEST_CASE("property: outputs are reproducible") {
  for (const auto& inst : fixtures::suite(20, 8)) {
    for (const Gci& g : classify(inst.ontology)) {
      EntailmentOracle x(inst.ontology), y(inst.ontology);
      PinpointResult a = union_of_all_justifications(x, g, compute_core(x, g));
      PinpointResult b = union_of_all_justifications(y, g, compute_core(y, g));
      CHECK(a.union_set == b.union_set);
      CHECK(a.oracle_calls == b.oracle_calls);
      CHECK(a.edge_labels == b.edge_labels);
    }
  }
}
