#include <random>

#include "doctest.h"

#include "pinpoint/error.hpp"
#include "pinpoint/repair.hpp"
#include "support/fixtures.hpp"

using namespace pinpoint;
using fixtures::family;
using fixtures::goal;
using fixtures::ids;

namespace {

// All minimal hitting sets by checking every subset of the family's union.
AxiomFamily reference_hitting_sets(const AxiomFamily& f) {
  AxiomSet all;
  for (const auto& s : f) all = all | s;
  const auto& items = all.items();
  AxiomFamily hitting;
  for (std::uint32_t mask = 0; mask < (1u << items.size()); ++mask) {
    AxiomSet h;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1u) h.insert(items[i]);
    }
    bool hits = true;
    for (const auto& s : f) hits = hits && h.intersects(s);
    if (hits) hitting.push_back(h);
  }
  AxiomFamily minimal;
  for (const auto& h : hitting) {
    bool min = true;
    for (const auto& g : hitting) min = min && !(g != h && g.is_subset_of(h));
    if (min) minimal.push_back(h);
  }
  normalize_family(minimal);
  return minimal;
}

// Repairs of maximum size by checking every subset.
AxiomFamily reference_optimal_repairs(EntailmentOracle& oracle, const Gci& g) {
  const std::size_t n = oracle.ontology().size();
  AxiomFamily best;
  std::size_t best_size = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    AxiomSet r;
    for (AxiomIndex i = 0; i < n; ++i) {
      if (mask >> i & 1u) r.insert(i);
    }
    if (r.size() < best_size || oracle.entails(r, g)) continue;
    if (r.size() > best_size) {
      best.clear();
      best_size = r.size();
    }
    best.push_back(r);
  }
  normalize_family(best);
  return best;
}

}  // namespace

TEST_CASE("minimal hitting sets") {
  Ontology o1 = fixtures::o1();
  CHECK(minimal_hitting_sets(family(o1, {{"ax3"}, {"ax1", "ax2"}})) ==
        family(o1, {{"ax3", "ax1"}, {"ax3", "ax2"}}));
  CHECK(minimal_hitting_sets(family(o1, {{"ax1"}})) == family(o1, {{"ax1"}}));
  CHECK(minimal_hitting_sets(family(o1, {{"ax1", "ax2"}})) == family(o1, {{"ax1"}, {"ax2"}}));
}

TEST_CASE("hitting set errors") {
  try {
    minimal_hitting_sets(AxiomFamily{AxiomSet{1}, AxiomSet{}});
    FAIL("expected EmptyMember");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyMember);
  }
  try {
    smallest_hitting_sets(AxiomFamily{});
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionViolated);
  }
}

TEST_CASE("smallest hitting sets keep only minimum cardinality") {
  AxiomFamily f{AxiomSet{1, 2}, AxiomSet{2, 3}, AxiomSet{4}};
  CHECK(smallest_hitting_sets(f) == AxiomFamily{AxiomSet{2, 4}});
  CHECK(minimal_hitting_sets(f) == AxiomFamily{AxiomSet{2, 4}, AxiomSet{1, 3, 4}});
}

TEST_CASE("property: hitting sets match subset enumeration") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    AxiomFamily f;
    const std::size_t members = 1 + rng() % 5;
    for (std::size_t k = 0; k < members; ++k) {
      AxiomSet s;
      const std::size_t size = 1 + rng() % 3;
      for (std::size_t i = 0; i < size; ++i) s.insert(static_cast<AxiomIndex>(rng() % 8));
      f.push_back(s);
    }
    const AxiomFamily ref = reference_hitting_sets(f);
    CHECK(minimal_hitting_sets(f) == ref);
    std::size_t smallest = ref.front().size();
    for (const auto& h : ref) smallest = std::min(smallest, h.size());
    AxiomFamily expected;
    for (const auto& h : ref) {
      if (h.size() == smallest) expected.push_back(h);
    }
    CHECK(smallest_hitting_sets(f) == expected);
  }
}

TEST_CASE("optimal repairs on the worked examples") {
  Ontology o1 = fixtures::o1(), o2 = fixtures::o2(), o3 = fixtures::o3();
  EntailmentOracle a(o1), b(o2), c(o3);
  CHECK(optimal_repairs(c, goal("(sub A C)")).repairs == family(o3, {{"ax2", "ax3", "ax4"}}));
  CHECK(optimal_repairs(a, goal("(sub A C)")).repairs == family(o1, {{"ax2", "ax4"}, {"ax1", "ax4"}}));
  CHECK(optimal_repairs(b, goal("(sub A C)")).repairs == family(o2, {{"ax2"}, {"ax1"}}));
}

TEST_CASE("repair errors") {
  Ontology o1 = fixtures::o1();
  EntailmentOracle a(o1);
  try {
    optimal_repairs(a, goal("(sub C A)"));
    FAIL("expected NotEntailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEntailed);
  }
  try {
    optimal_repairs(a, goal("(sub A Top)"));
    FAIL("expected NoRepair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoRepair);
  }
}

TEST_CASE("is_repair") {
  Ontology o1 = fixtures::o1(), o2 = fixtures::o2();
  EntailmentOracle a(o1), b(o2);
  CHECK(is_repair(b, goal("(sub A C)"), ids(o2, {"ax1"})));
  CHECK_FALSE(is_repair(b, goal("(sub A C)"), AxiomSet{}));
  CHECK(is_repair(a, goal("(sub A C)"), ids(o1, {"ax2", "ax4"})));
  CHECK_FALSE(is_repair(a, goal("(sub A C)"), ids(o1, {"ax1", "ax2", "ax4"})));
}

TEST_CASE("property: optimal repairs are the largest non-entailing subsets") {
  std::size_t with_core = 0;
  for (const auto& inst : fixtures::suite(60, 5)) {
    EntailmentOracle oracle(inst.ontology);
    for (const Gci& g : classify(inst.ontology)) {
      RepairSet r = optimal_repairs(oracle, g);
      CHECK(r.optimal);
      for (const auto& rep : r.repairs) CHECK(is_repair(oracle, g, rep));
      CHECK(r.repairs == reference_optimal_repairs(oracle, g));
      if (!compute_core(oracle, g).empty()) {
        CHECK(optimal_repairs_by_hitting_sets(oracle, g).repairs == r.repairs);
        ++with_core;
      }
    }
  }
  CHECK(with_core > 50);
}
