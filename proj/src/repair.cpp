#include "pinpoint/repair.hpp"

#include <algorithm>

#include "pinpoint/blackbox.hpp"
#include "pinpoint/error.hpp"

namespace pinpoint {
namespace {

void check_family(const AxiomFamily& family) {
  if (family.empty()) throw Error(ErrorCode::kPreconditionViolated, "empty set family");
  for (const auto& s : family) {
    if (s.empty()) throw Error(ErrorCode::kEmptyMember, "set family has an empty member");
  }
}

void branch(const AxiomFamily& family, AxiomSet& current, std::size_t& best, AxiomFamily& out) {
  auto unhit = std::find_if(family.begin(), family.end(),
                            [&](const AxiomSet& s) { return !s.intersects(current); });
  if (unhit == family.end()) {
    if (current.size() < best) {
      best = current.size();
      out.clear();
    }
    out.push_back(current);
    return;
  }
  if (current.size() + 1 > best) return;
  for (AxiomIndex b : *unhit) {
    current.insert(b);
    branch(family, current, best, out);
    current.erase(b);
  }
}

void require_repairable(EntailmentOracle& oracle, const Gci& goal) {
  require_entailed(oracle, goal);
  const std::size_t before = oracle.calls();
  const bool trivial = oracle.entails(AxiomSet{}, goal);
  oracle.set_calls(before);
  if (trivial) throw Error(ErrorCode::kNoRepair, "goal " + to_string(goal) + " holds in the empty ontology");
}

RepairSet complements(const Ontology& o, const AxiomFamily& removed) {
  RepairSet r;
  for (const auto& s : removed) r.repairs.push_back(o.all() - s);
  normalize_family(r.repairs);
  return r;
}

}  // namespace

AxiomFamily minimal_hitting_sets(const AxiomFamily& family) {
  check_family(family);
  AxiomFamily hs{AxiomSet{}};
  for (const auto& s : family) {
    AxiomFamily next;
    for (const auto& h : hs) {
      if (h.intersects(s)) {
        next.push_back(h);
      } else {
        for (AxiomIndex b : s) next.push_back(h | AxiomSet{b});
      }
    }
    normalize_family(next);
    hs.clear();
    for (const auto& h : next) {
      bool minimal = std::none_of(hs.begin(), hs.end(),
                                  [&](const AxiomSet& g) { return g.is_subset_of(h); });
      if (minimal) hs.push_back(h);
    }
  }
  return hs;
}

AxiomFamily smallest_hitting_sets(const AxiomFamily& family) {
  check_family(family);
  AxiomSet all;
  for (const auto& s : family) all = all | s;
  std::size_t best = all.size();
  AxiomFamily out;
  AxiomSet current;
  branch(family, current, best, out);
  normalize_family(out);
  return out;
}

RepairSet optimal_repairs_by_hitting_sets(EntailmentOracle& oracle, const Gci& goal) {
  require_repairable(oracle, goal);
  return complements(oracle.ontology(),
                     smallest_hitting_sets(enumerate_all_justifications(oracle, goal)));
}

RepairSet optimal_repairs(EntailmentOracle& oracle, const Gci& goal) {
  require_repairable(oracle, goal);
  AxiomSet core = compute_core(oracle, goal);
  if (core.empty()) return optimal_repairs_by_hitting_sets(oracle, goal);
  AxiomFamily removed;
  for (AxiomIndex b : core) removed.push_back(AxiomSet{b});
  return complements(oracle.ontology(), removed);
}

bool is_repair(EntailmentOracle& oracle, const Gci& goal, const AxiomSet& r) {
  if (oracle.entails(r, goal)) return false;
  for (AxiomIndex b : oracle.ontology().all() - r) {
    if (!oracle.entails(r | AxiomSet{b}, goal)) return false;
  }
  return true;
}

}  // namespace pinpoint
