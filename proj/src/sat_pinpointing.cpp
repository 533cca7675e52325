#include "pinpoint/sat_pinpointing.hpp"

#include <algorithm>
#include <set>

#include "pinpoint/error.hpp"
#include "pinpoint/locality.hpp"
#include "pinpoint/normalize.hpp"

namespace pinpoint {

PinpointingFormula encode(const Ontology& o, const Gci& goal, const InferenceTrace& trace) {
  PinpointingFormula f;
  for (AxiomIndex b = 0; b < o.size(); ++b) {
    f.labels.push_back(VarLabel{VarLabel::Kind::kAxiom, b});
  }
  std::vector<int> fact_var(trace.facts.size(), 0);
  auto var_of = [&](std::size_t fact) {
    if (fact_var[fact] == 0) {
      f.labels.push_back(VarLabel{VarLabel::Kind::kDerived, fact});
      fact_var[fact] = static_cast<int>(f.labels.size());
    }
    return fact_var[fact];
  };

  std::set<std::vector<int>> seen;
  for (const auto& step : trace.steps) {
    std::vector<int> clause;
    for (std::size_t p : step.premises) clause.push_back(-var_of(p));
    for (AxiomIndex b : step.axioms) clause.push_back(-f.axiom_var(b));
    clause.push_back(var_of(step.conclusion));
    std::vector<int> key = clause;
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) continue;
    f.cnf.clauses.push_back(std::move(clause));
  }

  if (trace.goal_fact) {
    f.goal_var = var_of(*trace.goal_fact);
  } else {
    // The goal was never derived; a fresh variable keeps the formula satisfiable.
    f.labels.push_back(VarLabel{VarLabel::Kind::kDerived, trace.facts.size()});
    f.goal_var = static_cast<int>(f.labels.size());
  }
  f.hard.assign(f.cnf.clauses.size(), true);
  for (AxiomIndex b = 0; b < o.size(); ++b) {
    f.axiom_units[b] = f.cnf.clauses.size();
    f.cnf.clauses.push_back({f.axiom_var(b)});
    f.hard.push_back(false);
  }
  f.goal_clause = f.cnf.clauses.size();
  f.cnf.clauses.push_back({-f.goal_var});
  f.hard.push_back(true);
  f.cnf.num_vars = static_cast<int>(f.labels.size());
  (void)goal;
  return f;
}

PinpointingFormula encode(const Ontology& o, const Gci& goal) {
  NormalizedTBox n = normalize(o);
  const AxiomSet module = extract_star_module(o, signature_of(goal));
  std::erase_if(n.axioms, [&](const NormalAxiom& a) { return !module.contains(a.origin); });
  return encode(o, goal, saturate_with_tracing(n, goal));
}

PinpointingFormula restrict_to_cone(const PinpointingFormula& f) {
  const auto& clauses = f.cnf.clauses;
  std::vector<std::vector<std::size_t>> by_head(static_cast<std::size_t>(f.cnf.num_vars) + 1);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (int l : clauses[i]) {
      if (l > 0) by_head[l].push_back(i);
    }
  }
  std::vector<bool> reached(by_head.size(), false);
  std::vector<bool> keep(clauses.size(), false);
  std::vector<int> work{f.goal_var};
  reached[f.goal_var] = true;
  keep[f.goal_clause] = true;
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (std::size_t i : by_head[v]) {
      if (keep[i]) continue;
      keep[i] = true;
      for (int l : clauses[i]) {
        if (l < 0 && !reached[-l]) {
          reached[-l] = true;
          work.push_back(-l);
        }
      }
    }
  }

  PinpointingFormula out;
  out.cnf.num_vars = f.cnf.num_vars;
  out.labels = f.labels;
  out.goal_var = f.goal_var;
  std::map<std::size_t, AxiomIndex> unit_owner;
  for (auto [b, i] : f.axiom_units) unit_owner[i] = b;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (!keep[i]) continue;
    const std::size_t j = out.cnf.clauses.size();
    if (i == f.goal_clause) out.goal_clause = j;
    if (auto it = unit_owner.find(i); it != unit_owner.end()) out.axiom_units[it->second] = j;
    out.cnf.clauses.push_back(clauses[i]);
    out.hard.push_back(f.hard[i]);
  }
  return out;
}

MembershipResult union_via_membership(const Ontology& o, const Gci& goal) {
  PinpointingFormula f = restrict_to_cone(encode(o, goal));
  MembershipResult r;
  r.cone_clauses = f.cnf.clauses.size();
  r.cone_axioms = f.axiom_units.size();
  ++r.sat_calls;
  if (satisfiable(f.cnf)) {
    throw Error(ErrorCode::kNotEntailed, "goal " + to_string(goal) + " is not entailed");
  }
  for (auto [b, clause] : f.axiom_units) {
    if (mus_membership(f.cnf, clause, f.hard, &r.sat_calls)) r.union_set.insert(b);
  }
  return r;
}

std::string to_dimacs(const PinpointingFormula& f, const Ontology& o) {
  std::string out;
  for (AxiomIndex b = 0; b < o.size(); ++b) {
    out += "c axiom " + o[b].id + " var " + std::to_string(f.axiom_var(b)) + "\n";
  }
  out += "p cnf " + std::to_string(f.cnf.num_vars) + " " + std::to_string(f.cnf.clauses.size()) + "\n";
  for (const auto& c : f.cnf.clauses) {
    for (int l : c) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

}  // namespace pinpoint
