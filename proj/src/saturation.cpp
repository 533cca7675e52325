#include "pinpoint/saturation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "pinpoint/error.hpp"

namespace pinpoint {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::kInit: return "R_init";
    case Rule::kNegation: return "R_neg";
    case Rule::kConjunction: return "R_and";
    case Rule::kExistsIntro: return "R_some+";
    case Rule::kExistsElim: return "R_some-";
    case Rule::kExistsBottom: return "R_some_bot";
    case Rule::kForall: return "R_all";
    case Rule::kRoleInit: return "R_role_init";
    case Rule::kRoleChain: return "R_role_chain";
    case Rule::kGoalBottom: return "R_goal_bot";
  }
  return "?";
}

namespace {

std::string literals_to_string(const std::vector<Literal>& ls) {
  if (ls.empty()) return "Top";
  std::string out;
  for (const auto& l : ls) {
    if (!out.empty()) out += " and ";
    if (l.negated) out += "not ";
    out += l.name;
  }
  return out;
}

}  // namespace

std::string to_string(const DerivedSubsumption& s) {
  if (s.kind == DerivedSubsumption::Kind::kRole) return s.sub + " [=* " + s.sup;
  std::string out = literals_to_string(s.lhs) + " [= ";
  if (s.rhs.empty()) return out + "Bot";
  bool first = true;
  for (const auto& d : s.rhs) {
    if (!first) out += " or ";
    first = false;
    if (d.existential) {
      out += "some " + d.name + ".(" + literals_to_string(d.filler) + ")";
    } else {
      out += d.name;
    }
  }
  return out;
}

std::string InferenceTrace::dump(const Ontology& o) const {
  std::string out;
  for (const auto& s : steps) {
    out += to_string(s.rule);
    out += "; ";
    for (std::size_t i = 0; i < s.premises.size(); ++i) {
      if (i) out += " | ";
      out += to_string(facts[s.premises[i]]);
    }
    out += "; ";
    out += join_ids(o, s.axioms);
    out += "; ";
    out += to_string(facts[s.conclusion]);
    out += '\n';
  }
  return out;
}

namespace {

using NK = NormalAxiom::Kind;
using Id = std::uint32_t;
constexpr Id kNone = static_cast<Id>(-1);

struct VecHash {
  std::size_t operator()(const std::vector<Id>& v) const {
    std::size_t h = v.size();
    for (Id x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Saturator {
 public:
  Saturator(const NormalizedTBox& n, SaturationOptions options) : tbox_(n), options_(options) {
    for (Id i = 0; i < tbox_.axioms.size(); ++i) {
      const NormalAxiom& a = tbox_.axioms[i];
      switch (a.kind) {
        case NK::kSubsumption:
          if (a.lhs.empty()) {
            nullary_.push_back(i);
          } else {
            for (const auto& x : a.lhs) conj_by_name_[name(x)].push_back(i);
          }
          for (const auto& x : a.rhs) name(x);
          break;
        case NK::kExistsRight:
          exists_right_[name(a.lhs.front())].push_back(i);
          name(a.filler);
          role(a.role);
          break;
        case NK::kExistsLeft:
          exists_left_[name(a.filler)].push_back(i);
          name(a.rhs.front());
          role(a.role);
          break;
        case NK::kForallRight:
          forall_right_[name(a.lhs.front())].push_back(i);
          name(a.filler);
          role(a.role);
          break;
        case NK::kRoleInclusion:
          role_axioms_[role(a.role)].push_back(i);
          role(a.super_role);
          break;
      }
    }
  }

  InferenceTrace run(const Gci& goal) {
    if (!goal.lhs.is_name() || !goal.rhs.is_name()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "saturation supports only goals between concept names: " + to_string(goal));
    }
    saturate_roles();
    const Id a = name(goal.lhs.name);
    const Id b = name(goal.rhs.name);
    goal_name_ = b;
    const Id goal_ctx = context({2 * a});
    activate(goal_ctx);
    while (!queue_.empty()) {
      Id f = queue_.front();
      queue_.pop_front();
      process(f);
    }
    if (bottom_[goal_ctx] != kNone) {
      derive(Rule::kGoalBottom, {bottom_[goal_ctx]}, {}, goal_ctx, {name_atom(b)});
    }
    return export_trace(goal_ctx, b);
  }

 private:
  struct Fact {
    bool is_role = false;
    Id ctx = 0;
    std::vector<Id> atoms;  // sorted
    Id sub = 0, sup = 0;
    Id max = kNone;         // maximal atom under the inference order
  };
  struct Atom {
    Id role;  // kNone for a concept name
    Id arg;   // name id or context id
  };

  Id name(const std::string& s) {
    auto [it, inserted] = name_ids_.try_emplace(s, static_cast<Id>(names_.size()));
    if (inserted) names_.push_back(s);
    return it->second;
  }
  Id role(const std::string& s) {
    auto [it, inserted] = role_ids_.try_emplace(s, static_cast<Id>(roles_.size()));
    if (inserted) roles_.push_back(s);
    return it->second;
  }

  Id context(std::vector<Id> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    auto [it, inserted] = ctx_ids_.try_emplace(lits, static_cast<Id>(contexts_.size()));
    if (inserted) {
      contexts_.push_back(lits);
      ctx_facts_.emplace_back();
      users_.emplace_back();
      bottom_.push_back(kNone);
      active_.push_back(false);
    }
    return it->second;
  }

  Id atom(Id r, Id arg) {
    auto key = std::make_pair(r, arg);
    auto [it, inserted] = atom_ids_.try_emplace(key, static_cast<Id>(atoms_.size()));
    if (inserted) atoms_.push_back(Atom{r, arg});
    return it->second;
  }
  Id name_atom(Id n) { return atom(kNone, n); }

  // Inference order on atoms: the goal name lowest, then other names, then
  // existentials, ties broken by creation. Rules only resolve on the maximal
  // atom of each premise.
  bool precedes(Id a, Id b) const {
    auto rank = [&](Id x) {
      if (is_exists(x)) return 2;
      return atoms_[x].arg == goal_name_ ? 0 : 1;
    };
    const int ra = rank(a), rb = rank(b);
    return ra != rb ? ra < rb : a < b;
  }
  bool is_exists(Id a) const { return atoms_[a].role != kNone; }

  bool has_literal(Id ctx, Id lit) const {
    return std::binary_search(contexts_[ctx].begin(), contexts_[ctx].end(), lit);
  }

  Id extend_context(Id ctx, Id lit) {
    std::vector<Id> lits = contexts_[ctx];
    lits.push_back(lit);
    return context(std::move(lits));
  }

  static std::vector<Id> minus(const std::vector<Id>& atoms, Id x) {
    std::vector<Id> out;
    out.reserve(atoms.size());
    for (Id a : atoms) {
      if (a != x) out.push_back(a);
    }
    return out;
  }
  static void append(std::vector<Id>& to, const std::vector<Id>& from) {
    to.insert(to.end(), from.begin(), from.end());
  }

  Id intern_fact(Fact f) {
    std::vector<Id> key;
    if (f.is_role) {
      key = {1, f.sub, f.sup};
    } else {
      key = {0, f.ctx};
      append(key, f.atoms);
    }
    auto [it, inserted] = fact_ids_.try_emplace(std::move(key), static_cast<Id>(facts_.size()));
    if (inserted) {
      if (facts_.size() >= options_.fact_budget) {
        throw Error(ErrorCode::kResourceLimit, "saturation fact budget exceeded");
      }
      for (Id a : f.atoms) {
        if (f.max == kNone || precedes(f.max, a)) f.max = a;
      }
      facts_.push_back(std::move(f));
      if (!facts_.back().is_role) queue_.push_back(it->second);
    }
    return it->second;
  }

  void record(Rule rule, std::vector<Id> premises, std::vector<Id> side, Id conclusion) {
    std::sort(premises.begin(), premises.end());
    premises.erase(std::unique(premises.begin(), premises.end()), premises.end());
    if (std::find(premises.begin(), premises.end(), conclusion) != premises.end()) return;
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    std::vector<Id> key{static_cast<Id>(rule), static_cast<Id>(premises.size())};
    append(key, premises);
    append(key, side);
    key.push_back(conclusion);
    if (!step_keys_.insert(std::move(key)).second) return;
    if (steps_.size() >= options_.step_budget) {
      throw Error(ErrorCode::kResourceLimit, "saturation step budget exceeded");
    }
    steps_.push_back(Step{rule, std::move(premises), std::move(side), conclusion});
  }

  void derive(Rule rule, std::vector<Id> premises, std::vector<Id> side, Id ctx,
              std::vector<Id> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    Fact f;
    f.ctx = ctx;
    f.atoms = std::move(atoms);
    Id id = intern_fact(std::move(f));
    record(rule, std::move(premises), std::move(side), id);
  }

  void saturate_roles() {
    std::deque<Id> work;
    for (Id r = 0; r < roles_.size(); ++r) {
      Fact f;
      f.is_role = true;
      f.sub = f.sup = r;
      std::size_t before = facts_.size();
      Id id = intern_fact(std::move(f));
      record(Rule::kRoleInit, {}, {}, id);
      if (facts_.size() > before) work.push_back(id);
    }
    while (!work.empty()) {
      Id id = work.front();
      work.pop_front();
      const Id sub = facts_[id].sub, sup = facts_[id].sup;
      role_supers_[sub].emplace_back(sup, id);
      auto it = role_axioms_.find(sup);
      if (it == role_axioms_.end()) continue;
      for (Id ax : it->second) {
        Fact f;
        f.is_role = true;
        f.sub = sub;
        f.sup = role(tbox_.axioms[ax].super_role);
        std::size_t before = facts_.size();
        Id next = intern_fact(std::move(f));
        record(Rule::kRoleChain, {id}, {ax}, next);
        if (facts_.size() > before) work.push_back(next);
      }
    }
  }

  // Role fact for r [=* s, or kNone.
  Id role_fact(Id r, Id s) const {
    auto it = role_supers_.find(r);
    if (it == role_supers_.end()) return kNone;
    for (auto [sup, id] : it->second) {
      if (sup == s) return id;
    }
    return kNone;
  }

  void activate(Id ctx) {
    if (active_[ctx]) return;
    active_[ctx] = true;
    const std::vector<Id> lits = contexts_[ctx];
    for (Id lit : lits) {
      if (lit % 2 == 0) derive(Rule::kInit, {}, {}, ctx, {name_atom(lit / 2)});
    }
    for (Id ax : nullary_) {
      std::vector<Id> rhs;
      for (const auto& x : tbox_.axioms[ax].rhs) rhs.push_back(name_atom(name(x)));
      derive(Rule::kConjunction, {}, {ax}, ctx, std::move(rhs));
    }
  }

  template <typename F>
  void for_each_name(const std::vector<Id>& atoms, F&& fn) {
    for (Id a : atoms) {
      if (!is_exists(a)) fn(a, atoms_[a].arg);
    }
  }

  void process(Id f) {
    const Id h = facts_[f].ctx;
    const std::vector<Id> m = facts_[f].atoms;
    const Id top = facts_[f].max;

    if (top != kNone && is_exists(top)) {
      activate(atoms_[top].arg);
      users_[atoms_[top].arg].emplace_back(f, top);
    }
    ctx_facts_[h].push_back(f);
    if (m.empty() && bottom_[h] == kNone) bottom_[h] = f;

    // Negation, on any atom.
    for_each_name(m, [&](Id a, Id n) {
      if (has_literal(h, 2 * n + 1)) derive(Rule::kNegation, {f}, {}, h, minus(m, a));
    });

    if (top == kNone) {
      for (std::size_t ui = 0; ui < users_[h].size(); ++ui) {
        auto [u, a] = users_[h][ui];
        derive(Rule::kExistsBottom, {u, f}, {}, facts_[u].ctx, minus(facts_[u].atoms, a));
      }
      return;
    }

    if (is_exists(top)) {
      const Id k = atoms_[top].arg;
      for (std::size_t gi = 0; gi < ctx_facts_[k].size(); ++gi) exists_elim(f, top, ctx_facts_[k][gi]);
      if (bottom_[k] != kNone) derive(Rule::kExistsBottom, {f, bottom_[k]}, {}, h, minus(m, top));
      for (std::size_t gi = 0; gi < ctx_facts_[h].size(); ++gi) forall(f, top, ctx_facts_[h][gi]);
      return;
    }

    const Id n = atoms_[top].arg;
    if (auto it = conj_by_name_.find(n); it != conj_by_name_.end()) {
      for (Id ax : it->second) hyperresolve(ax, f, n);
    }
    if (auto it = exists_right_.find(n); it != exists_right_.end()) {
      for (Id ax : it->second) {
        const NormalAxiom& na = tbox_.axioms[ax];
        Id succ = context({2 * name(na.filler)});
        auto atoms = minus(m, top);
        atoms.push_back(atom(role(na.role), succ));
        derive(Rule::kExistsIntro, {f}, {ax}, h, std::move(atoms));
      }
    }
    if (forall_right_.count(n)) {
      for (std::size_t ui = 0; ui < ctx_facts_[h].size(); ++ui) {
        const Id u = ctx_facts_[h][ui];
        const Id ua = facts_[u].max;
        if (ua != kNone && is_exists(ua)) forall(u, ua, f);
      }
    }
    for (std::size_t ui = 0; ui < users_[h].size(); ++ui) {
      auto [u, a] = users_[h][ui];
      exists_elim(u, a, f);
    }
  }

  // u: H [= M or some R.K (atom a), g: K [= N or A, axiom some S.A [= B, R [=* S.
  void exists_elim(Id u, Id a, Id g) {
    const Id r = atoms_[a].role;
    const Id k = atoms_[a].arg;
    const Id ga = facts_[g].max;
    if (ga == kNone || is_exists(ga)) return;
    const Id n = atoms_[ga].arg;
    if (auto it = exists_left_.find(n); it != exists_left_.end()) {
      for (Id ax : it->second) {
        const NormalAxiom& na = tbox_.axioms[ax];
        Id rf = role_fact(r, role(na.role));
        if (rf == kNone) continue;
        Id k2 = extend_context(k, 2 * n + 1);
        auto atoms = minus(facts_[u].atoms, a);
        atoms.push_back(name_atom(name(na.rhs.front())));
        atoms.push_back(atom(r, k2));
        derive(Rule::kExistsElim, {u, g, rf}, {ax}, facts_[u].ctx, std::move(atoms));
      }
    }
  }

  // u: H [= M or some R.K (atom a), g: H [= N or A, axiom A [= all S.B, R [=* S.
  void forall(Id u, Id a, Id g) {
    const Id r = atoms_[a].role;
    const Id k = atoms_[a].arg;
    const Id ga = facts_[g].max;
    if (ga == kNone || is_exists(ga)) return;
    const Id n = atoms_[ga].arg;
    const std::vector<Id> gm = facts_[g].atoms;
    if (auto it = forall_right_.find(n); it != forall_right_.end()) {
      for (Id ax : it->second) {
        const NormalAxiom& na = tbox_.axioms[ax];
        Id rf = role_fact(r, role(na.role));
        if (rf == kNone) continue;
        Id k2 = extend_context(k, 2 * name(na.filler));
        auto atoms = minus(facts_[u].atoms, a);
        append(atoms, minus(gm, ga));
        atoms.push_back(atom(r, k2));
        derive(Rule::kForall, {u, g, rf}, {ax}, facts_[u].ctx, std::move(atoms));
      }
    }
  }

  // Axiom A1 and ... and An [= M with fact f supplying the conjunct `fixed`.
  void hyperresolve(Id ax, Id f, Id fixed) {
    const NormalAxiom& na = tbox_.axioms[ax];
    const Id h = facts_[f].ctx;
    std::vector<Id> lhs;
    for (const auto& x : na.lhs) lhs.push_back(name(x));
    std::vector<std::vector<Id>> choices(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] == fixed) {
        choices[i] = {f};
        continue;
      }
      const Id at = name_atom(lhs[i]);
      for (Id g : ctx_facts_[h]) {
        if (facts_[g].max == at) choices[i].push_back(g);
      }
      if (choices[i].empty()) return;
    }
    std::vector<Id> rhs;
    for (const auto& x : na.rhs) rhs.push_back(name_atom(name(x)));
    std::vector<Id> pick(lhs.size());
    combine(ax, h, lhs, choices, rhs, pick, 0);
  }

  void combine(Id ax, Id h, const std::vector<Id>& lhs, const std::vector<std::vector<Id>>& choices,
               const std::vector<Id>& rhs, std::vector<Id>& pick, std::size_t i) {
    if (i == lhs.size()) {
      std::vector<Id> atoms = rhs;
      for (std::size_t j = 0; j < lhs.size(); ++j) {
        append(atoms, minus(facts_[pick[j]].atoms, name_atom(lhs[j])));
      }
      derive(Rule::kConjunction, pick, {ax}, h, std::move(atoms));
      return;
    }
    for (Id g : choices[i]) {
      pick[i] = g;
      combine(ax, h, lhs, choices, rhs, pick, i + 1);
    }
  }

  std::vector<Literal> literals_of(Id ctx) const {
    std::vector<Literal> out;
    for (Id lit : contexts_[ctx]) out.push_back(Literal{names_[lit / 2], lit % 2 == 1});
    return out;
  }

  InferenceTrace export_trace(Id goal_ctx, Id goal_name) {
    InferenceTrace t;
    t.facts.reserve(facts_.size());
    for (const Fact& f : facts_) {
      DerivedSubsumption d;
      if (f.is_role) {
        d.kind = DerivedSubsumption::Kind::kRole;
        d.sub = roles_[f.sub];
        d.sup = roles_[f.sup];
      } else {
        d.lhs = literals_of(f.ctx);
        for (Id a : f.atoms) {
          const Atom& at = atoms_[a];
          if (at.role == kNone) {
            d.rhs.push_back(Disjunct{names_[at.arg], false, {}});
          } else {
            d.rhs.push_back(Disjunct{roles_[at.role], true, literals_of(at.arg)});
          }
        }
      }
      t.facts.push_back(std::move(d));
    }
    for (const Step& s : steps_) {
      InferenceStep out;
      out.rule = s.rule;
      out.premises.assign(s.premises.begin(), s.premises.end());
      out.side.assign(s.side.begin(), s.side.end());
      std::vector<AxiomIndex> origins;
      for (Id ax : s.side) origins.push_back(tbox_.axioms[ax].origin);
      out.axioms = AxiomSet(origins);
      out.conclusion = s.conclusion;
      t.steps.push_back(std::move(out));
    }
    std::vector<Id> key{0, goal_ctx, name_atom(goal_name)};
    auto it = fact_ids_.find(key);
    if (it != fact_ids_.end()) t.goal_fact = it->second;
    return t;
  }

  struct Step {
    Rule rule;
    std::vector<Id> premises;
    std::vector<Id> side;
    Id conclusion;
  };

  const NormalizedTBox& tbox_;
  SaturationOptions options_;
  Id goal_name_ = kNone;

  std::map<std::string, Id> name_ids_, role_ids_;
  std::vector<std::string> names_, roles_;
  std::map<Id, std::vector<Id>> conj_by_name_, exists_right_, exists_left_, forall_right_,
      role_axioms_;
  std::vector<Id> nullary_;
  std::map<Id, std::vector<std::pair<Id, Id>>> role_supers_;

  std::map<std::vector<Id>, Id> ctx_ids_;
  std::vector<std::vector<Id>> contexts_;
  std::vector<std::vector<Id>> ctx_facts_;
  std::vector<std::vector<std::pair<Id, Id>>> users_;
  std::vector<Id> bottom_;
  std::vector<bool> active_;

  std::map<std::pair<Id, Id>, Id> atom_ids_;
  std::vector<Atom> atoms_;

  std::unordered_map<std::vector<Id>, Id, VecHash> fact_ids_;
  std::vector<Fact> facts_;
  std::deque<Id> queue_;
  std::unordered_set<std::vector<Id>, VecHash> step_keys_;
  std::vector<Step> steps_;
};

}  // namespace

InferenceTrace saturate_with_tracing(const NormalizedTBox& n, const Gci& goal,
                                     SaturationOptions options) {
  return Saturator(n, options).run(goal);
}

InferenceTrace saturate_with_tracing(const Ontology& o, const Gci& goal,
                                     SaturationOptions options) {
  return saturate_with_tracing(normalize(o), goal, options);
}

}  // namespace pinpoint
