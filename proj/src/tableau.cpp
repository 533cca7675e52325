#include "pinpoint/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "pinpoint/error.hpp"

namespace pinpoint {
namespace detail {

enum class NodeKind : std::uint8_t { kTop, kBot, kName, kNotName, kAnd, kOr, kSome, kAll };

struct PoolNode {
  NodeKind kind;
  int symbol;  // concept name or role, -1 otherwise
  std::vector<int> args;

  auto operator<=>(const PoolNode&) const = default;
};

/// Hash-consed NNF concepts. Ids are dense, so label sets are bitsets.
class ConceptPool {
 public:
  int concept_name(const std::string& n) { return intern_symbol(concept_names_, n); }
  int role_name(const std::string& n) { return intern_symbol(role_names_, n); }
  std::size_t role_count() const { return role_names_.size(); }
  std::size_t concept_name_count() const { return concept_names_.size(); }

  const PoolNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return nodes_.size(); }

  int top() { return make({NodeKind::kTop, -1, {}}); }
  int bot() { return make({NodeKind::kBot, -1, {}}); }

  int nnf(const Concept& c, bool negated) {
    using K = Concept::Kind;
    switch (c.kind) {
      case K::kTop: return negated ? bot() : top();
      case K::kBot: return negated ? top() : bot();
      case K::kName:
        return make({negated ? NodeKind::kNotName : NodeKind::kName, concept_name(c.name), {}});
      case K::kNot: return nnf(c.filler(), !negated);
      case K::kAnd:
      case K::kOr: {
        std::vector<int> parts;
        for (const auto& a : c.args) parts.push_back(nnf(a, negated));
        bool conj = (c.kind == K::kAnd) != negated;
        return conj ? make_and(std::move(parts)) : make_or(std::move(parts));
      }
      case K::kSome:
      case K::kAll: {
        int filler = nnf(c.filler(), negated);
        bool exists = (c.kind == K::kSome) != negated;
        return make_quantifier(exists, role_name(c.name), filler);
      }
    }
    return top();
  }

  int make_and(std::vector<int> parts) { return make_nary(NodeKind::kAnd, std::move(parts)); }
  int make_or(std::vector<int> parts) { return make_nary(NodeKind::kOr, std::move(parts)); }

  int make_quantifier(bool exists, int role, int filler) {
    NodeKind fk = node(filler).kind;
    if (exists && fk == NodeKind::kBot) return bot();
    if (!exists && fk == NodeKind::kTop) return top();
    return make({exists ? NodeKind::kSome : NodeKind::kAll, role, {filler}});
  }

 private:
  static int intern_symbol(std::map<std::string, int>& table, const std::string& n) {
    auto [it, inserted] = table.emplace(n, static_cast<int>(table.size()));
    return it->second;
  }

  int make_nary(NodeKind kind, std::vector<int> parts) {
    const NodeKind unit = kind == NodeKind::kAnd ? NodeKind::kTop : NodeKind::kBot;
    const NodeKind zero = kind == NodeKind::kAnd ? NodeKind::kBot : NodeKind::kTop;
    std::vector<int> flat;
    for (int p : parts) {
      const PoolNode& n = node(p);
      if (n.kind == unit) continue;
      if (n.kind == zero) return p;
      if (n.kind == kind) {
        flat.insert(flat.end(), n.args.begin(), n.args.end());
      } else {
        flat.push_back(p);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return kind == NodeKind::kAnd ? top() : bot();
    if (flat.size() == 1) return flat.front();
    return make({kind, -1, std::move(flat)});
  }

  int make(PoolNode n) {
    auto it = index_.find(n);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(n);
    index_.emplace(std::move(n), id);
    return id;
  }

  std::vector<PoolNode> nodes_;
  std::map<PoolNode, int> index_;
  std::map<std::string, int> concept_names_;
  std::map<std::string, int> role_names_;
};

}  // namespace detail

using detail::ConceptPool;
using detail::NodeKind;
using detail::PoolNode;

struct EntailmentOracle::Prepared {
  enum class Kind { kTautology, kUnfold, kGlobal, kRole } kind;
  int name = -1;     // trigger for kUnfold
  int body = -1;  // unfolded or internalized concept
  int sub = -1;
  int sup = -1;
};

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  bool test(int i) const {
    auto u = static_cast<std::size_t>(i);
    return (words_[u / 64] >> (u % 64)) & 1U;
  }
  void set(int i) {
    auto u = static_cast<std::size_t>(i);
    words_[u / 64] |= std::uint64_t{1} << (u % 64);
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  bool operator<(const Bits& o) const { return words_ < o.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

class Search {
 public:
  Search(const ConceptPool& pool, std::vector<std::vector<int>> unfold, std::vector<int> globals,
         std::vector<std::vector<bool>> role_sub, std::size_t budget)
      : pool_(pool),
        unfold_(std::move(unfold)),
        globals_(std::move(globals)),
        role_sub_(std::move(role_sub)),
        budget_(budget) {
    pool_size_ = pool_.size();
    for (std::size_t i = 0; i < pool_size_; ++i) {
      const PoolNode& n = pool_.node(static_cast<int>(i));
      if (n.kind == NodeKind::kSome) somes_.push_back(static_cast<int>(i));
      if (n.kind == NodeKind::kAll) alls_.push_back(static_cast<int>(i));
      if (n.kind == NodeKind::kOr) ors_.push_back(static_cast<int>(i));
    }
  }

  bool satisfiable(int root) {
    Bits label(pool_size_);
    label.set(root);
    for (int g : globals_) label.set(g);
    const std::size_t limit = budget_;
    budget_ = std::min(limit, kDepthFirstLimit);
    try {
      bool sat = node_sat(label).sat;
      budget_ = limit;
      return sat;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kResourceLimit || budget_ == limit) throw;
    }
    budget_ = limit;
    nodes_ = 0;
    ancestors_.clear();
    return graph_sat(label);
  }

 private:
  static constexpr std::size_t kNoDependency = static_cast<std::size_t>(-1);

  // `depends` is the shallowest ancestor whose satisfiability a blocked
  // descendant assumed. Satisfiable labels are cached only when that
  // assumption does not reach above the node itself.
  struct Outcome {
    bool sat;
    std::size_t depends;
  };

  Outcome node_sat(const Bits& label) {
    if (unsat_cache_.count(label) != 0) return {false, kNoDependency};
    if (sat_cache_.count(label) != 0) return {true, kNoDependency};
    const std::size_t depth = ancestors_.size();
    Outcome r = expand(label);
    if (!r.sat) {
      unsat_cache_.insert(label);
      return {false, kNoDependency};
    }
    if (r.depends >= depth) {
      sat_cache_.insert(label);
      r.depends = kNoDependency;
    }
    return r;
  }

  // Propositional closure; false on clash.
  bool close(Bits& s) {
    std::vector<int> work;
    s.for_each([&](int i) { work.push_back(i); });
    auto add = [&](int i) {
      if (!s.test(i)) {
        s.set(i);
        work.push_back(i);
      }
    };
    while (!work.empty()) {
      int id = work.back();
      work.pop_back();
      const PoolNode& n = pool_.node(id);
      switch (n.kind) {
        case NodeKind::kBot:
          return false;
        case NodeKind::kName: {
          if (has_literal(s, n.symbol, true)) return false;
          auto sym = static_cast<std::size_t>(n.symbol);
          if (sym < unfold_.size()) {
            for (int d : unfold_[sym]) add(d);
          }
          break;
        }
        case NodeKind::kNotName:
          if (has_literal(s, n.symbol, false)) return false;
          break;
        case NodeKind::kAnd:
          for (int a : n.args) add(a);
          break;
        default:
          break;
      }
    }
    return true;
  }

  bool has_literal(const Bits& s, int symbol, bool negated) {
    // Literal nodes are looked up lazily and memoized.
    auto& table = negated ? neg_literal_ : pos_literal_;
    auto sym = static_cast<std::size_t>(symbol);
    if (table.size() <= sym) table.resize(sym + 1, -2);
    if (table[sym] == -2) {
      table[sym] = -1;
      for (std::size_t i = 0; i < pool_size_; ++i) {
        const PoolNode& n = pool_.node(static_cast<int>(i));
        if (n.symbol == symbol && n.kind == (negated ? NodeKind::kNotName : NodeKind::kName)) {
          table[sym] = static_cast<int>(i);
          break;
        }
      }
    }
    return table[sym] >= 0 && s.test(table[sym]);
  }

  Outcome expand(Bits s) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kResourceLimit,
                  "tableau node budget of " + std::to_string(budget_) + " exceeded");
    }
    if (!close(s)) return {false, kNoDependency};

    if (const int open = first_open_or(s); open >= 0) {
      for (int d : pool_.node(open).args) {
        Bits branch = s;
        branch.set(d);
        Outcome r = expand(std::move(branch));
        if (r.sat) return r;
      }
      return {false, kNoDependency};
    }

    for (std::size_t i = 0; i < ancestors_.size(); ++i) {
      if (s.is_subset_of(ancestors_[i])) return {true, i};
    }

    std::size_t depends = kNoDependency;
    for (int e : somes_) {
      if (!s.test(e)) continue;
      Bits succ = successor(s, e);
      ancestors_.push_back(s);
      Outcome r = node_sat(succ);
      ancestors_.pop_back();
      if (!r.sat) return {false, kNoDependency};
      depends = std::min(depends, r.depends);
    }
    return {true, depends};
  }

  static constexpr std::size_t kDepthFirstLimit = 20000;

  // One graph node per distinct label. Or nodes hold the branches of the
  // first unresolved disjunction, and nodes hold the successors.
  struct GraphNode {
    bool conjunctive = false;
    bool unsat = false;
    std::size_t unsat_children = 0;
    std::vector<std::size_t> children;
    std::vector<std::size_t> parents;
  };

  bool graph_sat(const Bits& root) {
    std::map<Bits, std::size_t> index;
    std::vector<GraphNode> graph;
    std::vector<Bits> pending;
    std::vector<std::size_t> unsat_queue;
    auto intern = [&](const Bits& label) {
      auto [it, inserted] = index.emplace(label, graph.size());
      if (inserted) {
        if (++nodes_ > budget_) {
          throw Error(ErrorCode::kResourceLimit,
                      "tableau node budget of " + std::to_string(budget_) + " exceeded");
        }
        graph.emplace_back();
        pending.push_back(label);
      }
      return it->second;
    };
    intern(root);
    for (std::size_t next = 0; next < pending.size(); ++next) {
      Bits s = pending[next];
      if (unsat_cache_.count(s) != 0 || !close(s)) {
        graph[next].unsat = true;
        unsat_queue.push_back(next);
        continue;
      }
      std::vector<std::size_t> children;
      const int open = first_open_or(s);
      if (open >= 0) {
        for (int d : pool_.node(open).args) {
          Bits branch = s;
          branch.set(d);
          children.push_back(intern(branch));
        }
      } else {
        graph[next].conjunctive = true;
        for (int e : somes_) {
          if (s.test(e)) children.push_back(intern(successor(s, e)));
        }
      }
      for (std::size_t c : children) graph[c].parents.push_back(next);
      graph[next].children = std::move(children);
    }
    while (!unsat_queue.empty()) {
      std::size_t n = unsat_queue.back();
      unsat_queue.pop_back();
      for (std::size_t p : graph[n].parents) {
        GraphNode& g = graph[p];
        if (g.unsat) continue;
        ++g.unsat_children;
        if (g.conjunctive || g.unsat_children == g.children.size()) {
          g.unsat = true;
          unsat_queue.push_back(p);
        }
      }
    }
    return !graph[0].unsat;
  }

  int first_open_or(const Bits& s) const {
    for (int o : ors_) {
      if (!s.test(o)) continue;
      const auto& args = pool_.node(o).args;
      if (std::none_of(args.begin(), args.end(), [&](int d) { return s.test(d); })) return o;
    }
    return -1;
  }

  Bits successor(const Bits& s, int e) const {
    const PoolNode& ex = pool_.node(e);
    Bits succ(pool_size_);
    succ.set(ex.args.front());
    for (int g : globals_) succ.set(g);
    for (int a : alls_) {
      if (!s.test(a)) continue;
      const PoolNode& al = pool_.node(a);
      if (role_sub_[static_cast<std::size_t>(ex.symbol)][static_cast<std::size_t>(al.symbol)]) {
        succ.set(al.args.front());
      }
    }
    return succ;
  }

  const ConceptPool& pool_;
  std::vector<std::vector<int>> unfold_;
  std::vector<int> globals_;
  std::vector<std::vector<bool>> role_sub_;
  std::size_t budget_;
  std::size_t pool_size_ = 0;
  std::size_t nodes_ = 0;
  std::vector<int> somes_, alls_, ors_;
  std::vector<int> pos_literal_, neg_literal_;
  std::vector<Bits> ancestors_;
  std::set<Bits> unsat_cache_, sat_cache_;
};

}  // namespace

EntailmentOracle::EntailmentOracle(const Ontology& o, ReasonerOptions options)
    : ontology_(&o), options_(options), pool_(std::make_unique<ConceptPool>()) {
  prepared_.reserve(o.size());
  for (const Axiom& a : o) {
    Prepared p{Prepared::Kind::kTautology};
    if (!a.is_gci()) {
      p.kind = Prepared::Kind::kRole;
      p.sub = pool_->role_name(a.role_inclusion().sub);
      p.sup = pool_->role_name(a.role_inclusion().sup);
      prepared_.push_back(p);
      continue;
    }
    const Gci& g = a.gci();
    // Absorption: A and R [= D becomes A [= not R or D.
    const Concept* trigger = nullptr;
    std::vector<const Concept*> rest;
    if (g.lhs.is_name()) {
      trigger = &g.lhs;
    } else if (g.lhs.kind == Concept::Kind::kAnd) {
      for (const auto& c : g.lhs.args) {
        if (!trigger && c.is_name()) {
          trigger = &c;
        } else {
          rest.push_back(&c);
        }
      }
    }
    int rhs = pool_->nnf(g.rhs, false);
    if (trigger) {
      std::vector<int> parts{rhs};
      for (const Concept* c : rest) parts.push_back(pool_->nnf(*c, true));
      p.kind = Prepared::Kind::kUnfold;
      p.name = pool_->concept_name(trigger->name);
      p.body = pool_->make_or(std::move(parts));
    } else {
      p.kind = Prepared::Kind::kGlobal;
      p.body = pool_->make_or({pool_->nnf(g.lhs, true), rhs});
    }
    if (pool_->node(p.body).kind == NodeKind::kTop) p.kind = Prepared::Kind::kTautology;
    prepared_.push_back(p);
  }
}

EntailmentOracle::~EntailmentOracle() = default;
EntailmentOracle::EntailmentOracle(EntailmentOracle&&) noexcept = default;
EntailmentOracle& EntailmentOracle::operator=(EntailmentOracle&&) noexcept = default;

bool EntailmentOracle::satisfiable(const AxiomSet& subset, const Concept& c) {
  ++calls_;
  int root = pool_->nnf(c, false);
  if (pool_->node(root).kind == NodeKind::kBot) return false;

  std::vector<std::vector<int>> unfold(pool_->concept_name_count());
  std::vector<int> globals;
  std::size_t roles = pool_->role_count();
  std::vector<std::vector<bool>> role_sub(roles, std::vector<bool>(roles, false));
  for (std::size_t r = 0; r < roles; ++r) role_sub[r][r] = true;

  for (AxiomIndex i : subset) {
    const Prepared& p = prepared_[i];
    switch (p.kind) {
      case Prepared::Kind::kTautology:
        break;
      case Prepared::Kind::kUnfold:
        unfold[static_cast<std::size_t>(p.name)].push_back(p.body);
        break;
      case Prepared::Kind::kGlobal:
        globals.push_back(p.body);
        break;
      case Prepared::Kind::kRole:
        role_sub[static_cast<std::size_t>(p.sub)][static_cast<std::size_t>(p.sup)] = true;
        break;
    }
  }
  // Reflexive-transitive closure of the role hierarchy.
  for (std::size_t k = 0; k < roles; ++k) {
    for (std::size_t i = 0; i < roles; ++i) {
      if (!role_sub[i][k]) continue;
      for (std::size_t j = 0; j < roles; ++j) {
        if (role_sub[k][j]) role_sub[i][j] = true;
      }
    }
  }
  for (int g : globals) {
    if (pool_->node(g).kind == NodeKind::kBot) return false;
  }
  Search search(*pool_, std::move(unfold), std::move(globals), std::move(role_sub),
                options_.node_budget);
  return search.satisfiable(root);
}

bool EntailmentOracle::entails(const AxiomSet& subset, const Gci& goal) {
  Concept test = Concept::conjunction({goal.lhs, Concept::negation(goal.rhs)});
  return !satisfiable(subset, test);
}

bool entails(const Ontology& o, const Gci& goal, ReasonerOptions options) {
  EntailmentOracle oracle(o, options);
  return oracle.entails(goal);
}

std::vector<Gci> classify(const Ontology& o, ReasonerOptions options) {
  EntailmentOracle oracle(o, options);
  Signature sig = signature_of(o);
  std::vector<Gci> out;
  for (const auto& a : sig.concepts) {
    for (const auto& b : sig.concepts) {
      if (a == b) continue;
      Gci g{Concept::atom(a), Concept::atom(b)};
      if (oracle.entails(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace pinpoint
