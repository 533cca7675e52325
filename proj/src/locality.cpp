#include "pinpoint/locality.hpp"

namespace pinpoint {
namespace {

using K = Concept::Kind;

// Classifies a concept under the substitution fixed by `sig` and `mode`:
// bottom-equivalent, top-equivalent, or neither.
enum class Equiv { kBot, kTop, kOther };

class LocalityEval {
 public:
  LocalityEval(const Signature& sig, bool top_mode) : sig_(sig), top_mode_(top_mode) {}

  Equiv operator()(const Concept& c) const {
    switch (c.kind) {
      case K::kTop: return Equiv::kTop;
      case K::kBot: return Equiv::kBot;
      case K::kName:
        if (sig_.contains_concept(c.name)) return Equiv::kOther;
        return top_mode_ ? Equiv::kTop : Equiv::kBot;
      case K::kNot:
        switch ((*this)(c.filler())) {
          case Equiv::kBot: return Equiv::kTop;
          case Equiv::kTop: return Equiv::kBot;
          default: return Equiv::kOther;
        }
      case K::kAnd: {
        bool all_top = true;
        for (const auto& a : c.args) {
          Equiv e = (*this)(a);
          if (e == Equiv::kBot) return Equiv::kBot;
          if (e != Equiv::kTop) all_top = false;
        }
        return all_top ? Equiv::kTop : Equiv::kOther;
      }
      case K::kOr: {
        bool all_bot = true;
        for (const auto& a : c.args) {
          Equiv e = (*this)(a);
          if (e == Equiv::kTop) return Equiv::kTop;
          if (e != Equiv::kBot) all_bot = false;
        }
        return all_bot ? Equiv::kBot : Equiv::kOther;
      }
      case K::kSome: {
        Equiv f = (*this)(c.filler());
        if (f == Equiv::kBot) return Equiv::kBot;
        if (sig_.contains_role(c.name)) return Equiv::kOther;
        // Outside the signature the role is empty (bot mode) or universal (top mode).
        if (!top_mode_) return Equiv::kBot;
        return f == Equiv::kTop ? Equiv::kTop : Equiv::kOther;
      }
      case K::kAll: {
        Equiv f = (*this)(c.filler());
        if (f == Equiv::kTop) return Equiv::kTop;
        if (sig_.contains_role(c.name)) return Equiv::kOther;
        if (!top_mode_) return Equiv::kTop;
        return f == Equiv::kBot ? Equiv::kBot : Equiv::kOther;
      }
    }
    return Equiv::kOther;
  }

 private:
  const Signature& sig_;
  bool top_mode_;
};

bool is_local(const Axiom& axiom, const Signature& sig, bool top_mode) {
  if (!axiom.is_gci()) {
    const auto& r = axiom.role_inclusion();
    return top_mode ? !sig.contains_role(r.sup) : !sig.contains_role(r.sub);
  }
  LocalityEval eval(sig, top_mode);
  const Gci& g = axiom.gci();
  return eval(g.lhs) == Equiv::kBot || eval(g.rhs) == Equiv::kTop;
}

AxiomSet extract_module(const Ontology& o, const AxiomSet& subset, const Signature& seed,
                        bool top_mode) {
  Signature sig = seed;
  AxiomSet module;
  bool changed = true;
  while (changed) {
    changed = false;
    for (AxiomIndex i : subset) {
      if (module.contains(i)) continue;
      if (!is_local(o[i], sig, top_mode)) {
        module.insert(i);
        sig.merge(signature_of(o[i]));
        changed = true;
      }
    }
  }
  return module;
}

}  // namespace

bool is_bot_local(const Axiom& axiom, const Signature& sig) { return is_local(axiom, sig, false); }

bool is_top_local(const Axiom& axiom, const Signature& sig) { return is_local(axiom, sig, true); }

AxiomSet extract_star_module(const Ontology& o, const Signature& sig) {
  return extract_star_module(o, o.all(), sig);
}

AxiomSet extract_star_module(const Ontology& o, const AxiomSet& subset, const Signature& sig) {
  AxiomSet current = subset;
  bool top_mode = false;
  int stable_rounds = 0;
  // Stop once a bot pass and a top pass in a row leave the set unchanged.
  while (stable_rounds < 2) {
    AxiomSet next = extract_module(o, current, sig, top_mode);
    stable_rounds = next == current ? stable_rounds + 1 : 0;
    current = std::move(next);
    top_mode = !top_mode;
  }
  return current;
}

}  // namespace pinpoint
