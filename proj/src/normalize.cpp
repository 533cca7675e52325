#include "pinpoint/normalize.hpp"

#include <algorithm>

namespace pinpoint {
namespace {

using K = Concept::Kind;

class AxiomNormalizer {
 public:
  AxiomNormalizer(const Axiom& source, AxiomIndex origin, NormalizedTBox& out)
      : source_(source), origin_(origin), out_(out) {}

  void run() {
    if (!source_.is_gci()) {
      NormalAxiom n;
      n.kind = NormalAxiom::Kind::kRoleInclusion;
      n.role = source_.role_inclusion().sub;
      n.super_role = source_.role_inclusion().sup;
      n.origin = origin_;
      out_.axioms.push_back(std::move(n));
      return;
    }
    process({source_.gci().lhs}, {source_.gci().rhs});
  }

 private:
  std::string fresh() {
    std::string name = "#" + std::to_string(++counter_) + "@" + source_.id;
    out_.fresh_names.push_back(name);
    return name;
  }

  void emit(NormalAxiom n) {
    n.origin = origin_;
    out_.axioms.push_back(std::move(n));
  }

  // Name standing for c in a positive position: name [= c.
  std::string positive_name(const Concept& c) {
    if (c.is_name()) return c.name;
    std::string y = fresh();
    process({Concept::atom(y)}, {c});
    return y;
  }

  // Name standing for c in a negative position: c [= name.
  std::string negative_name(const Concept& c) {
    if (c.is_name()) return c.name;
    std::string y = fresh();
    process({c}, {Concept::atom(y)});
    return y;
  }

  // Normalizes (and lhs) [= (or rhs).
  void process(std::vector<Concept> lhs, std::vector<Concept> rhs) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i].is_name()) continue;
      Concept c = lhs[i];
      lhs.erase(lhs.begin() + static_cast<std::ptrdiff_t>(i));
      switch (c.kind) {
        case K::kTop:
          break;
        case K::kBot:
          return;
        case K::kNot:
          rhs.push_back(c.filler());
          break;
        case K::kAnd:
          lhs.insert(lhs.end(), c.args.begin(), c.args.end());
          break;
        case K::kOr:
          for (const auto& d : c.args) {
            auto branch = lhs;
            branch.push_back(d);
            process(std::move(branch), rhs);
          }
          return;
        case K::kSome:
          if (lhs.empty() && rhs.size() == 1 && rhs.front().is_name()) {
            NormalAxiom n;
            n.kind = NormalAxiom::Kind::kExistsLeft;
            n.role = c.name;
            n.filler = negative_name(c.filler());
            n.rhs = {rhs.front().name};
            emit(std::move(n));
            return;
          } else {
            std::string z = fresh();
            process({c}, {Concept::atom(z)});
            lhs.push_back(Concept::atom(z));
          }
          break;
        case K::kAll:
          rhs.push_back(Concept::some(c.name, Concept::negation(c.filler())));
          break;
        case K::kName:
          break;
      }
      return process(std::move(lhs), std::move(rhs));
    }

    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (rhs[i].is_name()) continue;
      Concept c = rhs[i];
      rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(i));
      switch (c.kind) {
        case K::kBot:
          break;
        case K::kTop:
          return;
        case K::kNot:
          lhs.push_back(c.filler());
          break;
        case K::kOr:
          rhs.insert(rhs.end(), c.args.begin(), c.args.end());
          break;
        case K::kAnd:
          for (const auto& d : c.args) {
            auto branch = rhs;
            branch.push_back(d);
            process(lhs, std::move(branch));
          }
          return;
        case K::kSome:
        case K::kAll: {
          const bool exists = c.kind == K::kSome;
          if (lhs.size() == 1 && rhs.empty()) {
            NormalAxiom n;
            n.kind = exists ? NormalAxiom::Kind::kExistsRight : NormalAxiom::Kind::kForallRight;
            n.lhs = {lhs.front().name};
            n.role = c.name;
            n.filler = positive_name(c.filler());
            emit(std::move(n));
            return;
          }
          std::string z = fresh();
          process({Concept::atom(z)}, {c});
          rhs.push_back(Concept::atom(z));
          break;
        }
        case K::kName:
          break;
      }
      return process(std::move(lhs), std::move(rhs));
    }

    NormalAxiom n;
    n.kind = NormalAxiom::Kind::kSubsumption;
    for (const auto& c : lhs) n.lhs.push_back(c.name);
    for (const auto& c : rhs) n.rhs.push_back(c.name);
    std::sort(n.lhs.begin(), n.lhs.end());
    n.lhs.erase(std::unique(n.lhs.begin(), n.lhs.end()), n.lhs.end());
    std::sort(n.rhs.begin(), n.rhs.end());
    n.rhs.erase(std::unique(n.rhs.begin(), n.rhs.end()), n.rhs.end());
    for (const auto& a : n.lhs) {
      if (std::binary_search(n.rhs.begin(), n.rhs.end(), a)) return;  // tautology
    }
    emit(std::move(n));
  }

  const Axiom& source_;
  AxiomIndex origin_;
  NormalizedTBox& out_;
  int counter_ = 0;
};

std::string join(const std::vector<std::string>& xs, const char* sep, const char* empty) {
  if (xs.empty()) return empty;
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

}  // namespace

std::string to_string(const NormalAxiom& a) {
  using NK = NormalAxiom::Kind;
  switch (a.kind) {
    case NK::kSubsumption:
      return join(a.lhs, " and ", "Top") + " [= " + join(a.rhs, " or ", "Bot");
    case NK::kExistsRight:
      return a.lhs.front() + " [= some " + a.role + "." + a.filler;
    case NK::kExistsLeft:
      return "some " + a.role + "." + a.filler + " [= " + a.rhs.front();
    case NK::kForallRight:
      return a.lhs.front() + " [= all " + a.role + "." + a.filler;
    case NK::kRoleInclusion:
      return a.role + " [= " + a.super_role;
  }
  return {};
}

NormalizedTBox normalize(const Ontology& o) {
  NormalizedTBox out;
  for (AxiomIndex i = 0; i < o.size(); ++i) AxiomNormalizer(o[i], i, out).run();
  return out;
}

}  // namespace pinpoint
