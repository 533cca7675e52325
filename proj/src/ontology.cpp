#include "pinpoint/ontology.hpp"

#include <algorithm>
#include <iterator>

#include "pinpoint/error.hpp"

namespace pinpoint {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kDuplicateId: return "duplicate axiom id";
    case ErrorCode::kUnsupportedConstruct: return "unsupported construct";
    case ErrorCode::kNotEntailed: return "goal not entailed";
    case ErrorCode::kResourceLimit: return "resource limit exceeded";
    case ErrorCode::kPreconditionViolated: return "precondition violated";
    case ErrorCode::kEmptyMember: return "empty set in family";
    case ErrorCode::kNoRepair: return "no repair exists";
    case ErrorCode::kCapExceeded: return "brute-force cap exceeded";
    case ErrorCode::kDisagreement: return "methods disagree";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::kParse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Concept Concept::conjunction(std::vector<Concept> cs) {
  if (cs.size() < 2) throw Error(ErrorCode::kInvalidArgument, "conjunction needs two operands");
  return {Kind::kAnd, {}, std::move(cs)};
}

Concept Concept::disjunction(std::vector<Concept> cs) {
  if (cs.size() < 2) throw Error(ErrorCode::kInvalidArgument, "disjunction needs two operands");
  return {Kind::kOr, {}, std::move(cs)};
}

// AxiomSet

AxiomSet::AxiomSet(std::initializer_list<AxiomIndex> items) : items_(items) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

AxiomSet::AxiomSet(std::vector<AxiomIndex> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

AxiomSet AxiomSet::range(std::size_t n) {
  AxiomSet s;
  s.items_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.items_[i] = static_cast<AxiomIndex>(i);
  return s;
}

bool AxiomSet::contains(AxiomIndex i) const {
  return std::binary_search(items_.begin(), items_.end(), i);
}

void AxiomSet::insert(AxiomIndex i) {
  auto it = std::lower_bound(items_.begin(), items_.end(), i);
  if (it == items_.end() || *it != i) items_.insert(it, i);
}

void AxiomSet::erase(AxiomIndex i) {
  auto it = std::lower_bound(items_.begin(), items_.end(), i);
  if (it != items_.end() && *it == i) items_.erase(it);
}

bool AxiomSet::is_subset_of(const AxiomSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool AxiomSet::intersects(const AxiomSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

AxiomSet AxiomSet::operator|(const AxiomSet& other) const {
  AxiomSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

AxiomSet AxiomSet::operator&(const AxiomSet& other) const {
  AxiomSet out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
  return out;
}

AxiomSet AxiomSet::operator-(const AxiomSet& other) const {
  AxiomSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

AxiomSet AxiomSet::without(AxiomIndex i) const {
  AxiomSet out = *this;
  out.erase(i);
  return out;
}

void normalize_family(AxiomFamily& family) {
  std::sort(family.begin(), family.end(), [](const AxiomSet& a, const AxiomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

void Signature::merge(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
}

// Ontology

void Ontology::add(Axiom axiom) {
  if (index_.count(axiom.id) != 0) {
    throw Error(ErrorCode::kDuplicateId, "duplicate axiom id '" + axiom.id + "'");
  }
  index_.emplace(axiom.id, static_cast<AxiomIndex>(axioms_.size()));
  axioms_.push_back(std::move(axiom));
}

std::optional<AxiomIndex> Ontology::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AxiomSet Ontology::select(const std::vector<std::string>& ids) const {
  std::vector<AxiomIndex> out;
  for (const auto& id : ids) {
    auto i = find(id);
    if (!i) throw Error(ErrorCode::kInvalidArgument, "unknown axiom id '" + id + "'");
    out.push_back(*i);
  }
  return AxiomSet(std::move(out));
}

std::vector<std::string> Ontology::ids(const AxiomSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (AxiomIndex i : s) out.push_back(axioms_[i].id);
  return out;
}

Ontology Ontology::restrict(const AxiomSet& s) const {
  Ontology out;
  for (AxiomIndex i : s) out.add(axioms_[i]);
  return out;
}

// Signatures

namespace {

void collect(const Concept& c, Signature& sig) {
  switch (c.kind) {
    case Concept::Kind::kTop:
    case Concept::Kind::kBot:
      return;
    case Concept::Kind::kName:
      sig.concepts.insert(c.name);
      return;
    case Concept::Kind::kSome:
    case Concept::Kind::kAll:
      sig.roles.insert(c.name);
      break;
    default:
      break;
  }
  for (const auto& a : c.args) collect(a, sig);
}

}  // namespace

Signature signature_of(const Concept& c) {
  Signature sig;
  collect(c, sig);
  return sig;
}

Signature signature_of(const Gci& g) {
  Signature sig;
  collect(g.lhs, sig);
  collect(g.rhs, sig);
  return sig;
}

Signature signature_of(const Axiom& a) {
  if (a.is_gci()) return signature_of(a.gci());
  Signature sig;
  sig.roles.insert(a.role_inclusion().sub);
  sig.roles.insert(a.role_inclusion().sup);
  return sig;
}

Signature signature_of(const Ontology& o) {
  Signature sig;
  for (const auto& a : o) sig.merge(signature_of(a));
  return sig;
}

// Rendering

std::string to_string(const Concept& c) {
  auto nary = [&c](const char* op) {
    std::string s = std::string("(") + op;
    for (const auto& a : c.args) s += " " + to_string(a);
    return s + ")";
  };
  switch (c.kind) {
    case Concept::Kind::kTop: return "Top";
    case Concept::Kind::kBot: return "Bot";
    case Concept::Kind::kName: return c.name;
    case Concept::Kind::kNot: return nary("not");
    case Concept::Kind::kAnd: return nary("and");
    case Concept::Kind::kOr: return nary("or");
    case Concept::Kind::kSome: return "(some " + c.name + " " + to_string(c.filler()) + ")";
    case Concept::Kind::kAll: return "(all " + c.name + " " + to_string(c.filler()) + ")";
  }
  return {};
}

std::string to_string(const Gci& g) {
  return "(sub " + to_string(g.lhs) + " " + to_string(g.rhs) + ")";
}

std::string to_string(const RoleInclusion& r) { return "(rsub " + r.sub + " " + r.sup + ")"; }

std::string to_string(const Axiom& a) {
  return a.id + ": " + (a.is_gci() ? to_string(a.gci()) : to_string(a.role_inclusion()));
}

std::string join_ids(const Ontology& o, const AxiomSet& s) {
  std::string out;
  for (AxiomIndex i : s) {
    if (!out.empty()) out += ",";
    out += o[i].id;
  }
  return out;
}

}  // namespace pinpoint
