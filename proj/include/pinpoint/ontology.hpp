#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace pinpoint {

/// An ALC concept. Value semantics; structural equality and ordering are
/// total and deterministic so concepts can be used as map keys.
struct Concept {
  enum class Kind : std::uint8_t { kTop, kBot, kName, kNot, kAnd, kOr, kSome, kAll };

  Kind kind = Kind::kTop;
  std::string name;  // concept name for kName, role name for kSome/kAll
  std::vector<Concept> args;

  static Concept top() { return {Kind::kTop, {}, {}}; }
  static Concept bot() { return {Kind::kBot, {}, {}}; }
  static Concept atom(std::string n) { return {Kind::kName, std::move(n), {}}; }
  static Concept negation(Concept c) { return {Kind::kNot, {}, {std::move(c)}}; }
  /// Requires at least two operands.
  static Concept conjunction(std::vector<Concept> cs);
  static Concept disjunction(std::vector<Concept> cs);
  static Concept some(std::string role, Concept c) { return {Kind::kSome, std::move(role), {std::move(c)}}; }
  static Concept all(std::string role, Concept c) { return {Kind::kAll, std::move(role), {std::move(c)}}; }

  bool is_name() const { return kind == Kind::kName; }
  const Concept& filler() const { return args.front(); }

  auto operator<=>(const Concept&) const = default;
  bool operator==(const Concept&) const = default;
};

struct Gci {
  Concept lhs;
  Concept rhs;

  bool is_atomic() const { return lhs.is_name() && rhs.is_name(); }

  auto operator<=>(const Gci&) const = default;
  bool operator==(const Gci&) const = default;
};

struct RoleInclusion {
  std::string sub;
  std::string sup;

  auto operator<=>(const RoleInclusion&) const = default;
  bool operator==(const RoleInclusion&) const = default;
};

struct Axiom {
  std::string id;
  std::variant<Gci, RoleInclusion> body;

  bool is_gci() const { return std::holds_alternative<Gci>(body); }
  const Gci& gci() const { return std::get<Gci>(body); }
  const RoleInclusion& role_inclusion() const { return std::get<RoleInclusion>(body); }

  bool operator==(const Axiom&) const = default;
};

/// Position of an axiom inside its source ontology.
using AxiomIndex = std::uint32_t;

/// Sorted, duplicate-free set of axiom positions. Every algorithm works on
/// positions into one source ontology, so set identity is axiom identity.
class AxiomSet {
 public:
  using const_iterator = std::vector<AxiomIndex>::const_iterator;

  AxiomSet() = default;
  AxiomSet(std::initializer_list<AxiomIndex> items);
  explicit AxiomSet(std::vector<AxiomIndex> items);

  static AxiomSet range(std::size_t n);

  bool contains(AxiomIndex i) const;
  void insert(AxiomIndex i);
  void erase(AxiomIndex i);
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<AxiomIndex>& items() const { return items_; }

  bool is_subset_of(const AxiomSet& other) const;
  bool intersects(const AxiomSet& other) const;
  AxiomSet operator|(const AxiomSet& other) const;
  AxiomSet operator&(const AxiomSet& other) const;
  AxiomSet operator-(const AxiomSet& other) const;
  AxiomSet without(AxiomIndex i) const;

  auto operator<=>(const AxiomSet&) const = default;
  bool operator==(const AxiomSet&) const = default;

 private:
  std::vector<AxiomIndex> items_;
};

/// A set of sets, ordered by (size, members) for deterministic output.
using AxiomFamily = std::vector<AxiomSet>;
void normalize_family(AxiomFamily& family);

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;

  bool contains_concept(const std::string& n) const { return concepts.count(n) != 0; }
  bool contains_role(const std::string& n) const { return roles.count(n) != 0; }
  void merge(const Signature& other);
  bool operator==(const Signature&) const = default;
};

/// Ordered axiom collection with unique, stable IDs. Immutable once built
/// except through add().
class Ontology {
 public:
  Ontology() = default;

  /// Throws Error(kDuplicateId) on a repeated id.
  void add(Axiom axiom);

  std::size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }
  const Axiom& operator[](AxiomIndex i) const { return axioms_[i]; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  auto begin() const { return axioms_.begin(); }
  auto end() const { return axioms_.end(); }

  std::optional<AxiomIndex> find(std::string_view id) const;
  /// Throws Error(kInvalidArgument) for unknown ids.
  AxiomSet select(const std::vector<std::string>& ids) const;
  AxiomSet all() const { return AxiomSet::range(axioms_.size()); }
  std::vector<std::string> ids(const AxiomSet& s) const;
  /// Sub-ontology keeping ids and source order.
  Ontology restrict(const AxiomSet& s) const;

  bool operator==(const Ontology& other) const { return axioms_ == other.axioms_; }

 private:
  std::vector<Axiom> axioms_;
  std::unordered_map<std::string, AxiomIndex> index_;
};

Signature signature_of(const Concept& c);
Signature signature_of(const Gci& g);
Signature signature_of(const Axiom& a);
Signature signature_of(const Ontology& o);

/// "(sub A B)" style rendering, shared with the text format.
std::string to_string(const Concept& c);
std::string to_string(const Gci& g);
std::string to_string(const RoleInclusion& r);
std::string to_string(const Axiom& a);

/// Comma-joined ids in ontology order.
std::string join_ids(const Ontology& o, const AxiomSet& s);

}  // namespace pinpoint
