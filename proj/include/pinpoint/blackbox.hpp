#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pinpoint/ontology.hpp"
#include "pinpoint/tableau.hpp"

namespace pinpoint {

enum class Method { kBlackbox, kHst, kMusMembership, kBruteForce };

const char* to_string(Method m);

/// Justification search tree. Node 0 is the root; every other node has one
/// parent and the axiom labelling the edge from it.
class SearchTree {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId kRoot = 0;

  SearchTree();

  NodeId add_child(NodeId parent, AxiomIndex label);
  std::size_t size() const { return nodes_.size(); }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  AxiomIndex label(NodeId v) const { return nodes_[v].label; }
  const std::vector<NodeId>& children(NodeId v) const { return nodes_[v].children; }
  bool is_leaf(NodeId v) const { return nodes_[v].children.empty(); }

  /// Labels on the path from the root to v.
  AxiomSet path_labels(NodeId v) const;
  std::vector<AxiomIndex> path_sequence(NodeId v) const;

 private:
  struct Node {
    NodeId parent;
    AxiomIndex label;
    std::vector<NodeId> children;
  };
  std::vector<Node> nodes_;
};

/// True iff some explored node w has path labels equal to `path_axioms`, or
/// w is a leaf and its path labels are a subset of `path_axioms`.
bool is_path_redundant(const SearchTree& tree, SearchTree::NodeId root,
                       const AxiomSet& path_axioms,
                       const std::vector<SearchTree::NodeId>& explored);

struct PinpointResult {
  Method method = Method::kBlackbox;
  AxiomSet core;
  AxiomSet union_set;
  /// Justifications found along the way; complete only for enumeration.
  AxiomFamily justifications;
  std::size_t module_size = 0;
  std::size_t oracle_calls = 0;
  /// The search stopped because the core is itself a justification.
  bool early_return = false;
  /// Labels of the search-tree edges, in creation order.
  std::vector<AxiomIndex> edge_labels;
};

/// Intersection of all justifications: the module axioms whose removal
/// breaks the entailment. Throws Error(kNotEntailed).
AxiomSet compute_core(EntailmentOracle& oracle, const Gci& goal);

/// One justification by a deletion sweep in source order that never tries
/// to delete axioms of `core`. When `extract_module` is set the sweep starts
/// from the star module of `scope`; otherwise from `scope` itself.
AxiomSet single_justification(EntailmentOracle& oracle, const Gci& goal, const AxiomSet& core,
                              const AxiomSet& scope, bool extract_module);
AxiomSet single_justification(EntailmentOracle& oracle, const Gci& goal, const AxiomSet& core);

struct UnionOptions {
  /// Skip subtrees whose remaining axioms are all in the union found so far.
  bool prune_by_union = true;
  /// Stop as soon as a justification equals the core.
  bool early_return = true;
};

/// Union of all justifications by a hitting-set-tree search seeded with the
/// core. `core` must be the core of the goal.
PinpointResult union_of_all_justifications(EntailmentOracle& oracle, const Gci& goal,
                                           const AxiomSet& core, UnionOptions options = {});

/// Enumeration of every justification: the search above without union
/// pruning and without early return. `oracle_calls` excludes the core
/// computation and is the comparison baseline for the pruned search.
PinpointResult enumerate_justifications_hst(EntailmentOracle& oracle, const Gci& goal);
AxiomFamily enumerate_all_justifications(EntailmentOracle& oracle, const Gci& goal);

/// Throws Error(kNotEntailed) unless the whole ontology entails the goal.
/// Does not count towards oracle_calls of the results above.
void require_entailed(EntailmentOracle& oracle, const Gci& goal);

}  // namespace pinpoint
