#include "pinpoint/blackbox.hpp"

#include <algorithm>
#include <deque>

#include "pinpoint/error.hpp"
#include "pinpoint/locality.hpp"

namespace pinpoint {

const char* to_string(Method m) {
  switch (m) {
    case Method::kBlackbox: return "blackbox";
    case Method::kHst: return "hst";
    case Method::kMusMembership: return "musmem";
    case Method::kBruteForce: return "brute";
  }
  return "?";
}

SearchTree::SearchTree() { nodes_.push_back(Node{kRoot, 0, {}}); }

SearchTree::NodeId SearchTree::add_child(NodeId parent, AxiomIndex label) {
  NodeId id = nodes_.size();
  nodes_.push_back(Node{parent, label, {}});
  nodes_[parent].children.push_back(id);
  return id;
}

std::vector<AxiomIndex> SearchTree::path_sequence(NodeId v) const {
  std::vector<AxiomIndex> out;
  for (; v != kRoot; v = nodes_[v].parent) out.push_back(nodes_[v].label);
  std::reverse(out.begin(), out.end());
  return out;
}

AxiomSet SearchTree::path_labels(NodeId v) const { return AxiomSet(path_sequence(v)); }

bool is_path_redundant(const SearchTree& tree, SearchTree::NodeId root,
                       const AxiomSet& path_axioms,
                       const std::vector<SearchTree::NodeId>& explored) {
  (void)root;  // paths are always taken from the tree root
  for (SearchTree::NodeId w : explored) {
    AxiomSet labels = tree.path_labels(w);
    if (!labels.is_subset_of(path_axioms)) continue;
    if (path_axioms.is_subset_of(labels)) return true;
    if (tree.is_leaf(w)) return true;
  }
  return false;
}

void require_entailed(EntailmentOracle& oracle, const Gci& goal) {
  const std::size_t before = oracle.calls();
  const bool ok = oracle.entails(goal);
  oracle.set_calls(before);
  if (!ok) throw Error(ErrorCode::kNotEntailed, "goal " + to_string(goal) + " is not entailed");
}

namespace {

AxiomSet module_for(const EntailmentOracle& oracle, const Gci& goal) {
  return extract_star_module(oracle.ontology(), signature_of(goal));
}

}  // namespace

AxiomSet compute_core(EntailmentOracle& oracle, const Gci& goal) {
  require_entailed(oracle, goal);
  AxiomSet module = module_for(oracle, goal);
  AxiomSet core;
  for (AxiomIndex b : module) {
    if (!oracle.entails(module.without(b), goal)) core.insert(b);
  }
  return core;
}

AxiomSet single_justification(EntailmentOracle& oracle, const Gci& goal, const AxiomSet& core,
                              const AxiomSet& scope, bool extract_module) {
  AxiomSet current =
      extract_module ? extract_star_module(oracle.ontology(), scope, signature_of(goal)) : scope;
  for (AxiomIndex b : std::vector<AxiomIndex>(current.items())) {
    if (core.contains(b)) continue;
    AxiomSet smaller = current.without(b);
    if (oracle.entails(smaller, goal)) current = std::move(smaller);
  }
  return current;
}

AxiomSet single_justification(EntailmentOracle& oracle, const Gci& goal, const AxiomSet& core) {
  require_entailed(oracle, goal);
  return single_justification(oracle, goal, core, oracle.ontology().all(), true);
}

PinpointResult union_of_all_justifications(EntailmentOracle& oracle, const Gci& goal,
                                           const AxiomSet& core, UnionOptions options) {
  require_entailed(oracle, goal);
  const std::size_t calls_before = oracle.calls();

  PinpointResult result;
  result.method = options.prune_by_union ? Method::kBlackbox : Method::kHst;
  result.core = core;
  const AxiomSet module = module_for(oracle, goal);
  result.module_size = module.size();
  result.union_set = core;

  SearchTree tree;
  std::deque<SearchTree::NodeId> queue{SearchTree::kRoot};
  std::vector<SearchTree::NodeId> explored;
  AxiomFamily& found = result.justifications;

  while (!queue.empty()) {
    SearchTree::NodeId v = queue.front();
    queue.pop_front();
    const AxiomSet removed = tree.path_labels(v);
    // v itself is not yet among the explored nodes it is compared against.
    bool redundant = is_path_redundant(tree, SearchTree::kRoot, removed, explored);
    explored.push_back(v);
    if (redundant) continue;

    const AxiomSet remaining = module - removed;
    if (options.prune_by_union && remaining.is_subset_of(result.union_set)) {
      if (v == SearchTree::kRoot && options.early_return) {
        // The whole module is the core, hence the only justification.
        found.push_back(core);
        result.early_return = true;
        break;
      }
      continue;
    }
    if (!oracle.entails(remaining, goal)) continue;

    AxiomSet justification;
    auto reusable = std::find_if(found.begin(), found.end(),
                                 [&](const AxiomSet& j) { return !j.intersects(removed); });
    if (reusable != found.end()) {
      justification = *reusable;
    } else {
      justification = single_justification(oracle, goal, core, remaining, false);
      if (options.early_return && justification == core) {
        found = {core};
        result.union_set = core;
        result.early_return = true;
        break;
      }
      found.push_back(justification);
      result.union_set = result.union_set | justification;
    }

    for (AxiomIndex b : justification - core) {
      SearchTree::NodeId child = tree.add_child(v, b);
      result.edge_labels.push_back(b);
      queue.push_front(child);
    }
  }

  result.oracle_calls = oracle.calls() - calls_before;
  normalize_family(found);
  return result;
}

PinpointResult enumerate_justifications_hst(EntailmentOracle& oracle, const Gci& goal) {
  const std::size_t before = oracle.calls();
  AxiomSet core = compute_core(oracle, goal);
  oracle.set_calls(before);
  PinpointResult r = union_of_all_justifications(oracle, goal, core, UnionOptions{false, false});
  r.method = Method::kHst;
  return r;
}

AxiomFamily enumerate_all_justifications(EntailmentOracle& oracle, const Gci& goal) {
  return enumerate_justifications_hst(oracle, goal).justifications;
}

}  // namespace pinpoint
