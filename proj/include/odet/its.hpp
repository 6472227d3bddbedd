#pragma once

#include <map>
#include <string>
#include <vector>

#include "odet/state_set.hpp"

namespace odet {

/// cover(B, alpha): indices j whose fulfillment set B(j) is contained in
/// the union of the B sets along alpha. Indices are 1-based; alpha entries
/// refer into b_family.
StateSet cover(const std::vector<StateSet>& b_family, const std::vector<int>& alpha);

/// mini(B, alpha): the minimal extensions of alpha — uncovered indices j
/// such that no other uncovered index extends the union to a strictly
/// smaller set, with equal extensions resolved toward the smallest index.
StateSet mini(const std::vector<StateSet>& b_family, const std::vector<int>& alpha);

/// mini depends on alpha only through the union of its B sets, which makes
/// memoization on that union exact.
class MiniCache {
public:
  explicit MiniCache(const std::vector<StateSet>& b_family) : b_family_(&b_family) {}

  const StateSet& of_union(const StateSet& accumulated);
  const StateSet& of_path(const std::vector<int>& alpha);

private:
  const std::vector<StateSet>* b_family_;
  std::map<StateSet, StateSet> memo_;
};

/// Increasing tree of sets: the unordered tree of all mini-extension label
/// sequences. Children are kept in ascending label order, which is the
/// canonical form for an unordered tree.
struct ItsNode {
  int label = 0;         // 0 at the root, else the extending index
  StateSet own;          // B(label); empty at the root
  StateSet cumulative;   // union of B sets from the root to this node
  std::vector<ItsNode> children;
};

struct ItsTree {
  ItsNode root;
  int n = 0;
  int k = 0;
};

ItsTree build_its(int n, int k, const std::vector<StateSet>& b_family);

int count_paths(const ItsTree& tree);
int count_nodes(const ItsTree& tree);

/// One node per line, two-space indentation, "label:{q0,q1}" with the
/// node's own B set, matching the usual drawing of these trees.
std::string its_to_text(const ItsTree& tree);

/// Canonical single-line form used for golden comparisons.
std::string its_canonical(const ItsTree& tree);

std::string its_to_dot(const ItsTree& tree);

}  // namespace odet
