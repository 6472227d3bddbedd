#pragma once

#include "odet/its.hpp"
#include "odet/safra_tree.hpp"

namespace odet {

/// mu = min(n, k), the bound on spine length minus one and on the number
/// of nonzero index labels along a path.
int spine_depth_bound(const Automaton& a);

/// Extends every leaf whose label path still has minimal extensions with a
/// chain of children, each carrying the parent's state label, the largest
/// minimal extension as index label, the parent's name + 1, and red.
void grow_left_spine(const Automaton& a, SafraTree& t);

/// A single fully grown left spine over the initial state set: root named 1
/// with index 0, chain labels following max-of-mini, bucket 1.
SafraTree initial_improved(const Automaton& a);

/// One transition of the reduced tree construction: subset construction,
/// expansion with mini-based obligations, horizontal and vertical merge,
/// full regrowth of left spines, structural sibling reordering, wholesale
/// bucket renaming and recoloring.
SafraTree improved_step(const Automaton& a, const SafraTree& t, int letter);

/// Breadth-first closure of improved_step; pairs read as in
/// determinize_classic, over index set [1..n*(mu+1)].
DetResult determinize_improved(const Automaton& a, const DetOptions& opts = {});

/// Reduced-tree invariants: classic invariants plus node-count, spine and
/// bucket-law bounds, mini-pruned index labels and full growth.
std::vector<std::string> check_rsts(const SafraTree& t, const Automaton& a);

}  // namespace odet
