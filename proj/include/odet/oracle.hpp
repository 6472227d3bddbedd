#pragma once

#include <vector>

#include "odet/automaton.hpp"

namespace odet {

/// Product of an automaton with an ultimately periodic word u.v^omega.
/// Nodes are (state, position) pairs with position in [0..|u|+|v|); the
/// position advances through u and then cycles inside v. Only nodes
/// reachable from the initial nodes are materialized.
struct ProductGraph {
  std::vector<std::vector<int>> succ;  // adjacency by node id
  std::vector<int> node_state;         // automaton state of each node
  std::vector<int> node_pos;           // word position of each node
  std::vector<int> initial_nodes;

  int node_count() const { return static_cast<int>(succ.size()); }
};

ProductGraph build_product(const Automaton& a, const LassoWord& w);

/// Tarjan decomposition into strongly connected components, returned in
/// reverse topological order. A component is nontrivial when it has an
/// internal edge (size >= 2, or a single node with a self-loop).
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  std::vector<bool> nontrivial;
};

SccDecomposition scc_decompose(const std::vector<std::vector<int>>& succ);

// Nonemptiness of the product under each acceptance reading. State sets are
// the automaton-level sets; they apply to a product node through its state.
bool nonempty_buchi(const ProductGraph& g, const StateSet& final_set);
bool nonempty_gen_buchi(const ProductGraph& g, const std::vector<StateSet>& b_family);
bool nonempty_streett(const ProductGraph& g, const std::vector<StateSet>& g_family,
                      const std::vector<StateSet>& b_family);
bool nonempty_parity(const ProductGraph& g, const std::vector<StateSet>& g_family,
                     const std::vector<StateSet>& b_family);
bool nonempty_rabin(const ProductGraph& g, const std::vector<StateSet>& g_family,
                    const std::vector<StateSet>& b_family);

/// Ground truth: does some run of `a` over u.v^omega satisfy the acceptance
/// condition? Throws std::invalid_argument on an alphabet mismatch.
bool member(const Automaton& a, const LassoWord& w);

/// Fast path for deterministic total automata: simulates the unique run,
/// detects the (state, position) cycle and evaluates the acceptance
/// predicate on the set of states along the cycle.
bool member_deterministic(const Automaton& a, const LassoWord& w);

/// member() with the deterministic fast path when it applies.
bool accepts(const Automaton& a, const LassoWord& w);

}  // namespace odet
