#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "odet/automaton.hpp"

namespace odet {

enum class NodeColor { green, red, yellow };

inline char color_char(NodeColor c) {
  switch (c) {
    case NodeColor::green: return 'g';
    case NodeColor::red: return 'r';
    case NodeColor::yellow: return 'y';
  }
  return '?';
}

/// Ordered tree of named, colored, state-labeled, index-labeled nodes.
/// One tree is one state of the determinized automaton; the empty tree
/// (root == -1) is the absorbing dead state.
///
/// Nodes live in an arena and are never reindexed during a transition step,
/// so node ids double as stable identities. The prev_* / birth / green_event
/// fields are per-step bookkeeping consumed by naming and coloring.
struct SafraTree {
  struct Node {
    int name = 0;
    int index_label = 0;
    NodeColor color = NodeColor::red;
    StateSet states;
    int parent = -1;
    std::vector<int> children;
    bool alive = true;

    int prev_name = 0;  // name before the step; 0 = created during the step
    int birth = 0;      // older-than rank, lower is older
    bool green_event = false;
    bool was_head = false;  // headed a left spine before the step
    int prev_bucket = 0;
  };

  std::vector<Node> nodes;
  int root = -1;

  bool is_empty_tree() const { return root < 0; }

  Node& at(int v) { return nodes[static_cast<std::size_t>(v)]; }
  const Node& at(int v) const { return nodes[static_cast<std::size_t>(v)]; }

  int add_root(StateSet states, int name);
  int add_child(int parent, StateSet states, int index_label, int birth);

  void kill_subtree(int v);
  /// Removes the states in `x` from `v` and every descendant; nodes whose
  /// state label empties are removed with their subtrees.
  void remove_states_in_subtree(int v, const StateSet& x);

  /// Nonzero index labels from the root to `v`, inclusive.
  std::vector<int> path_labels(int v) const;
  StateSet path_label_set(int v) const;

  std::vector<int> alive_preorder() const;
  int alive_count() const;
  bool is_leaf(int v) const;

  /// Drops dead nodes and renumbers; child order and bookkeeping survive.
  void compact();
};

/// Canonical serialization: preorder of (name, indexLabel, color, states)
/// with parenthesized children. Two trees are the same determinized state
/// iff their keys are equal. The empty tree serializes as "-".
std::string tree_key(const SafraTree& t);

/// Maximal leftmost-child chains, each ending at a leaf, ordered by their
/// leaf from left to right. Every alive node lies on exactly one spine.
std::vector<std::vector<int>> left_spines(const SafraTree& t);

/// Records pre-step identity on every alive node: previous name, age rank,
/// and (for the reduced construction) spine headship and bucket, with
/// buckets of width mu+1 recovered from the head names.
void stamp_previous(SafraTree& t, int mu);

/// Removes duplicate states among siblings: the copy in the child with the
/// smaller index label survives, ties to the older sibling.
void horizontal_merge(SafraTree& t);

/// Where all children of a node carry index label 0, removes the node's
/// descendants and records the fulfillment as a green event.
void vertical_merge(SafraTree& t);

/// Reorders siblings by descending index label, ties older-left.
void sort_siblings_structurally(SafraTree& t);

/// Retail naming: survivors keep their names, new nodes take the smallest
/// unused name in creation order.
void assign_names_retail(SafraTree& t);

struct RenameResult {
  std::vector<int> spine_buckets;  // bucket per spine, in leaf order
  std::vector<int> renamed_nodes;  // surviving nodes whose name changed
};

/// Wholesale naming: each spine whose head already headed a spine before
/// the step keeps that bucket; every other spine claims the smallest bucket
/// not yet claimed in this tree. Names follow the bucket law
/// name = (mu+1)*(bucket-1) + depth-in-spine.
RenameResult rename_spines(SafraTree& t, int mu);

/// New or renamed nodes turn red, survivors of a green event green,
/// everything else yellow. A rename wins over a green event.
void apply_step_colors(SafraTree& t);

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(std::size_t cap)
      : std::runtime_error("exploration cap of " + std::to_string(cap) + " states exceeded") {}
};

struct DetOptions {
  std::size_t cap = 1'000'000;
  bool validate_states = false;  // run the invariant checker on every state
};

struct DetStats {
  std::size_t states = 0;
  int index_size = 0;
  int max_tree_nodes = 0;
  int max_spine_len = 0;
};

struct DetResult {
  Automaton automaton;                  // deterministic, total, Rabin
  std::vector<std::string> state_keys;  // canonical tree per output state
  DetStats stats;
  std::vector<std::string> violations;  // nonempty only with validate_states
};

namespace detail {

using StepFn = std::function<SafraTree(const SafraTree&, int)>;
using CheckFn = std::function<std::vector<std::string>(const SafraTree&)>;

DetResult determinize_core(const Automaton& a, const SafraTree& initial, const StepFn& step,
                           int min_index_size, const DetOptions& opts, const CheckFn& check);

}  // namespace detail

}  // namespace odet
