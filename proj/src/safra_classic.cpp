#include "odet/safra_classic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace odet {

namespace {

constexpr int kFreshBirthBase = 1'000'000;

void require_streett(const Automaton& a, const char* who) {
  if (a.acceptance.kind != AcceptanceKind::streett)
    throw std::invalid_argument(std::string(who) + ": input must be a Streett automaton");
  if (!validate(a).empty())
    throw std::invalid_argument(std::string(who) + ": input fails validation");
}

// Top-down expansion. Each node is handled once, by its shape at visit
// time: an unexhausted leaf sprouts one child carrying its full state
// label and the largest unused obligation; a non-leaf sweeps the children
// it had on arrival. Children created along the way are visited afterwards
// and may sprout in turn, so the tree leaves the step fully grown.
void expand(SafraTree& t, const Automaton& a, int v, int& fresh_birth) {
  if (!t.at(v).alive) return;
  int k = a.acceptance.pair_count();

  std::vector<int> snapshot;
  for (int c : t.at(v).children)
    if (t.at(c).alive) snapshot.push_back(c);

  if (snapshot.empty()) {
    StateSet used = t.path_label_set(v);
    int pick = 0;
    for (int i = k; i >= 1; --i)
      if (!used.contains(i)) {
        pick = i;
        break;
      }
    if (pick != 0) t.add_child(v, t.at(v).states, pick, fresh_birth++);
  } else {
    for (int c : snapshot) {
      if (!t.at(c).alive) continue;
      int obligation = t.at(c).index_label;
      if (obligation == 0) continue;
      StateSet fulfilled = set_intersection(t.at(c).states, a.acceptance.b_set(obligation));
      if (!fulfilled.empty()) {
        // the run moves on to the next positive obligation below, 0 when
        // the sweep is complete
        StateSet used = t.path_label_set(v);
        int pick = 0;
        for (int cand = obligation - 1; cand >= 1; --cand)
          if (!used.contains(cand)) {
            pick = cand;
            break;
          }
        t.add_child(v, fulfilled, pick, fresh_birth++);
        t.remove_states_in_subtree(c, fulfilled);
      }
      if (!t.at(c).alive) continue;
      StateSet reset = set_intersection(t.at(c).states, a.acceptance.g_set(obligation));
      if (!reset.empty()) {
        // negative obligation violated without fulfillment: restart in a
        // fresh sibling that keeps watching the same obligation
        t.add_child(v, reset, obligation, fresh_birth++);
        t.remove_states_in_subtree(c, reset);
      }
    }
  }

  // re-read the child list each round: expanding a child may grow the arena
  for (std::size_t i = 0; i < t.at(v).children.size(); ++i)
    expand(t, a, t.at(v).children[i], fresh_birth);
}

}  // namespace

SafraTree initial_classic(const Automaton& a) {
  require_streett(a, "initial_classic");
  SafraTree t;
  t.add_root(a.initial, 1);
  return t;
}

SafraTree classic_step(const Automaton& a, const SafraTree& t, int letter) {
  if (t.is_empty_tree()) return t;
  SafraTree w = t;
  stamp_previous(w, -1);

  for (int v : w.alive_preorder()) w.at(v).states = subset_step(a, w.at(v).states, letter);
  for (int v : w.alive_preorder())
    if (w.at(v).states.empty()) w.kill_subtree(v);
  if (!w.at(w.root).alive) return SafraTree{};

  int fresh_birth = kFreshBirthBase;
  expand(w, a, w.root, fresh_birth);
  horizontal_merge(w);
  vertical_merge(w);
  if (a.acceptance.pair_count() == 0) w.at(w.root).green_event = true;

  w.compact();
  assign_names_retail(w);
  apply_step_colors(w);
  return w;
}

DetResult determinize_classic(const Automaton& a, const DetOptions& opts) {
  require_streett(a, "determinize_classic");
  int n = a.state_count;
  int k = a.acceptance.pair_count();
  return detail::determinize_core(
      a, initial_classic(a),
      [&a](const SafraTree& t, int letter) { return classic_step(a, t, letter); }, n * k, opts,
      [&a](const SafraTree& t) { return check_sts(t, a); });
}

std::vector<std::string> check_sts(const SafraTree& t, const Automaton& a) {
  std::vector<std::string> bad;
  if (t.is_empty_tree()) return bad;
  int k = a.acceptance.pair_count();

  std::set<int> names;
  for (int v : t.alive_preorder()) {
    const SafraTree::Node& node = t.at(v);
    if (node.name < 1) bad.push_back("node name below 1");
    if (!names.insert(node.name).second)
      bad.push_back("duplicate node name " + std::to_string(node.name));
    if (node.states.empty()) bad.push_back("empty state label");
    if (node.index_label < 0 || node.index_label > k)
      bad.push_back("index label out of range");

    std::vector<int> kids;
    for (int c : node.children)
      if (t.at(c).alive) kids.push_back(c);
    if (!kids.empty()) {
      StateSet together;
      for (int c : kids) {
        if (together.intersects(t.at(c).states))
          bad.push_back("sibling state labels overlap under node " + std::to_string(node.name));
        together.unite_with(t.at(c).states);
      }
      if (!(together == node.states))
        bad.push_back("state label differs from union of children at node " +
                      std::to_string(node.name));
    }

    // no positive index may repeat along the path
    StateSet seen;
    for (int cur = v; cur >= 0; cur = t.at(cur).parent) {
      int label = t.at(cur).index_label;
      if (label != 0) {
        if (seen.contains(label)) {
          bad.push_back("index " + std::to_string(label) + " repeats along a path");
          break;
        }
        seen.insert(label);
      }
    }
  }
  if (t.at(t.root).index_label != 0) bad.push_back("root index label not 0");
  return bad;
}

}  // namespace odet
