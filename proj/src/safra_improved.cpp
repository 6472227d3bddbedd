#include "odet/safra_improved.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "odet/safra_classic.hpp"

namespace odet {

namespace {

constexpr int kFreshBirthBase = 1'000'000;

void require_streett(const Automaton& a, const char* who) {
  if (a.acceptance.kind != AcceptanceKind::streett)
    throw std::invalid_argument(std::string(who) + ": input must be a Streett automaton");
  if (!validate(a).empty())
    throw std::invalid_argument(std::string(who) + ": input fails validation");
}

// Expansion sweeps non-leaf nodes only; growth happens at the end of the
// step. The next obligation after a fulfillment is drawn from the minimal
// extensions of the parent's label path instead of from all unused indices.
void expand(SafraTree& t, const Automaton& a, MiniCache& cache, int v, int& fresh_birth) {
  if (!t.at(v).alive) return;

  std::vector<int> snapshot;
  for (int c : t.at(v).children)
    if (t.at(c).alive) snapshot.push_back(c);

  for (int c : snapshot) {
    if (!t.at(c).alive) continue;
    int obligation = t.at(c).index_label;
    if (obligation == 0) continue;
    StateSet fulfilled = set_intersection(t.at(c).states, a.acceptance.b_set(obligation));
    if (!fulfilled.empty()) {
      const StateSet& candidates = cache.of_path(t.path_labels(v));
      int pick = 0;
      for (int cand : candidates)
        if (cand < obligation) pick = std::max(pick, cand);
      t.add_child(v, fulfilled, pick, fresh_birth++);
      t.remove_states_in_subtree(c, fulfilled);
    }
    if (!t.at(c).alive) continue;
    StateSet reset = set_intersection(t.at(c).states, a.acceptance.g_set(obligation));
    if (!reset.empty()) {
      t.add_child(v, reset, obligation, fresh_birth++);
      t.remove_states_in_subtree(c, reset);
    }
  }

  for (std::size_t i = 0; i < t.at(v).children.size(); ++i)
    expand(t, a, cache, t.at(v).children[i], fresh_birth);
}

void grow_fully(SafraTree& t, MiniCache& cache, int& fresh_birth) {
  std::vector<int> leaves;
  for (int v : t.alive_preorder())
    if (t.is_leaf(v)) leaves.push_back(v);
  for (int leaf : leaves) {
    int cur = leaf;
    while (true) {
      const StateSet& m = cache.of_path(t.path_labels(cur));
      if (m.empty()) break;
      cur = t.add_child(cur, t.at(cur).states, m.max(), fresh_birth++);
    }
  }
}

}  // namespace

int spine_depth_bound(const Automaton& a) {
  return std::min(a.state_count, a.acceptance.pair_count());
}

void grow_left_spine(const Automaton& a, SafraTree& t) {
  MiniCache cache(a.acceptance.b);
  std::vector<int> leaves;
  for (int v : t.alive_preorder())
    if (t.is_leaf(v)) leaves.push_back(v);
  for (int leaf : leaves) {
    int cur = leaf;
    while (true) {
      const StateSet& m = cache.of_path(t.path_labels(cur));
      if (m.empty()) break;
      int next = t.add_child(cur, t.at(cur).states, m.max(), t.at(cur).birth + 1);
      t.at(next).name = t.at(cur).name + 1;
      t.at(next).color = NodeColor::red;
      cur = next;
    }
  }
}

SafraTree initial_improved(const Automaton& a) {
  require_streett(a, "initial_improved");
  SafraTree t;
  t.add_root(a.initial, 1);
  grow_left_spine(a, t);
  return t;
}

SafraTree improved_step(const Automaton& a, const SafraTree& t, int letter) {
  if (t.is_empty_tree()) return t;
  int mu = spine_depth_bound(a);
  SafraTree w = t;
  stamp_previous(w, mu);

  for (int v : w.alive_preorder()) w.at(v).states = subset_step(a, w.at(v).states, letter);
  for (int v : w.alive_preorder())
    if (w.at(v).states.empty()) w.kill_subtree(v);
  if (!w.at(w.root).alive) return SafraTree{};

  MiniCache cache(a.acceptance.b);
  int fresh_birth = kFreshBirthBase;
  expand(w, a, cache, w.root, fresh_birth);
  horizontal_merge(w);
  vertical_merge(w);
  if (a.acceptance.pair_count() == 0) w.at(w.root).green_event = true;
  grow_fully(w, cache, fresh_birth);
  sort_siblings_structurally(w);

  w.compact();
  rename_spines(w, mu);
  apply_step_colors(w);
  return w;
}

DetResult determinize_improved(const Automaton& a, const DetOptions& opts) {
  require_streett(a, "determinize_improved");
  int n = a.state_count;
  int mu = spine_depth_bound(a);
  return detail::determinize_core(
      a, initial_improved(a),
      [&a](const SafraTree& t, int letter) { return improved_step(a, t, letter); },
      n * (mu + 1), opts, [&a](const SafraTree& t) { return check_rsts(t, a); });
}

std::vector<std::string> check_rsts(const SafraTree& t, const Automaton& a) {
  std::vector<std::string> bad = check_sts(t, a);
  if (t.is_empty_tree()) return bad;

  int n = a.state_count;
  int mu = spine_depth_bound(a);
  MiniCache cache(a.acceptance.b);

  int nodes = t.alive_count();
  if (nodes > n * (mu + 1))
    bad.push_back("node count " + std::to_string(nodes) + " above bound " +
                  std::to_string(n * (mu + 1)));

  int zero_labels = 0;
  for (int v : t.alive_preorder()) {
    const SafraTree::Node& node = t.at(v);
    if (node.index_label == 0) ++zero_labels;
    if (node.name < 1 || node.name > n * (mu + 1))
      bad.push_back("name " + std::to_string(node.name) + " outside [1.." +
                    std::to_string(n * (mu + 1)) + "]");

    if (t.is_leaf(v)) {
      if (!cache.of_path(t.path_labels(v)).empty())
        bad.push_back("leaf named " + std::to_string(node.name) + " is not fully grown");
    }
    if (node.parent >= 0 && node.index_label != 0) {
      if (!cache.of_path(t.path_labels(node.parent)).contains(node.index_label))
        bad.push_back("child label " + std::to_string(node.index_label) +
                      " is not a minimal extension of its parent path");
    }

    int last = -1;
    bool first = true;
    for (int c : node.children) {
      if (!t.at(c).alive) continue;
      if (!first && t.at(c).index_label > last)
        bad.push_back("sibling labels not descending under node " + std::to_string(node.name));
      last = t.at(c).index_label;
      first = false;
    }
  }
  if (zero_labels > n)
    bad.push_back("more than n nodes carry index label 0");

  std::vector<std::vector<int>> spines = left_spines(t);
  if (static_cast<int>(spines.size()) > n) bad.push_back("more than n spines");
  std::set<int> buckets;
  for (const auto& spine : spines) {
    if (static_cast<int>(spine.size()) > mu + 1)
      bad.push_back("spine longer than mu+1");
    int head_name = t.at(spine.front()).name;
    if ((head_name - 1) % (mu + 1) != 0) {
      bad.push_back("spine head name " + std::to_string(head_name) +
                    " is not a bucket initial value");
      continue;
    }
    int bucket = (head_name - 1) / (mu + 1) + 1;
    if (bucket < 1 || bucket > n) bad.push_back("bucket out of range");
    if (!buckets.insert(bucket).second) bad.push_back("two spines share a bucket");
    for (std::size_t j = 0; j < spine.size(); ++j)
      if (t.at(spine[j]).name != (mu + 1) * (bucket - 1) + static_cast<int>(j) + 1) {
        bad.push_back("bucket law violated on the spine of head " + std::to_string(head_name));
        break;
      }
    for (std::size_t j = 1; j < spine.size(); ++j)
      if (t.at(spine[j]).index_label == 0)
        bad.push_back("non-head spine node carries index label 0");
  }
  return bad;
}

}  // namespace odet
