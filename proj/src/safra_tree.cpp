#include "odet/safra_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace odet {

int SafraTree::add_root(StateSet states, int name) {
  Node node;
  node.name = name;
  node.states = std::move(states);
  nodes.push_back(std::move(node));
  root = static_cast<int>(nodes.size()) - 1;
  return root;
}

int SafraTree::add_child(int parent, StateSet states, int index_label, int birth) {
  Node node;
  node.states = std::move(states);
  node.index_label = index_label;
  node.parent = parent;
  node.birth = birth;
  nodes.push_back(std::move(node));
  int id = static_cast<int>(nodes.size()) - 1;
  at(parent).children.push_back(id);
  return id;
}

void SafraTree::kill_subtree(int v) {
  Node& node = at(v);
  if (!node.alive) return;
  node.alive = false;
  for (int c : node.children) kill_subtree(c);
}

void SafraTree::remove_states_in_subtree(int v, const StateSet& x) {
  Node& node = at(v);
  if (!node.alive) return;
  node.states.subtract(x);
  if (node.states.empty()) {
    kill_subtree(v);
    return;
  }
  for (int c : node.children) remove_states_in_subtree(c, x);
}

std::vector<int> SafraTree::path_labels(int v) const {
  std::vector<int> labels;
  for (int cur = v; cur >= 0; cur = at(cur).parent)
    if (at(cur).index_label != 0) labels.push_back(at(cur).index_label);
  std::reverse(labels.begin(), labels.end());
  return labels;
}

StateSet SafraTree::path_label_set(int v) const {
  StateSet s;
  for (int cur = v; cur >= 0; cur = at(cur).parent)
    if (at(cur).index_label != 0) s.insert(at(cur).index_label);
  return s;
}

std::vector<int> SafraTree::alive_preorder() const {
  std::vector<int> order;
  if (is_empty_tree() || !at(root).alive) return order;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!at(v).alive) continue;
    order.push_back(v);
    const auto& children = at(v).children;
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      if (at(*it).alive) stack.push_back(*it);
  }
  return order;
}

int SafraTree::alive_count() const { return static_cast<int>(alive_preorder().size()); }

bool SafraTree::is_leaf(int v) const {
  for (int c : at(v).children)
    if (at(c).alive) return false;
  return true;
}

void SafraTree::compact() {
  if (is_empty_tree() || !at(root).alive) {
    nodes.clear();
    root = -1;
    return;
  }
  std::vector<int> order = alive_preorder();
  std::vector<int> remap(nodes.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    remap[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Node> packed;
  packed.reserve(order.size());
  for (int v : order) {
    Node node = at(v);
    node.parent = node.parent < 0 ? -1 : remap[static_cast<std::size_t>(node.parent)];
    std::vector<int> kids;
    for (int c : node.children)
      if (remap[static_cast<std::size_t>(c)] >= 0)
        kids.push_back(remap[static_cast<std::size_t>(c)]);
    node.children = std::move(kids);
    packed.push_back(std::move(node));
  }
  nodes = std::move(packed);
  root = 0;
}

namespace {

void key_walk(const SafraTree& t, int v, std::ostringstream& out) {
  const SafraTree::Node& node = t.at(v);
  if (!node.alive) return;
  out << node.name << '.' << node.index_label << '.' << color_char(node.color)
      << node.states.to_string();
  bool any = false;
  for (int c : node.children)
    if (t.at(c).alive) {
      any = true;
      break;
    }
  if (any) {
    out << '(';
    bool first = true;
    for (int c : node.children) {
      if (!t.at(c).alive) continue;
      if (!first) out << ' ';
      key_walk(t, c, out);
      first = false;
    }
    out << ')';
  }
}

}  // namespace

std::string tree_key(const SafraTree& t) {
  if (t.is_empty_tree() || !t.at(t.root).alive) return "-";
  std::ostringstream out;
  key_walk(t, t.root, out);
  return out.str();
}

std::vector<std::vector<int>> left_spines(const SafraTree& t) {
  std::vector<std::vector<int>> spines;
  if (t.is_empty_tree() || !t.at(t.root).alive) return spines;

  // walk each maximal leftmost chain from its head down to its leaf;
  // recursion in leaf order falls out of a preorder stack
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int head = stack.back();
    stack.pop_back();
    std::vector<int> spine;
    int cur = head;
    while (true) {
      spine.push_back(cur);
      int leftmost = -1;
      std::vector<int> rest;
      for (int c : t.at(cur).children) {
        if (!t.at(c).alive) continue;
        if (leftmost < 0)
          leftmost = c;
        else
          rest.push_back(c);
      }
      // non-leftmost children head their own spines
      for (auto it = rest.rbegin(); it != rest.rend(); ++it) stack.push_back(*it);
      if (leftmost < 0) break;
      cur = leftmost;
    }
    spines.push_back(std::move(spine));
  }

  // order spines by their leaf position left to right
  std::vector<int> leaf_rank(t.nodes.size(), 0);
  int rank = 0;
  for (int v : t.alive_preorder())
    if (t.is_leaf(v)) leaf_rank[static_cast<std::size_t>(v)] = rank++;
  std::sort(spines.begin(), spines.end(), [&](const auto& x, const auto& y) {
    return leaf_rank[static_cast<std::size_t>(x.back())] <
           leaf_rank[static_cast<std::size_t>(y.back())];
  });
  return spines;
}

void stamp_previous(SafraTree& t, int mu) {
  int seq = 0;
  for (int v : t.alive_preorder()) {
    SafraTree::Node& node = t.at(v);
    node.prev_name = node.name;
    node.birth = seq++;
    node.green_event = false;
    node.was_head = false;
    node.prev_bucket = 0;
  }
  if (mu >= 0) {
    for (const auto& spine : left_spines(t)) {
      SafraTree::Node& head = t.at(spine.front());
      head.was_head = true;
      head.prev_bucket = (head.name - 1) / (mu + 1) + 1;
    }
  }
}

void horizontal_merge(SafraTree& t) {
  if (t.is_empty_tree()) return;
  for (int v : t.alive_preorder()) {
    if (!t.at(v).alive) continue;
    std::map<int, std::vector<int>> holders;  // state -> children containing it
    for (int c : t.at(v).children) {
      if (!t.at(c).alive) continue;
      for (int q : t.at(c).states) holders[q].push_back(c);
    }
    for (auto& [q, kids] : holders) {
      if (kids.size() < 2) continue;
      int winner = kids.front();
      for (int c : kids) {
        const auto& cn = t.at(c);
        const auto& wn = t.at(winner);
        if (cn.index_label < wn.index_label ||
            (cn.index_label == wn.index_label && cn.birth < wn.birth))
          winner = c;
      }
      StateSet gone{q};
      for (int c : kids)
        if (c != winner && t.at(c).alive) t.remove_states_in_subtree(c, gone);
    }
  }
}

void vertical_merge(SafraTree& t) {
  if (t.is_empty_tree()) return;
  for (int v : t.alive_preorder()) {
    SafraTree::Node& node = t.at(v);
    if (!node.alive) continue;
    bool any = false, all_zero = true;
    for (int c : node.children) {
      if (!t.at(c).alive) continue;
      any = true;
      if (t.at(c).index_label != 0) {
        all_zero = false;
        break;
      }
    }
    if (any && all_zero) {
      for (int c : node.children) t.kill_subtree(c);
      node.green_event = true;
    }
  }
}

void sort_siblings_structurally(SafraTree& t) {
  if (t.is_empty_tree()) return;
  for (int v : t.alive_preorder()) {
    SafraTree::Node& node = t.at(v);
    std::vector<int> kids;
    for (int c : node.children)
      if (t.at(c).alive) kids.push_back(c);
    std::sort(kids.begin(), kids.end(), [&](int x, int y) {
      const auto& nx = t.at(x);
      const auto& ny = t.at(y);
      if (nx.index_label != ny.index_label) return nx.index_label > ny.index_label;
      return nx.birth < ny.birth;
    });
    node.children = std::move(kids);
  }
}

void assign_names_retail(SafraTree& t) {
  if (t.is_empty_tree()) return;
  std::set<int> used;
  std::vector<int> fresh;
  for (int v : t.alive_preorder()) {
    if (t.at(v).prev_name > 0) {
      t.at(v).name = t.at(v).prev_name;
      used.insert(t.at(v).name);
    } else {
      fresh.push_back(v);
    }
  }
  std::sort(fresh.begin(), fresh.end(),
            [&](int x, int y) { return t.at(x).birth < t.at(y).birth; });
  int candidate = 1;
  for (int v : fresh) {
    while (used.count(candidate)) ++candidate;
    t.at(v).name = candidate;
    used.insert(candidate);
  }
}

RenameResult rename_spines(SafraTree& t, int mu) {
  RenameResult result;
  if (t.is_empty_tree()) return result;
  std::vector<std::vector<int>> spines = left_spines(t);
  result.spine_buckets.assign(spines.size(), 0);

  std::set<int> claimed;
  for (std::size_t s = 0; s < spines.size(); ++s) {
    const SafraTree::Node& head = t.at(spines[s].front());
    if (head.prev_name > 0 && head.was_head) {
      result.spine_buckets[s] = head.prev_bucket;
      claimed.insert(head.prev_bucket);
    }
  }
  for (std::size_t s = 0; s < spines.size(); ++s) {
    if (result.spine_buckets[s] != 0) continue;
    int bucket = 1;
    while (claimed.count(bucket)) ++bucket;
    result.spine_buckets[s] = bucket;
    claimed.insert(bucket);
  }
  for (std::size_t s = 0; s < spines.size(); ++s) {
    int base = (mu + 1) * (result.spine_buckets[s] - 1);
    for (std::size_t j = 0; j < spines[s].size(); ++j) {
      SafraTree::Node& node = t.at(spines[s][j]);
      node.name = base + static_cast<int>(j) + 1;
      if (node.prev_name > 0 && node.name != node.prev_name)
        result.renamed_nodes.push_back(spines[s][j]);
    }
  }
  return result;
}

void apply_step_colors(SafraTree& t) {
  if (t.is_empty_tree()) return;
  for (int v : t.alive_preorder()) {
    SafraTree::Node& node = t.at(v);
    if (node.prev_name == 0 || node.name != node.prev_name)
      node.color = NodeColor::red;
    else if (node.green_event)
      node.color = NodeColor::green;
    else
      node.color = NodeColor::yellow;
  }
}

namespace detail {

DetResult determinize_core(const Automaton& a, const SafraTree& initial, const StepFn& step,
                           int min_index_size, const DetOptions& opts, const CheckFn& check) {
  DetResult result;
  std::vector<SafraTree> trees;
  std::unordered_map<std::string, int> id_of;
  std::vector<std::vector<int>> transitions;

  auto discover = [&](SafraTree tree) {
    std::string key = tree_key(tree);
    auto it = id_of.find(key);
    if (it != id_of.end()) return it->second;
    if (trees.size() >= opts.cap) throw CapExceededError(opts.cap);
    int id = static_cast<int>(trees.size());
    id_of.emplace(std::move(key), id);
    trees.push_back(std::move(tree));
    return id;
  };

  discover(initial);
  for (std::size_t s = 0; s < trees.size(); ++s) {
    transitions.emplace_back(static_cast<std::size_t>(a.alphabet_size), -1);
    for (int letter = 0; letter < a.alphabet_size; ++letter) {
      SafraTree next = step(trees[s], letter);
      transitions[s][static_cast<std::size_t>(letter)] = discover(std::move(next));
    }
  }

  int max_name = 0;
  for (std::size_t s = 0; s < trees.size(); ++s) {
    const SafraTree& t = trees[s];
    result.state_keys.push_back(tree_key(t));
    int node_count = t.alive_count();
    result.stats.max_tree_nodes = std::max(result.stats.max_tree_nodes, node_count);
    for (const auto& spine : left_spines(t))
      result.stats.max_spine_len =
          std::max(result.stats.max_spine_len, static_cast<int>(spine.size()));
    for (int v : t.alive_preorder()) max_name = std::max(max_name, t.at(v).name);
    if (opts.validate_states) {
      for (const std::string& bad : check(t))
        result.violations.push_back("state " + std::to_string(s) + ": " + bad);
    }
  }

  int index_size = std::max(min_index_size, max_name);
  result.stats.states = trees.size();
  result.stats.index_size = index_size;

  Automaton& out = result.automaton;
  out.alphabet_size = a.alphabet_size;
  out.state_count = static_cast<int>(trees.size());
  out.initial = StateSet{0};
  out.resize_delta();
  for (std::size_t s = 0; s < trees.size(); ++s)
    for (int letter = 0; letter < a.alphabet_size; ++letter)
      out.add_transition(static_cast<int>(s), letter,
                         transitions[s][static_cast<std::size_t>(letter)]);

  out.acceptance.kind = AcceptanceKind::rabin;
  out.acceptance.g.assign(static_cast<std::size_t>(index_size), StateSet{});
  out.acceptance.b.assign(static_cast<std::size_t>(index_size), StateSet{});
  for (std::size_t s = 0; s < trees.size(); ++s) {
    const SafraTree& t = trees[s];
    StateSet present, green, red;
    for (int v : t.alive_preorder()) {
      const SafraTree::Node& node = t.at(v);
      present.insert(node.name);
      if (node.color == NodeColor::green) green.insert(node.name);
      if (node.color == NodeColor::red) red.insert(node.name);
    }
    for (int i = 1; i <= index_size; ++i) {
      // runs accepted on pair i: infinitely often green-i, finitely often
      // red-or-absent-i
      if (green.contains(i))
        out.acceptance.g[static_cast<std::size_t>(i - 1)].insert(static_cast<int>(s));
      if (red.contains(i) || !present.contains(i))
        out.acceptance.b[static_cast<std::size_t>(i - 1)].insert(static_cast<int>(s));
    }
  }
  return result;
}

}  // namespace detail

}  // namespace odet
