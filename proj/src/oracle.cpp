#include "odet/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace odet {

namespace {

void check_word(const Automaton& a, const LassoWord& w) {
  if (w.loop.empty()) throw std::invalid_argument("word loop must be nonempty");
  for (int letter : w.prefix)
    if (letter < 0 || letter >= a.alphabet_size)
      throw std::invalid_argument("word letter out of alphabet range");
  for (int letter : w.loop)
    if (letter < 0 || letter >= a.alphabet_size)
      throw std::invalid_argument("word letter out of alphabet range");
}

}  // namespace

ProductGraph build_product(const Automaton& a, const LassoWord& w) {
  check_word(a, w);
  int len = w.length();
  int prefix_len = static_cast<int>(w.prefix.size());
  auto next_pos = [&](int p) { return p + 1 < len ? p + 1 : prefix_len; };

  ProductGraph g;
  std::vector<int> id(static_cast<std::size_t>(a.state_count) * static_cast<std::size_t>(len), -1);
  auto slot = [&](int q, int p) -> int& {
    return id[static_cast<std::size_t>(q) * static_cast<std::size_t>(len) +
              static_cast<std::size_t>(p)];
  };
  std::vector<std::pair<int, int>> queue;
  auto discover = [&](int q, int p) {
    int& node = slot(q, p);
    if (node < 0) {
      node = g.node_count();
      g.succ.emplace_back();
      g.node_state.push_back(q);
      g.node_pos.push_back(p);
      queue.emplace_back(q, p);
    }
    return node;
  };
  for (int q : a.initial) g.initial_nodes.push_back(discover(q, 0));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [q, p] = queue[head];
    int node = slot(q, p);
    int letter = w.letter_at(p);
    for (int target : a.successors(q, letter)) {
      int target_node = discover(target, next_pos(p));  // may grow g.succ
      g.succ[static_cast<std::size_t>(node)].push_back(target_node);
    }
  }
  return g;
}

SccDecomposition scc_decompose(const std::vector<std::vector<int>>& succ) {
  int n = static_cast<int>(succ.size());
  SccDecomposition out;
  out.component_of.assign(static_cast<std::size_t>(n), -1);

  // iterative Tarjan
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int counter = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> frames;

  for (int start = 0; start < n; ++start) {
    if (index[static_cast<std::size_t>(start)] != -1) continue;
    frames.push_back({start, 0});
    index[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = counter++;
    stack.push_back(start);
    on_stack[static_cast<std::size_t>(start)] = true;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      int v = frame.node;
      if (frame.edge < succ[static_cast<std::size_t>(v)].size()) {
        int target = succ[static_cast<std::size_t>(v)][frame.edge++];
        if (index[static_cast<std::size_t>(target)] == -1) {
          index[static_cast<std::size_t>(target)] = low[static_cast<std::size_t>(target)] =
              counter++;
          stack.push_back(target);
          on_stack[static_cast<std::size_t>(target)] = true;
          frames.push_back({target, 0});
        } else if (on_stack[static_cast<std::size_t>(target)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(target)]);
        }
      } else {
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            out.component_of[static_cast<std::size_t>(w)] =
                static_cast<int>(out.components.size());
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          out.components.push_back(std::move(comp));
        }
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().node;
          low[static_cast<std::size_t>(parent)] = std::min(
              low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
        }
      }
    }
  }

  out.nontrivial.assign(out.components.size(), false);
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    const auto& comp = out.components[c];
    if (comp.size() > 1) {
      out.nontrivial[c] = true;
      continue;
    }
    int v = comp[0];
    for (int target : succ[static_cast<std::size_t>(v)])
      if (target == v) {
        out.nontrivial[c] = true;
        break;
      }
  }
  return out;
}

namespace {

// Streett nonemptiness by recursive component restriction: a component is
// accepting once every pair with an enabled G also has B inside; otherwise
// the G-nodes of violated pairs are removed and the remainder re-examined.
bool streett_component_search(const ProductGraph& g, const std::vector<StateSet>& g_family,
                              const std::vector<StateSet>& b_family,
                              const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::vector<int> local_of(g.succ.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    local_of[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> sub(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int target : g.succ[static_cast<std::size_t>(nodes[i])])
      if (local_of[static_cast<std::size_t>(target)] >= 0)
        sub[i].push_back(local_of[static_cast<std::size_t>(target)]);

  SccDecomposition sccs = scc_decompose(sub);
  std::size_t k = b_family.size();
  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!sccs.nontrivial[c]) continue;
    std::vector<int> comp;
    comp.reserve(sccs.components[c].size());
    for (int local : sccs.components[c]) comp.push_back(nodes[static_cast<std::size_t>(local)]);

    std::vector<std::size_t> violated;
    for (std::size_t i = 0; i < k; ++i) {
      bool g_hit = false, b_hit = false;
      for (int node : comp) {
        int q = g.node_state[static_cast<std::size_t>(node)];
        if (g_family[i].contains(q)) g_hit = true;
        if (b_family[i].contains(q)) b_hit = true;
      }
      if (g_hit && !b_hit) violated.push_back(i);
    }
    if (violated.empty()) return true;

    std::vector<int> rest;
    for (int node : comp) {
      int q = g.node_state[static_cast<std::size_t>(node)];
      bool removed = false;
      for (std::size_t i : violated)
        if (g_family[i].contains(q)) {
          removed = true;
          break;
        }
      if (!removed) rest.push_back(node);
    }
    if (rest.size() < comp.size() && streett_component_search(g, g_family, b_family, rest))
      return true;
  }
  return false;
}

std::vector<int> all_nodes(const ProductGraph& g) {
  std::vector<int> nodes(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) nodes[static_cast<std::size_t>(i)] = i;
  return nodes;
}

}  // namespace

bool nonempty_buchi(const ProductGraph& g, const StateSet& final_set) {
  SccDecomposition sccs = scc_decompose(g.succ);
  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!sccs.nontrivial[c]) continue;
    for (int node : sccs.components[c])
      if (final_set.contains(g.node_state[static_cast<std::size_t>(node)])) return true;
  }
  return false;
}

bool nonempty_gen_buchi(const ProductGraph& g, const std::vector<StateSet>& b_family) {
  SccDecomposition sccs = scc_decompose(g.succ);
  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!sccs.nontrivial[c]) continue;
    bool all = true;
    for (const StateSet& b : b_family) {
      bool hit = false;
      for (int node : sccs.components[c])
        if (b.contains(g.node_state[static_cast<std::size_t>(node)])) {
          hit = true;
          break;
        }
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool nonempty_streett(const ProductGraph& g, const std::vector<StateSet>& g_family,
                      const std::vector<StateSet>& b_family) {
  return streett_component_search(g, g_family, b_family, all_nodes(g));
}

bool nonempty_parity(const ProductGraph& g, const std::vector<StateSet>& g_family,
                     const std::vector<StateSet>& b_family) {
  return nonempty_streett(g, g_family, b_family);
}

bool nonempty_rabin(const ProductGraph& g, const std::vector<StateSet>& g_family,
                    const std::vector<StateSet>& b_family) {
  for (std::size_t i = 0; i < b_family.size(); ++i) {
    std::vector<int> nodes;
    for (int node = 0; node < g.node_count(); ++node)
      if (!b_family[i].contains(g.node_state[static_cast<std::size_t>(node)]))
        nodes.push_back(node);

    std::vector<int> local_of(g.succ.size(), -1);
    for (std::size_t j = 0; j < nodes.size(); ++j)
      local_of[static_cast<std::size_t>(nodes[j])] = static_cast<int>(j);
    std::vector<std::vector<int>> sub(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j)
      for (int target : g.succ[static_cast<std::size_t>(nodes[j])])
        if (local_of[static_cast<std::size_t>(target)] >= 0)
          sub[j].push_back(local_of[static_cast<std::size_t>(target)]);

    SccDecomposition sccs = scc_decompose(sub);
    for (std::size_t c = 0; c < sccs.components.size(); ++c) {
      if (!sccs.nontrivial[c]) continue;
      for (int local : sccs.components[c])
        if (g_family[i].contains(
                g.node_state[static_cast<std::size_t>(nodes[static_cast<std::size_t>(local)])]))
          return true;
    }
  }
  return false;
}

bool member(const Automaton& a, const LassoWord& w) {
  ProductGraph g = build_product(a, w);
  const Acceptance& acc = a.acceptance;
  switch (acc.kind) {
    case AcceptanceKind::buchi:
      return nonempty_buchi(g, acc.b[0]);
    case AcceptanceKind::gen_buchi:
      return nonempty_gen_buchi(g, acc.b);
    case AcceptanceKind::streett:
      return nonempty_streett(g, acc.g, acc.b);
    case AcceptanceKind::parity:
      return nonempty_parity(g, acc.g, acc.b);
    case AcceptanceKind::rabin:
      return nonempty_rabin(g, acc.g, acc.b);
  }
  return false;
}

bool member_deterministic(const Automaton& a, const LassoWord& w) {
  check_word(a, w);
  if (a.initial.size() != 1 || !transitions_deterministic(a))
    throw std::invalid_argument("member_deterministic: automaton must be deterministic");

  int len = w.length();
  int prefix_len = static_cast<int>(w.prefix.size());
  // run history indexed by (state, position); -1 = not seen yet
  std::vector<int> seen_at(static_cast<std::size_t>(a.state_count) * static_cast<std::size_t>(len),
                           -1);
  std::vector<int> trace;

  int q = a.initial.min();
  int p = 0;
  while (true) {
    int key = q * len + p;
    if (seen_at[static_cast<std::size_t>(key)] >= 0) break;
    seen_at[static_cast<std::size_t>(key)] = static_cast<int>(trace.size());
    trace.push_back(q);
    const StateSet& succ = a.successors(q, w.letter_at(p));
    if (succ.empty()) return false;  // run dies, no acceptance
    q = succ.min();
    p = p + 1 < len ? p + 1 : prefix_len;
  }

  int cycle_start = seen_at[static_cast<std::size_t>(q * len + p)];
  StateSet inf;
  for (std::size_t i = static_cast<std::size_t>(cycle_start); i < trace.size(); ++i)
    inf.insert(trace[i]);

  const Acceptance& acc = a.acceptance;
  switch (acc.kind) {
    case AcceptanceKind::buchi:
      return inf.intersects(acc.b[0]);
    case AcceptanceKind::gen_buchi: {
      for (const StateSet& b : acc.b)
        if (!inf.intersects(b)) return false;
      return true;
    }
    case AcceptanceKind::streett:
    case AcceptanceKind::parity: {
      for (int i = 1; i <= acc.pair_count(); ++i)
        if (inf.intersects(acc.g_set(i)) && !inf.intersects(acc.b_set(i))) return false;
      return true;
    }
    case AcceptanceKind::rabin: {
      for (int i = 1; i <= acc.pair_count(); ++i)
        if (inf.intersects(acc.g_set(i)) && !inf.intersects(acc.b_set(i))) return true;
      return false;
    }
  }
  return false;
}

bool accepts(const Automaton& a, const LassoWord& w) {
  if (is_deterministic(a) && is_total(a)) return member_deterministic(a, w);
  return member(a, w);
}

}  // namespace odet
