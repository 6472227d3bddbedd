#include "odet/rabin_det.hpp"

#include <map>
#include <stdexcept>

#include "odet/safra_improved.hpp"

namespace odet {

Automaton rabin_pair_to_buchi(const Automaton& a, int pair_index) {
  if (a.acceptance.kind != AcceptanceKind::rabin)
    throw std::invalid_argument("rabin_pair_to_buchi: input must be a Rabin automaton");
  if (pair_index < 1 || pair_index > a.acceptance.pair_count())
    throw std::invalid_argument("rabin_pair_to_buchi: pair index out of range");
  const StateSet& g = a.acceptance.g_set(pair_index);
  const StateSet& b = a.acceptance.b_set(pair_index);

  int n = a.state_count;
  Automaton r;
  r.alphabet_size = a.alphabet_size;
  r.state_count = 2 * n;
  r.initial = a.initial;
  r.resize_delta();
  for (int q = 0; q < n; ++q)
    for (int letter = 0; letter < a.alphabet_size; ++letter)
      for (int target : a.successors(q, letter)) {
        r.add_transition(q, letter, target);
        if (!b.contains(target)) {
          r.add_transition(q, letter, target + n);  // guess the B-free suffix
          if (!b.contains(q)) r.add_transition(q + n, letter, target + n);
        }
      }

  r.acceptance.kind = AcceptanceKind::buchi;
  StateSet final_set;
  for (int q : g)
    if (!b.contains(q)) final_set.insert(q + n);
  r.acceptance.b = {final_set};
  return r;
}

DetResult determinize_rabin(const Automaton& a, const DetOptions& opts) {
  if (a.acceptance.kind != AcceptanceKind::rabin)
    throw std::invalid_argument("determinize_rabin: input must be a Rabin automaton");
  if (!validate(a).empty())
    throw std::invalid_argument("determinize_rabin: input fails validation");

  int k = a.acceptance.pair_count();
  DetResult result;
  Automaton& out = result.automaton;
  out.alphabet_size = a.alphabet_size;
  out.acceptance.kind = AcceptanceKind::rabin;

  if (k == 0) {
    // no pair can ever be satisfied: one absorbing state, empty language
    out.state_count = 1;
    out.initial = StateSet{0};
    out.resize_delta();
    for (int letter = 0; letter < a.alphabet_size; ++letter) out.add_transition(0, letter, 0);
    result.state_keys.push_back("(0)");
    result.stats.states = 1;
    return result;
  }

  std::vector<DetResult> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    parts.push_back(determinize_improved(as_streett(rabin_pair_to_buchi(a, i)), opts));
    result.stats.max_tree_nodes =
        std::max(result.stats.max_tree_nodes, parts.back().stats.max_tree_nodes);
    result.stats.max_spine_len =
        std::max(result.stats.max_spine_len, parts.back().stats.max_spine_len);
    for (const std::string& bad : parts.back().violations)
      result.violations.push_back("pair " + std::to_string(i) + " component: " + bad);
  }

  // synchronous product of the deterministic components, reachable part only
  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> tuples;
  auto discover = [&](std::vector<int> tuple) {
    auto it = id_of.find(tuple);
    if (it != id_of.end()) return it->second;
    if (tuples.size() >= opts.cap) throw CapExceededError(opts.cap);
    int id = static_cast<int>(tuples.size());
    id_of.emplace(tuple, id);
    tuples.push_back(std::move(tuple));
    return id;
  };

  discover(std::vector<int>(static_cast<std::size_t>(k), 0));
  std::vector<std::vector<int>> transitions;
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    transitions.emplace_back(static_cast<std::size_t>(a.alphabet_size), -1);
    for (int letter = 0; letter < a.alphabet_size; ++letter) {
      std::vector<int> next(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        const Automaton& part = parts[static_cast<std::size_t>(i)].automaton;
        next[static_cast<std::size_t>(i)] =
            part.successors(tuples[s][static_cast<std::size_t>(i)], letter).min();
      }
      transitions[s][static_cast<std::size_t>(letter)] = discover(std::move(next));
    }
  }

  out.state_count = static_cast<int>(tuples.size());
  out.initial = StateSet{0};
  out.resize_delta();
  for (std::size_t s = 0; s < tuples.size(); ++s)
    for (int letter = 0; letter < a.alphabet_size; ++letter)
      out.add_transition(static_cast<int>(s), letter,
                         transitions[s][static_cast<std::size_t>(letter)]);

  // pairs: every component pair, lifted through the component projection
  for (int i = 0; i < k; ++i) {
    const Acceptance& acc = parts[static_cast<std::size_t>(i)].automaton.acceptance;
    for (int j = 1; j <= acc.pair_count(); ++j) {
      StateSet lifted_g, lifted_b;
      for (std::size_t s = 0; s < tuples.size(); ++s) {
        int component_state = tuples[s][static_cast<std::size_t>(i)];
        if (acc.g_set(j).contains(component_state)) lifted_g.insert(static_cast<int>(s));
        if (acc.b_set(j).contains(component_state)) lifted_b.insert(static_cast<int>(s));
      }
      out.acceptance.g.push_back(std::move(lifted_g));
      out.acceptance.b.push_back(std::move(lifted_b));
    }
  }

  for (std::size_t s = 0; s < tuples.size(); ++s) {
    std::string key = "(";
    for (std::size_t i = 0; i < tuples[s].size(); ++i) {
      if (i) key += ',';
      key += std::to_string(tuples[s][i]);
    }
    key += ')';
    result.state_keys.push_back(std::move(key));
  }
  result.stats.states = tuples.size();
  result.stats.index_size = out.acceptance.pair_count();
  return result;
}

}  // namespace odet
