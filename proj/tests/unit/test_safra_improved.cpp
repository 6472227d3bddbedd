#include <doctest.h>

#include <map>
#include <random>

#include "odet/equiv.hpp"
#include "odet/oracle.hpp"
#include "odet/random_gen.hpp"
#include "odet/safra_classic.hpp"
#include "odet/safra_improved.hpp"
#include "test_util.hpp"

using namespace odet;
using namespace odet::test;

namespace {

// builds the 12-node tree used in the renaming walkthrough, names as given:
// v0:1 [v1:2 [v2:3 [v3:4][v4:17]] [v5:25 [v6:26][v7:5]]] [v8:21 [v9:22][v10:33]] [v11:13]
SafraTree walkthrough_tree(std::vector<int>& ids) {
  SafraTree t;
  auto node = [&](int parent, int name) {
    int id = parent < 0 ? t.add_root(StateSet{0}, name) : t.add_child(parent, StateSet{0}, 1, 0);
    t.at(id).name = name;
    return id;
  };
  ids.resize(12);
  ids[0] = node(-1, 1);
  ids[1] = node(ids[0], 2);
  ids[2] = node(ids[1], 3);
  ids[3] = node(ids[2], 4);
  ids[4] = node(ids[2], 17);
  ids[5] = node(ids[1], 25);
  ids[6] = node(ids[5], 26);
  ids[7] = node(ids[5], 5);
  ids[8] = node(ids[0], 21);
  ids[9] = node(ids[8], 22);
  ids[10] = node(ids[8], 33);
  ids[11] = node(ids[0], 13);
  return t;
}

std::vector<std::vector<int>> spine_names(const SafraTree& t) {
  std::vector<std::vector<int>> out;
  for (const auto& spine : left_spines(t)) {
    std::vector<int> names;
    for (int v : spine) names.push_back(t.at(v).name);
    out.push_back(std::move(names));
  }
  return out;
}

Automaton example_streett() {
  Automaton a;
  a.alphabet_size = 2;
  a.state_count = 3;
  a.initial = StateSet{0, 1, 2};
  a.resize_delta();
  for (int q = 0; q < 3; ++q)
    for (int letter = 0; letter < 2; ++letter) a.add_transition(q, letter, (q + letter) % 3);
  a.acceptance.kind = AcceptanceKind::streett;
  a.acceptance.b = example_b_family();
  a.acceptance.g.assign(4, StateSet{0, 1, 2});
  return a;
}

}  // namespace

TEST_CASE("left spine decomposition") {
  SUBCASE("walkthrough tree has seven spines") {
    std::vector<int> ids;
    SafraTree t = walkthrough_tree(ids);
    CHECK(spine_names(t) == std::vector<std::vector<int>>{
                                {1, 2, 3, 4}, {17}, {25, 26}, {5}, {21, 22}, {33}, {13}});
  }
  SUBCASE("single path is a single spine") {
    SafraTree t;
    int root = t.add_root(StateSet{0}, 1);
    int child = t.add_child(root, StateSet{0}, 1, 0);
    t.at(child).name = 2;
    CHECK(spine_names(t) == std::vector<std::vector<int>>{{1, 2}});
  }
  SUBCASE("full binary tree of depth two has four spines") {
    SafraTree t;
    int root = t.add_root(StateSet{0, 1, 2, 3}, 1);
    int a = t.add_child(root, StateSet{0, 1}, 2, 0);
    int b = t.add_child(root, StateSet{2, 3}, 1, 1);
    t.add_child(a, StateSet{0}, 2, 2);
    t.add_child(a, StateSet{1}, 1, 3);
    t.add_child(b, StateSet{2}, 2, 4);
    t.add_child(b, StateSet{3}, 1, 5);
    CHECK(left_spines(t).size() == 4);
  }
}

TEST_CASE("grow_left_spine follows the max-of-mini chain") {
  Automaton a = example_streett();
  SafraTree t;
  t.add_root(a.initial, 1);
  grow_left_spine(a, t);

  std::vector<int> labels;
  std::vector<int> names;
  for (int v : t.alive_preorder()) {
    labels.push_back(t.at(v).index_label);
    names.push_back(t.at(v).name);
  }
  CHECK(labels == std::vector<int>{0, 4, 3, 1});
  CHECK(names == std::vector<int>{1, 2, 3, 4});

  SUBCASE("already exhausted leaves stay leaves") {
    SafraTree grown = t;
    grow_left_spine(a, grown);
    CHECK(tree_key(grown) == tree_key(t));
  }
}

TEST_CASE("initial_improved") {
  SUBCASE("single pair gives a two-node spine") {
    Automaton a = as_streett(inf_many_zero());
    SafraTree t = initial_improved(a);
    CHECK(t.alive_count() == 2);
    CHECK(t.at(t.root).index_label == 0);
    CHECK(tree_key(t) == "1.0.r{0,1}(2.1.r{0,1})");
    CHECK(check_rsts(t, a).empty());
  }
  SUBCASE("example family grows to a full spine of length mu+1") {
    Automaton a = example_streett();
    SafraTree t = initial_improved(a);
    CHECK(t.alive_count() == 4);  // mu+1 = min(3,4)+1
    CHECK(check_rsts(t, a).empty());
  }
}

TEST_CASE("improved_step: label-stable tree only fades to yellow") {
  Automaton a;
  a.alphabet_size = 1;
  a.state_count = 2;
  a.initial = StateSet{1};
  a.resize_delta();
  a.add_transition(0, 0, 0);
  a.add_transition(1, 0, 1);
  a.acceptance.kind = AcceptanceKind::streett;
  a.acceptance.g = {StateSet{}};
  a.acceptance.b = {StateSet{0}};

  SafraTree t0 = initial_improved(a);
  SafraTree t1 = improved_step(a, t0, 0);
  REQUIRE_FALSE(t1.is_empty_tree());
  for (int v : t1.alive_preorder()) CHECK(t1.at(v).color == NodeColor::yellow);
  CHECK(t1.at(t1.root).states == t0.at(t0.root).states);
  SafraTree t2 = improved_step(a, t1, 0);
  CHECK(tree_key(t2) == tree_key(t1));
}

TEST_CASE("renaming: migration into a surviving spine") {
  std::vector<int> ids;
  SafraTree t = walkthrough_tree(ids);
  stamp_previous(t, 3);  // buckets of width 4

  SUBCASE("identity transform keeps every name") {
    RenameResult r = rename_spines(t, 3);
    CHECK(r.renamed_nodes.empty());
    CHECK(r.spine_buckets == std::vector<int>{1, 5, 7, 2, 6, 9, 4});
  }

  SUBCASE("removing a leftmost subtree grafts the next sibling chain") {
    t.kill_subtree(ids[2]);
    RenameResult r = rename_spines(t, 3);
    CHECK(spine_names(t) == std::vector<std::vector<int>>{
                                {1, 2, 3, 4}, {5}, {21, 22}, {33}, {13}});
    CHECK(t.at(ids[5]).name == 3);
    CHECK(t.at(ids[6]).name == 4);
    CHECK(r.renamed_nodes == std::vector<int>{ids[5], ids[6]});
    CHECK(r.spine_buckets == std::vector<int>{1, 2, 6, 9, 4});
    apply_step_colors(t);
    CHECK(t.at(ids[5]).color == NodeColor::red);
    CHECK(t.at(ids[6]).color == NodeColor::red);
    CHECK(t.at(ids[0]).color == NodeColor::yellow);
    CHECK(t.at(ids[7]).color == NodeColor::yellow);  // name 5 kept
  }
}

TEST_CASE("determinize_improved: canonical buchi example, exhaustive words") {
  Automaton input = inf_many_zero();
  Automaton a = as_streett(input);
  DetOptions opts;
  opts.validate_states = true;
  DetResult det = determinize_improved(a, opts);
  CHECK(det.violations.empty());
  CHECK(is_deterministic(det.automaton));
  CHECK(is_total(det.automaton));
  CHECK(det.automaton.acceptance.pair_count() == 4);  // n(mu+1) = 2*2
  for (const LassoWord& w : all_words(2, 5))
    CHECK(member_deterministic(det.automaton, w) == member(input, w));
}

TEST_CASE("determinize_improved: oracle agreement and invariants on random automata") {
  DetOptions opts;
  opts.validate_states = true;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomSpec spec;
    spec.kind = AcceptanceKind::streett;
    spec.n = 1 + static_cast<int>(seed % 5);
    spec.k = 1 + static_cast<int>(seed % 3);
    spec.seed = seed * 977 + 3;
    Automaton a = random_automaton(spec);
    DetResult det = determinize_improved(a, opts);
    CHECK(det.violations.empty());
    CHECK(det.stats.max_tree_nodes <=
          a.state_count * (spine_depth_bound(a) + 1));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
      LassoWord w = random_word(rng, a.alphabet_size, 6);
      CHECK(member_deterministic(det.automaton, w) == member(a, w));
    }
  }
}

TEST_CASE("classic and improved build the same language") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    RandomSpec spec;
    spec.kind = AcceptanceKind::streett;
    spec.n = 1 + static_cast<int>(seed % 4);
    spec.k = 1 + static_cast<int>(seed % 3);
    spec.seed = seed * 409 + 11;
    Automaton a = random_automaton(spec);
    Automaton classic = determinize_classic(a).automaton;
    Automaton improved = determinize_improved(a).automaton;
    CHECK_FALSE(find_difference_exhaustive(classic, improved, 3).has_value());
  }
}

TEST_CASE("grafted nodes move to spines with strictly higher heads") {
  std::mt19937_64 word_rng(21);
  int grafts_seen = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    RandomSpec spec;
    spec.kind = AcceptanceKind::streett;
    spec.n = 2 + static_cast<int>(seed % 4);
    spec.k = 1 + static_cast<int>(seed % 3);
    spec.seed = seed * 53 + 29;
    Automaton a = random_automaton(spec);

    SafraTree t = initial_improved(a);
    for (int step = 0; step < 12; ++step) {
      int letter = static_cast<int>(rng_below(word_rng, static_cast<std::uint64_t>(a.alphabet_size)));
      SafraTree next = improved_step(a, t, letter);
      if (next.is_empty_tree()) break;

      // depth of each previous node's spine head, by name
      std::map<int, int> prev_head_depth;
      auto depth_of = [](const SafraTree& tree, int v) {
        int d = 0;
        for (int cur = tree.at(v).parent; cur >= 0; cur = tree.at(cur).parent) ++d;
        return d;
      };
      for (const auto& spine : left_spines(t)) {
        int head_depth = depth_of(t, spine.front());
        for (int v : spine) prev_head_depth[t.at(v).name] = head_depth;
      }
      for (const auto& spine : left_spines(next)) {
        const SafraTree::Node& head = next.at(spine.front());
        bool inherited = head.prev_name > 0 && head.was_head;
        if (!inherited) continue;
        for (int v : spine) {
          const SafraTree::Node& node = next.at(v);
          if (node.prev_name > 0 && node.name != node.prev_name) {
            CHECK(depth_of(next, spine.front()) < prev_head_depth.at(node.prev_name));
            ++grafts_seen;
          }
        }
      }
      t = std::move(next);
    }
  }
  CHECK(grafts_seen > 0);
}
