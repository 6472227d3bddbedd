#include <doctest.h>

#include <random>

#include "odet/equiv.hpp"
#include "odet/oracle.hpp"
#include "odet/random_gen.hpp"
#include "odet/safra_classic.hpp"
#include "test_util.hpp"

using namespace odet;
using namespace odet::test;

namespace {

Automaton one_state_streett(StateSet g, StateSet b) {
  Automaton a;
  a.alphabet_size = 1;
  a.state_count = 1;
  a.initial = StateSet{0};
  a.resize_delta();
  a.add_transition(0, 0, 0);
  a.acceptance.kind = AcceptanceKind::streett;
  a.acceptance.g = {std::move(g)};
  a.acceptance.b = {std::move(b)};
  return a;
}

}  // namespace

TEST_CASE("initial_classic") {
  Automaton a = as_streett(inf_many_zero());
  SafraTree t = initial_classic(a);
  REQUIRE_FALSE(t.is_empty_tree());
  const SafraTree::Node& root = t.at(t.root);
  CHECK(root.name == 1);
  CHECK(root.states == StateSet{0, 1});
  CHECK(root.color == NodeColor::red);
  CHECK(root.index_label == 0);
  CHECK(t.alive_count() == 1);
  CHECK(tree_key(t) == tree_key(initial_classic(a)));
  CHECK(tree_key(t) == "1.0.r{0,1}");
}

TEST_CASE("classic_step: dead letter reaches the absorbing empty tree") {
  Automaton a = as_streett(inf_many_zero());
  a.delta[0][0].clear();
  a.delta[1][0].clear();
  SafraTree t = initial_classic(a);
  SafraTree dead = classic_step(a, t, 0);
  CHECK(dead.is_empty_tree());
  CHECK(tree_key(dead) == "-");
  CHECK(tree_key(classic_step(a, dead, 1)) == "-");
}

TEST_CASE("classic_step: fulfillment cycles turn the root green") {
  Automaton a = one_state_streett(StateSet{0}, StateSet{0});
  SafraTree t = initial_classic(a);
  int greens = 0;
  std::string first_key;
  for (int step = 0; step < 6; ++step) {
    t = classic_step(a, t, 0);
    REQUIRE_FALSE(t.is_empty_tree());
    if (t.at(t.root).color == NodeColor::green) ++greens;
    if (step == 2) first_key = tree_key(t);
    if (step == 4) CHECK(tree_key(t) == first_key);  // period-2 cycle
  }
  CHECK(greens >= 2);
}

TEST_CASE("classic_step is a pure function of tree and letter") {
  Automaton a = as_streett(inf_many_zero());
  SafraTree t = initial_classic(a);
  for (int i = 0; i < 4; ++i) {
    SafraTree s1 = classic_step(a, t, i % 2);
    SafraTree s2 = classic_step(a, t, i % 2);
    CHECK(tree_key(s1) == tree_key(s2));
    t = std::move(s1);
    CHECK(check_sts(t, a).empty());
  }
}

TEST_CASE("determinize_classic: canonical buchi example, exhaustive words") {
  Automaton input = inf_many_zero();
  Automaton a = as_streett(input);
  DetOptions opts;
  opts.validate_states = true;
  DetResult det = determinize_classic(a, opts);
  CHECK(det.violations.empty());
  CHECK(is_deterministic(det.automaton));
  CHECK(is_total(det.automaton));
  CHECK(det.state_keys.size() == det.stats.states);
  CHECK(validate(det.automaton).empty());
  for (const LassoWord& w : all_words(2, 5))
    CHECK(member_deterministic(det.automaton, w) == member(input, w));
}

TEST_CASE("determinize_classic: trivial languages") {
  SUBCASE("accepts everything when the obligation is always met") {
    Automaton a = one_state_streett(StateSet{}, StateSet{0});
    DetResult det = determinize_classic(a);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i)
      CHECK(member_deterministic(det.automaton, random_word(rng, 1, 4)));
  }
  SUBCASE("empty pair set accepts every live word") {
    Automaton a = one_state_streett(StateSet{}, StateSet{});
    a.acceptance.g.clear();
    a.acceptance.b.clear();
    DetResult det = determinize_classic(a);
    CHECK(member_deterministic(det.automaton, word({}, {0})));
  }
  SUBCASE("unmeetable obligation rejects") {
    Automaton a = one_state_streett(StateSet{0}, StateSet{});
    DetResult det = determinize_classic(a);
    CHECK_FALSE(member_deterministic(det.automaton, word({}, {0})));
  }
}

TEST_CASE("determinize_classic: oracle agreement on random streett automata") {
  DetOptions opts;
  opts.validate_states = true;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    RandomSpec spec;
    spec.kind = AcceptanceKind::streett;
    spec.n = 1 + static_cast<int>(seed % 4);
    spec.k = 1 + static_cast<int>(seed % 2);
    spec.seed = seed * 131 + 7;
    Automaton a = random_automaton(spec);
    DetResult det = determinize_classic(a, opts);
    CHECK(det.violations.empty());
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
      LassoWord w = random_word(rng, a.alphabet_size, 5);
      CHECK(member_deterministic(det.automaton, w) == member(a, w));
    }
  }
}

TEST_CASE("determinize_classic honours the exploration cap") {
  Automaton a = as_streett(inf_many_zero());
  DetOptions opts;
  opts.cap = 1;
  CHECK_THROWS_AS(determinize_classic(a, opts), CapExceededError);
}
