#include <doctest.h>

#include <algorithm>
#include <random>

#include "odet/automaton.hpp"
#include "odet/oracle.hpp"
#include "odet/random_gen.hpp"
#include "test_util.hpp"

using namespace odet;
using namespace odet::test;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(), [&](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

Automaton one_state_buchi() {
  Automaton a;
  a.alphabet_size = 2;
  a.state_count = 1;
  a.initial = StateSet{0};
  a.resize_delta();
  a.add_transition(0, 0, 0);
  a.add_transition(0, 1, 0);
  a.acceptance.kind = AcceptanceKind::buchi;
  a.acceptance.b = {StateSet{0}};
  return a;
}

}  // namespace

TEST_CASE("validate: minimal well-formed buchi") {
  CHECK(validate(one_state_buchi()).empty());
}

TEST_CASE("validate: streett B must be injective") {
  Automaton a = one_state_buchi();
  a.state_count = 3;
  a.resize_delta();
  a.acceptance.kind = AcceptanceKind::streett;
  a.acceptance.g = {StateSet{0}, StateSet{2}};
  a.acceptance.b = {StateSet{1}, StateSet{1}};
  CHECK(mentions(validate(a), "B not injective"));
}

TEST_CASE("validate: parity chain must be strict") {
  Automaton a = one_state_buchi();
  a.state_count = 3;
  a.resize_delta();
  a.acceptance.kind = AcceptanceKind::parity;
  a.acceptance.b = {StateSet{}, StateSet{1}};  // G(1)={0} is not inside B(2)={1}
  a.acceptance.g = {StateSet{0}, StateSet{0, 1, 2}};
  CHECK(mentions(validate(a), "parity chain broken"));
}

TEST_CASE("simplify_streett merges pairs sharing a B set") {
  Automaton a;
  a.alphabet_size = 1;
  a.state_count = 3;
  a.initial = StateSet{0};
  a.resize_delta();
  a.add_transition(0, 0, 1);
  a.add_transition(1, 0, 2);
  a.add_transition(2, 0, 0);
  a.acceptance.kind = AcceptanceKind::streett;
  a.acceptance.g = {StateSet{0}, StateSet{2}};
  a.acceptance.b = {StateSet{1}, StateSet{1}};

  Automaton s = simplify_streett(a);
  CHECK(s.acceptance.pair_count() == 1);
  CHECK(s.acceptance.g_set(1) == StateSet{0, 2});
  CHECK(s.acceptance.b_set(1) == StateSet{1});
  CHECK(validate(s).empty());

  SUBCASE("already injective input is untouched") {
    CHECK(simplify_streett(s) == s);
  }

  SUBCASE("three pairs sharing one B collapse to one, language unchanged") {
    Automaton three = a;
    three.acceptance.g = {StateSet{0}, StateSet{2}, StateSet{0, 2}};
    three.acceptance.b = {StateSet{1}, StateSet{1}, StateSet{1}};
    Automaton merged = simplify_streett(three);
    CHECK(merged.acceptance.pair_count() == 1);
    CHECK(merged.acceptance.g_set(1) == StateSet{0, 2});
    for (const LassoWord& w : all_words(1, 3))
      CHECK(member(three, w) == member(merged, w));
  }
}

TEST_CASE("as_streett embeddings") {
  SUBCASE("buchi") {
    Automaton a = inf_many_zero();
    Automaton s = as_streett(a);
    CHECK(s.acceptance.kind == AcceptanceKind::streett);
    CHECK(s.acceptance.pair_count() == 1);
    CHECK(s.acceptance.g_set(1) == StateSet{0, 1});
    CHECK(s.acceptance.b_set(1) == StateSet{0});
  }
  SUBCASE("generalized buchi") {
    Automaton a = inf_many_zero();
    a.acceptance.kind = AcceptanceKind::gen_buchi;
    a.acceptance.b = {StateSet{0}, StateSet{1}};
    Automaton s = as_streett(a);
    CHECK(s.acceptance.pair_count() == 2);
    CHECK(s.acceptance.g_set(1) == StateSet{0, 1});
    CHECK(s.acceptance.g_set(2) == StateSet{0, 1});
    CHECK(s.acceptance.b_set(1) == StateSet{0});
    CHECK(s.acceptance.b_set(2) == StateSet{1});
  }
  SUBCASE("parity pairs carry over verbatim, same language") {
    RandomSpec spec;
    spec.kind = AcceptanceKind::parity;
    spec.n = 3;
    spec.k = 2;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      spec.seed = seed;
      Automaton a = random_automaton(spec);
      REQUIRE(validate(a).empty());
      Automaton s = as_streett(a);
      CHECK(validate(s).empty());
      std::mt19937_64 rng(seed + 77);
      for (int i = 0; i < 50; ++i) {
        LassoWord w = random_word(rng, a.alphabet_size, 4);
        CHECK(member(a, w) == member(s, w));
      }
    }
  }
  SUBCASE("rabin rejected") {
    Automaton a = inf_many_zero();
    a.acceptance.kind = AcceptanceKind::rabin;
    a.acceptance.g = {StateSet{0, 1}};
    CHECK_THROWS_AS(as_streett(a), std::invalid_argument);
  }
}

TEST_CASE("subset_step") {
  Automaton a;
  a.alphabet_size = 1;
  a.state_count = 3;
  a.initial = StateSet{0};
  a.resize_delta();
  a.add_transition(0, 0, 1);
  a.add_transition(1, 0, 2);
  a.acceptance.kind = AcceptanceKind::buchi;
  a.acceptance.b = {StateSet{0}};

  CHECK(subset_step(a, StateSet{}, 0).empty());
  CHECK(subset_step(a, StateSet{0, 1}, 0) == StateSet{1, 2});
  Automaton total = inf_many_zero();
  CHECK(subset_step(total, StateSet{0, 1}, 0) == StateSet{0});

  SUBCASE("monotone and distributes over union") {
    RandomSpec spec;
    spec.n = 4;
    spec.alphabet_size = 2;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      spec.seed = seed;
      Automaton r = random_automaton(spec);
      std::mt19937_64 rng(seed);
      StateSet x, y;
      for (int q = 0; q < r.state_count; ++q) {
        if (rng() & 1) x.insert(q);
        if (rng() & 1) y.insert(q);
      }
      StateSet both = set_union(x, y);
      for (int letter = 0; letter < r.alphabet_size; ++letter) {
        CHECK(subset_step(r, x, letter).subset_of(subset_step(r, both, letter)));
        CHECK(subset_step(r, both, letter) ==
              set_union(subset_step(r, x, letter), subset_step(r, y, letter)));
      }
    }
  }
}

TEST_CASE("dualize_deterministic") {
  // deterministic one-state Rabin accepting everything
  Automaton a;
  a.alphabet_size = 2;
  a.state_count = 1;
  a.initial = StateSet{0};
  a.resize_delta();
  a.add_transition(0, 0, 0);
  a.add_transition(0, 1, 0);
  a.acceptance.kind = AcceptanceKind::rabin;
  a.acceptance.g = {StateSet{0}};
  a.acceptance.b = {StateSet{}};

  Automaton dual = dualize_deterministic(a);
  CHECK(dual.acceptance.kind == AcceptanceKind::streett);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    LassoWord w = random_word(rng, 2, 4);
    CHECK(member(a, w));
    CHECK_FALSE(member(dual, w));
  }
  CHECK(dualize_deterministic(dual) == a);

  SUBCASE("random deterministic automata complement exactly") {
    RandomSpec spec;
    spec.kind = AcceptanceKind::rabin;
    spec.n = 4;
    spec.k = 2;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      spec.seed = seed;
      Automaton d = random_deterministic_automaton(spec);
      Automaton dd = dualize_deterministic(d);
      std::mt19937_64 word_rng(seed);
      for (int i = 0; i < 30; ++i) {
        LassoWord w = random_word(word_rng, d.alphabet_size, 5);
        CHECK(member(dd, w) == !member(d, w));
      }
    }
  }

  SUBCASE("rejects unsupported input") {
    Automaton nd = inf_many_zero();  // two initial states
    nd.acceptance.kind = AcceptanceKind::rabin;
    nd.acceptance.g = {StateSet{0}};
    CHECK_THROWS_AS(dualize_deterministic(nd), std::invalid_argument);
    CHECK_THROWS_AS(dualize_deterministic(one_state_buchi()), std::invalid_argument);
  }
}

TEST_CASE("complete_deterministic") {
  SUBCASE("total input unchanged") {
    Automaton a = one_state_buchi();
    CHECK(complete_deterministic(a) == a);
  }
  SUBCASE("missing transition goes to a fresh sink") {
    Automaton a = one_state_buchi();
    a.delta[0][1].clear();
    Automaton c = complete_deterministic(a);
    CHECK(c.state_count == 2);
    CHECK(c.successors(0, 1) == StateSet{1});
    CHECK(c.successors(1, 0) == StateSet{1});
    CHECK(is_total(c));
    CHECK(validate(c).empty());
  }
  SUBCASE("language preserved for every kind") {
    for (AcceptanceKind kind :
         {AcceptanceKind::buchi, AcceptanceKind::gen_buchi, AcceptanceKind::streett,
          AcceptanceKind::parity, AcceptanceKind::rabin}) {
      RandomSpec spec;
      spec.kind = kind;
      spec.n = 3;
      spec.k = 2;
      for (std::uint64_t seed = 0; seed < 15; ++seed) {
        spec.seed = seed;
        Automaton d = random_deterministic_automaton(spec);
        // drop some transitions to force a sink
        std::mt19937_64 rng(seed);
        for (auto& row : d.delta)
          for (StateSet& ss : row)
            if (rng() % 3 == 0) ss.clear();
        Automaton c = complete_deterministic(d);
        REQUIRE(validate(c).empty());
        std::mt19937_64 word_rng(seed + 1);
        for (int i = 0; i < 25; ++i) {
          LassoWord w = random_word(word_rng, d.alphabet_size, 4);
          CHECK(member(d, w) == member(c, w));
        }
      }
    }
  }
}
