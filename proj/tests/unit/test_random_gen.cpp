#include <doctest.h>

#include "odet/io.hpp"
#include "odet/random_gen.hpp"

using namespace odet;

TEST_CASE("random generator is reproducible byte for byte") {
  RandomSpec spec;
  spec.kind = AcceptanceKind::rabin;
  spec.n = 5;
  spec.k = 3;
  spec.seed = 99;
  CHECK(format_automaton(random_automaton(spec)) == format_automaton(random_automaton(spec)));
  spec.seed = 100;
  CHECK(format_automaton(random_automaton(spec)) != format_automaton(random_automaton(RandomSpec{})));
}

TEST_CASE("density one gives the complete transition relation") {
  RandomSpec spec;
  spec.n = 3;
  spec.alphabet_size = 2;
  spec.density = 1.0;
  spec.seed = 7;
  Automaton a = random_automaton(spec);
  for (int q = 0; q < 3; ++q)
    for (int letter = 0; letter < 2; ++letter)
      CHECK(a.successors(q, letter).size() == 3);
}

TEST_CASE("generated automata always validate") {
  for (AcceptanceKind kind :
       {AcceptanceKind::buchi, AcceptanceKind::gen_buchi, AcceptanceKind::streett,
        AcceptanceKind::parity, AcceptanceKind::rabin}) {
    RandomSpec spec;
    spec.kind = kind;
    spec.n = 4;
    spec.k = 2;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      spec.seed = seed;
      Automaton a = random_automaton(spec);
      auto bad = validate(a);
      if (!bad.empty()) {
        CAPTURE(kind_name(kind));
        CAPTURE(seed);
        REQUIRE(bad.empty());
      }
    }
  }
}

TEST_CASE("deterministic generator gives deterministic total automata") {
  RandomSpec spec;
  spec.kind = AcceptanceKind::streett;
  spec.n = 4;
  spec.k = 2;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    spec.seed = seed;
    Automaton a = random_deterministic_automaton(spec);
    CHECK(is_deterministic(a));
    CHECK(is_total(a));
    CHECK(validate(a).empty());
  }
}
