#pragma once

#include <cstdint>
#include <random>

#include "odet/automaton.hpp"

namespace odet {

/// Parameters of the seeded generator. Identical parameters give identical
/// automata on every platform (raw mt19937_64 draws, no distribution
/// objects).
struct RandomSpec {
  AcceptanceKind kind = AcceptanceKind::streett;
  int n = 3;
  int k = 1;
  int alphabet_size = 2;
  double density = 0.5;
  std::uint64_t seed = 0;
};

/// Each transition is present with probability `density`; acceptance sets
/// include each state with probability 1/2; the initial set is nonempty.
/// Generated Streett automata have injective B (equal pairs merged); parity
/// chains are rebuilt strict, which caps k at (n+1)/2.
Automaton random_automaton(const RandomSpec& spec);

/// Deterministic total automaton with one successor per state and letter.
Automaton random_deterministic_automaton(const RandomSpec& spec);

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound);
bool rng_chance(std::mt19937_64& rng, double probability);

LassoWord random_word(std::mt19937_64& rng, int alphabet_size, int max_len);

}  // namespace odet
