#pragma once

#include <cstdint>
#include <optional>

#include "odet/automaton.hpp"

namespace odet {

/// First sampled word (seeded order) on which the two automata disagree.
std::optional<LassoWord> find_difference_sampled(const Automaton& a, const Automaton& b,
                                                 int samples, int max_len, std::uint64_t seed);

/// Lexicographically least word with |u| <= max_len, 1 <= |v| <= max_len
/// (shorter first, then letterwise) on which the two automata disagree.
std::optional<LassoWord> find_difference_exhaustive(const Automaton& a, const Automaton& b,
                                                    int max_len);

}  // namespace odet
