#pragma once

#include "odet/safra_tree.hpp"

namespace odet {

/// Restriction of a Rabin automaton to a single pair i, as a Buchi
/// automaton on two copies of the state space: copy 1 simulates freely,
/// copy 2 excludes B(i) states and is entered by a nondeterministic jump;
/// final states are the G(i) states of copy 2. Accepts exactly the words
/// with a run that eventually avoids B(i) and visits G(i) infinitely often.
Automaton rabin_pair_to_buchi(const Automaton& a, int pair_index);

/// Determinizes a nondeterministic Rabin automaton: each pair is reduced to
/// Buchi and determinized through the improved construction, and the
/// deterministic components run in a synchronous product whose pairs are
/// the union of the lifted component pairs.
DetResult determinize_rabin(const Automaton& a, const DetOptions& opts = {});

}  // namespace odet
