#pragma once

#include "odet/safra_tree.hpp"

namespace odet {

/// Single root named 1, labeled with the initial states, red, index 0.
SafraTree initial_classic(const Automaton& a);

/// One transition of the baseline tree construction: subset construction at
/// every node, top-down expansion (leaf extension with the largest unused
/// obligation; fulfillment and reset branching per child), horizontal and
/// vertical merge, retail renaming and recoloring.
SafraTree classic_step(const Automaton& a, const SafraTree& t, int letter);

/// Breadth-first closure of classic_step. Input must be a valid Streett
/// automaton. Output is a deterministic total Rabin automaton whose pair i
/// accepts runs seeing green-named-i trees infinitely and
/// red-or-missing-named-i trees finitely.
DetResult determinize_classic(const Automaton& a, const DetOptions& opts = {});

/// Structural invariants of classic trees; empty result means well formed.
std::vector<std::string> check_sts(const SafraTree& t, const Automaton& a);

}  // namespace odet
