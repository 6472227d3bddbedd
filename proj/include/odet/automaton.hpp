#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odet/state_set.hpp"

namespace odet {

enum class AcceptanceKind { buchi, gen_buchi, streett, parity, rabin };

const char* kind_name(AcceptanceKind kind);
std::optional<AcceptanceKind> kind_from_name(const std::string& name);

/// Acceptance condition of an omega-automaton. The fulfillment family `b`
/// is always present (Buchi stores its final set as b[0]); the enabling
/// family `g` exists only for the pair-based kinds (streett, parity, rabin).
/// Pair indices are 1-based in every public interface.
struct Acceptance {
  AcceptanceKind kind = AcceptanceKind::buchi;
  std::vector<StateSet> g;
  std::vector<StateSet> b;

  int pair_count() const { return static_cast<int>(b.size()); }
  bool has_g() const {
    return kind == AcceptanceKind::streett || kind == AcceptanceKind::parity ||
           kind == AcceptanceKind::rabin;
  }
  const StateSet& b_set(int i) const { return b[static_cast<std::size_t>(i - 1)]; }
  const StateSet& g_set(int i) const { return g[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const Acceptance&) const = default;
};

/// Nondeterministic omega-automaton over a dense integer alphabet
/// [0..alphabet_size) and dense integer states [0..state_count).
struct Automaton {
  int alphabet_size = 0;
  int state_count = 0;
  StateSet initial;
  std::vector<std::vector<StateSet>> delta;  // delta[state][letter]
  Acceptance acceptance;

  void resize_delta() {
    delta.assign(static_cast<std::size_t>(state_count),
                 std::vector<StateSet>(static_cast<std::size_t>(alphabet_size)));
  }

  const StateSet& successors(int q, int letter) const {
    return delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter)];
  }

  void add_transition(int q, int letter, int target) {
    delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter)].insert(target);
  }

  bool operator==(const Automaton&) const = default;
};

/// Ultimately periodic word u . v^omega: finite prefix u, nonempty loop v.
struct LassoWord {
  std::vector<int> prefix;
  std::vector<int> loop;

  int length() const { return static_cast<int>(prefix.size() + loop.size()); }
  int letter_at(int pos) const {
    return pos < static_cast<int>(prefix.size())
               ? prefix[static_cast<std::size_t>(pos)]
               : loop[static_cast<std::size_t>(pos - static_cast<int>(prefix.size()))];
  }

  std::string to_string() const;
  bool operator==(const LassoWord&) const = default;
};

/// Structural and per-kind invariant checks. Empty result means well formed;
/// each entry names the broken rule.
std::vector<std::string> validate(const Automaton& a);

/// Merges Streett pairs that share a fulfillment set B(i) by unioning their
/// G sets, so that B becomes injective. Surviving pairs are renumbered in
/// ascending order of the smallest merged original index.
Automaton simplify_streett(const Automaton& a);

/// Embeds a Buchi, generalized Buchi or parity automaton into the Streett
/// class (identity on Streett input), then simplifies. Rejects Rabin input.
Automaton as_streett(const Automaton& a);

/// One step of the powerset construction: all targets reachable from `s`
/// on `letter`.
StateSet subset_step(const Automaton& a, const StateSet& s, int letter);

bool transitions_deterministic(const Automaton& a);  // <= 1 successor each
bool is_total(const Automaton& a);                   // >= 1 successor each
bool is_deterministic(const Automaton& a);           // single initial + det transitions

/// Swaps the Rabin/Streett reading of the acceptance pairs. On a
/// deterministic, total automaton this complements the language exactly.
Automaton dualize_deterministic(const Automaton& a);

/// Adds at most one rejecting sink so every (state, letter) has exactly one
/// successor. Language is unchanged for every acceptance kind (for Streett
/// and parity the sink is wired into an enabling set so trapped runs stay
/// rejecting).
Automaton complete_deterministic(const Automaton& a);

}  // namespace odet
