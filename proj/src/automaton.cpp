#include "odet/automaton.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace odet {

const char* kind_name(AcceptanceKind kind) {
  switch (kind) {
    case AcceptanceKind::buchi: return "buchi";
    case AcceptanceKind::gen_buchi: return "genbuchi";
    case AcceptanceKind::streett: return "streett";
    case AcceptanceKind::parity: return "parity";
    case AcceptanceKind::rabin: return "rabin";
  }
  return "?";
}

std::optional<AcceptanceKind> kind_from_name(const std::string& name) {
  if (name == "buchi") return AcceptanceKind::buchi;
  if (name == "genbuchi") return AcceptanceKind::gen_buchi;
  if (name == "streett") return AcceptanceKind::streett;
  if (name == "parity") return AcceptanceKind::parity;
  if (name == "rabin") return AcceptanceKind::rabin;
  return std::nullopt;
}

std::string LassoWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) out << ' ';
    out << prefix[i];
  }
  out << ';';
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (i) out << ' ';
    out << loop[i];
  }
  return out.str();
}

namespace {

bool in_range(const StateSet& s, int n) {
  return s.empty() || (s.min() >= 0 && s.max() < n);
}

}  // namespace

std::vector<std::string> validate(const Automaton& a) {
  std::vector<std::string> bad;
  if (a.alphabet_size < 1) bad.push_back("alphabet size not positive");
  if (a.state_count < 0) bad.push_back("negative state count");
  if (a.initial.empty())
    bad.push_back("initial set empty");
  else if (!in_range(a.initial, a.state_count))
    bad.push_back("initial state out of range");

  if (static_cast<int>(a.delta.size()) != a.state_count) {
    bad.push_back("transition table has wrong state dimension");
  } else {
    for (int q = 0; q < a.state_count; ++q) {
      const auto& row = a.delta[static_cast<std::size_t>(q)];
      if (static_cast<int>(row.size()) != a.alphabet_size) {
        bad.push_back("transition table has wrong letter dimension at state " +
                      std::to_string(q));
        continue;
      }
      for (const StateSet& ss : row)
        if (!in_range(ss, a.state_count)) {
          bad.push_back("transition target out of range at state " + std::to_string(q));
          break;
        }
    }
  }

  const Acceptance& acc = a.acceptance;
  int k = acc.pair_count();
  if (acc.has_g() && static_cast<int>(acc.g.size()) != k)
    bad.push_back("G family size differs from B family size");
  if (!acc.has_g() && !acc.g.empty())
    bad.push_back("G sets present on a non-pair acceptance kind");
  for (const StateSet& s : acc.b)
    if (!in_range(s, a.state_count)) {
      bad.push_back("acceptance B set state out of range");
      break;
    }
  for (const StateSet& s : acc.g)
    if (!in_range(s, a.state_count)) {
      bad.push_back("acceptance G set state out of range");
      break;
    }

  switch (acc.kind) {
    case AcceptanceKind::buchi:
      if (k != 1) bad.push_back("buchi acceptance must have exactly one set");
      break;
    case AcceptanceKind::gen_buchi:
      break;
    case AcceptanceKind::streett: {
      for (int i = 1; i <= k && static_cast<int>(acc.b.size()) == k; ++i)
        for (int j = i + 1; j <= k; ++j)
          if (acc.b_set(i) == acc.b_set(j))
            bad.push_back("B not injective (pairs " + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      break;
    }
    case AcceptanceKind::parity: {
      // strict chain B(1) c G(1) c B(2) c ... c G(k)
      if (static_cast<int>(acc.g.size()) == k) {
        const StateSet* prev = nullptr;
        for (int i = 1; i <= k; ++i) {
          const StateSet& bi = acc.b_set(i);
          const StateSet& gi = acc.g_set(i);
          if (prev && !(prev->subset_of(bi) && !(*prev == bi))) {
            bad.push_back("parity chain broken at B(" + std::to_string(i) + ")");
            break;
          }
          if (!(bi.subset_of(gi) && !(bi == gi))) {
            bad.push_back("parity chain broken at G(" + std::to_string(i) + ")");
            break;
          }
          prev = &gi;
        }
      }
      break;
    }
    case AcceptanceKind::rabin:
      break;
  }
  return bad;
}

Automaton simplify_streett(const Automaton& a) {
  if (a.acceptance.kind != AcceptanceKind::streett)
    throw std::invalid_argument("simplify_streett: acceptance is not streett");
  Automaton r = a;
  std::vector<StateSet> gs, bs;
  std::map<StateSet, std::size_t> seen;  // B set -> position in output
  int k = a.acceptance.pair_count();
  for (int i = 1; i <= k; ++i) {
    const StateSet& bi = a.acceptance.b_set(i);
    auto it = seen.find(bi);
    if (it == seen.end()) {
      seen.emplace(bi, bs.size());
      bs.push_back(bi);
      gs.push_back(a.acceptance.g_set(i));
    } else {
      gs[it->second].unite_with(a.acceptance.g_set(i));
    }
  }
  r.acceptance.g = std::move(gs);
  r.acceptance.b = std::move(bs);
  return r;
}

Automaton as_streett(const Automaton& a) {
  Automaton r = a;
  switch (a.acceptance.kind) {
    case AcceptanceKind::buchi:
    case AcceptanceKind::gen_buchi: {
      StateSet q = StateSet::full(a.state_count);
      r.acceptance.kind = AcceptanceKind::streett;
      r.acceptance.g.assign(a.acceptance.b.size(), q);
      break;
    }
    case AcceptanceKind::parity:
    case AcceptanceKind::streett:
      r.acceptance.kind = AcceptanceKind::streett;
      break;
    case AcceptanceKind::rabin:
      throw std::invalid_argument("as_streett: rabin is not a streett subclass");
  }
  return simplify_streett(r);
}

StateSet subset_step(const Automaton& a, const StateSet& s, int letter) {
  StateSet r;
  for (int q : s) r.unite_with(a.successors(q, letter));
  return r;
}

bool transitions_deterministic(const Automaton& a) {
  for (const auto& row : a.delta)
    for (const StateSet& ss : row)
      if (ss.size() > 1) return false;
  return true;
}

bool is_total(const Automaton& a) {
  for (const auto& row : a.delta)
    for (const StateSet& ss : row)
      if (ss.empty()) return false;
  return true;
}

bool is_deterministic(const Automaton& a) {
  return a.initial.size() == 1 && transitions_deterministic(a);
}

Automaton dualize_deterministic(const Automaton& a) {
  if (!is_deterministic(a) || !is_total(a))
    throw std::invalid_argument("dualize_deterministic: automaton must be deterministic and total");
  Automaton r = a;
  switch (a.acceptance.kind) {
    case AcceptanceKind::rabin:
      r.acceptance.kind = AcceptanceKind::streett;
      break;
    case AcceptanceKind::streett:
      r.acceptance.kind = AcceptanceKind::rabin;
      break;
    default:
      throw std::invalid_argument("dualize_deterministic: acceptance must be rabin or streett");
  }
  return r;
}

Automaton complete_deterministic(const Automaton& a) {
  if (!transitions_deterministic(a))
    throw std::invalid_argument("complete_deterministic: automaton must be deterministic");
  if (is_total(a)) return a;

  Automaton r = a;
  int sink = r.state_count;
  r.state_count += 1;
  for (auto& row : r.delta)
    for (StateSet& ss : row)
      if (ss.empty()) ss.insert(sink);
  r.delta.emplace_back(static_cast<std::size_t>(r.alphabet_size), StateSet{sink});

  // Keep trapped runs rejecting. Buchi, generalized Buchi, and Rabin reject
  // a run confined to a state outside every set; Streett and parity accept
  // vacuously, so the sink must enter an enabling set.
  Acceptance& acc = r.acceptance;
  switch (acc.kind) {
    case AcceptanceKind::streett: {
      int empty_b = 0;
      for (int i = 1; i <= acc.pair_count(); ++i)
        if (acc.b_set(i).empty()) empty_b = i;
      if (empty_b) {
        acc.g[static_cast<std::size_t>(empty_b - 1)].insert(sink);
      } else {
        acc.g.push_back(StateSet{sink});
        acc.b.push_back(StateSet{});
      }
      break;
    }
    case AcceptanceKind::parity: {
      if (acc.pair_count() == 0) {
        acc.b.push_back(StateSet{});
        acc.g.push_back(StateSet{sink});
      } else {
        // sink joins G(1) and everything above it; the chain stays strict
        acc.g[0].insert(sink);
        for (int i = 2; i <= acc.pair_count(); ++i) {
          acc.b[static_cast<std::size_t>(i - 1)].insert(sink);
          acc.g[static_cast<std::size_t>(i - 1)].insert(sink);
        }
      }
      break;
    }
    default:
      break;
  }
  return r;
}

}  // namespace odet
