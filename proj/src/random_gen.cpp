#include "odet/random_gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace odet {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;  // modulo bias is irrelevant here
}

bool rng_chance(std::mt19937_64& rng, double probability) {
  auto threshold = static_cast<std::uint64_t>(probability * 4294967296.0);
  return (rng() & 0xffffffffULL) < threshold;
}

namespace {

StateSet random_subset(std::mt19937_64& rng, int n) {
  StateSet s;
  for (int q = 0; q < n; ++q)
    if (rng() & 1) s.insert(q);
  return s;
}

void fill_acceptance(std::mt19937_64& rng, Automaton& a, int k) {
  Acceptance& acc = a.acceptance;
  int n = a.state_count;
  switch (acc.kind) {
    case AcceptanceKind::buchi:
      acc.b = {random_subset(rng, n)};
      break;
    case AcceptanceKind::gen_buchi:
      for (int i = 0; i < k; ++i) acc.b.push_back(random_subset(rng, n));
      break;
    case AcceptanceKind::streett:
    case AcceptanceKind::rabin:
      for (int i = 0; i < k; ++i) {
        acc.g.push_back(random_subset(rng, n));
        acc.b.push_back(random_subset(rng, n));
      }
      break;
    case AcceptanceKind::parity: {
      // strict chain B(1) c G(1) c ... c G(k) over a random state order
      int usable = std::min(k, (n + 1) / 2);
      std::vector<int> order(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) order[static_cast<std::size_t>(q)] = q;
      for (int q = n - 1; q > 0; --q)
        std::swap(order[static_cast<std::size_t>(q)],
                  order[static_cast<std::size_t>(rng_below(rng, static_cast<std::uint64_t>(q + 1)))]);
      // 2*usable strictly increasing prefix sizes in [0..n]
      std::vector<int> sizes;
      int need = 2 * usable;
      for (int value = 0; value <= n && static_cast<int>(sizes.size()) < need; ++value) {
        int slots_left = n + 1 - value;
        int still_needed = need - static_cast<int>(sizes.size());
        if (slots_left == still_needed || rng_chance(rng, 0.5)) sizes.push_back(value);
      }
      for (int i = 0; i < usable; ++i) {
        StateSet b, g;
        for (int j = 0; j < sizes[static_cast<std::size_t>(2 * i)]; ++j)
          b.insert(order[static_cast<std::size_t>(j)]);
        for (int j = 0; j < sizes[static_cast<std::size_t>(2 * i + 1)]; ++j)
          g.insert(order[static_cast<std::size_t>(j)]);
        acc.b.push_back(std::move(b));
        acc.g.push_back(std::move(g));
      }
      break;
    }
  }
}

}  // namespace

Automaton random_automaton(const RandomSpec& spec) {
  if (spec.n < 1 || spec.k < 0 || spec.alphabet_size < 1)
    throw std::invalid_argument("random_automaton: n and alphabet must be positive");
  if (spec.density <= 0.0 || spec.density > 1.0)
    throw std::invalid_argument("random_automaton: density must be in (0,1]");

  std::mt19937_64 rng(spec.seed);
  Automaton a;
  a.alphabet_size = spec.alphabet_size;
  a.state_count = spec.n;
  a.acceptance.kind = spec.kind;
  a.resize_delta();
  for (int q = 0; q < spec.n; ++q)
    for (int letter = 0; letter < spec.alphabet_size; ++letter)
      for (int target = 0; target < spec.n; ++target)
        if (rng_chance(rng, spec.density)) a.add_transition(q, letter, target);

  a.initial = random_subset(rng, spec.n);
  if (a.initial.empty())
    a.initial.insert(static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(spec.n))));

  int k = spec.kind == AcceptanceKind::buchi ? 1 : spec.k;
  fill_acceptance(rng, a, k);
  if (spec.kind == AcceptanceKind::streett) a = simplify_streett(a);
  return a;
}

Automaton random_deterministic_automaton(const RandomSpec& spec) {
  Automaton a = random_automaton(spec);
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int q = 0; q < a.state_count; ++q)
    for (int letter = 0; letter < a.alphabet_size; ++letter) {
      StateSet single;
      single.insert(static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(a.state_count))));
      a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter)] = single;
    }
  a.initial = StateSet{static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(a.state_count)))};
  return a;
}

LassoWord random_word(std::mt19937_64& rng, int alphabet_size, int max_len) {
  LassoWord w;
  auto m = static_cast<std::uint64_t>(alphabet_size);
  int prefix_len = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_len + 1)));
  int loop_len = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_len)));
  for (int i = 0; i < prefix_len; ++i) w.prefix.push_back(static_cast<int>(rng_below(rng, m)));
  for (int i = 0; i < loop_len; ++i) w.loop.push_back(static_cast<int>(rng_below(rng, m)));
  return w;
}

}  // namespace odet
