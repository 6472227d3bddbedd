#include "odet/equiv.hpp"

#include <random>
#include <stdexcept>

#include "odet/oracle.hpp"
#include "odet/random_gen.hpp"

namespace odet {

namespace {

void check_same_alphabet(const Automaton& a, const Automaton& b) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("automata have different alphabet sizes");
}

// enumerates words of the given length in letterwise order
bool advance(std::vector<int>& word, int alphabet_size) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it + 1 < alphabet_size) {
      ++*it;
      return true;
    }
    *it = 0;
  }
  return false;
}

}  // namespace

std::optional<LassoWord> find_difference_sampled(const Automaton& a, const Automaton& b,
                                                 int samples, int max_len, std::uint64_t seed) {
  check_same_alphabet(a, b);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    LassoWord w = random_word(rng, a.alphabet_size, max_len);
    if (accepts(a, w) != accepts(b, w)) return w;
  }
  return std::nullopt;
}

std::optional<LassoWord> find_difference_exhaustive(const Automaton& a, const Automaton& b,
                                                    int max_len) {
  check_same_alphabet(a, b);
  for (int prefix_len = 0; prefix_len <= max_len; ++prefix_len) {
    for (int loop_len = 1; loop_len <= max_len; ++loop_len) {
      LassoWord w;
      w.prefix.assign(static_cast<std::size_t>(prefix_len), 0);
      w.loop.assign(static_cast<std::size_t>(loop_len), 0);
      while (true) {
        if (accepts(a, w) != accepts(b, w)) return w;
        if (!advance(w.loop, a.alphabet_size)) {
          if (!advance(w.prefix, a.alphabet_size) || w.prefix.empty()) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace odet
