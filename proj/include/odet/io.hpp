#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "odet/automaton.hpp"

namespace odet {

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

/// Parses the line-based text format:
///
///   automaton <type>            # buchi | genbuchi | streett | parity | rabin
///   alphabet <m>
///   states <n>
///   initial <q> [<q> ...]
///   trans <q> <letter> <q'>     # zero or more
///   pairs <k>
///   G <i>: [<q> ...]            # pair kinds only
///   B <i>: [<q> ...]            # all kinds; exactly one line per index
///   end
///
/// '#' starts a comment. Parsing is strict; violations throw ParseError
/// with the offending line number.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton_string(const std::string& text);
Automaton load_automaton_file(const std::string& path);

std::string format_automaton(const Automaton& a);

/// Word syntax "u;v": integer letters separated by spaces, prefix and loop
/// separated by ';'. The loop must be nonempty.
LassoWord parse_word(const std::string& text);

std::string automaton_to_dot(const Automaton& a);

}  // namespace odet
