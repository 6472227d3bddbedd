#include "odet/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace odet {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream row(raw);
    Line line;
    line.number = no;
    std::string tok;
    while (row >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

int parse_id(const std::string& tok, int line, int limit, const char* what) {
  int v = parse_int(tok, line);
  if (v < 0 || v >= limit)
    throw ParseError(line, std::string(what) + " " + tok + " out of range");
  return v;
}

}  // namespace

Automaton parse_automaton(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  std::size_t pos = 0;
  int last_line = lines.empty() ? 0 : lines.back().number;

  auto next = [&](const char* expected) -> const Line& {
    if (pos >= lines.size())
      throw ParseError(last_line + 1, std::string("unexpected end of file, expected '") +
                                          expected + "'");
    return lines[pos++];
  };
  auto keyword_line = [&](const char* kw, std::size_t argc) -> const Line& {
    const Line& line = next(kw);
    if (line.tokens[0] != kw)
      throw ParseError(line.number, "expected keyword '" + std::string(kw) + "', got '" +
                                        line.tokens[0] + "'");
    if (line.tokens.size() != argc + 1)
      throw ParseError(line.number, std::string("'") + kw + "' takes " +
                                        std::to_string(argc) + " argument(s)");
    return line;
  };

  Automaton a;
  {
    const Line& line = keyword_line("automaton", 1);
    auto kind = kind_from_name(line.tokens[1]);
    if (!kind)
      throw ParseError(line.number, "unknown automaton type '" + line.tokens[1] + "'");
    a.acceptance.kind = *kind;
  }
  {
    const Line& line = keyword_line("alphabet", 1);
    a.alphabet_size = parse_int(line.tokens[1], line.number);
    if (a.alphabet_size < 1) throw ParseError(line.number, "alphabet size must be positive");
  }
  {
    const Line& line = keyword_line("states", 1);
    a.state_count = parse_int(line.tokens[1], line.number);
    if (a.state_count < 0) throw ParseError(line.number, "state count must be non-negative");
  }
  a.resize_delta();
  {
    const Line& line = next("initial");
    if (line.tokens[0] != "initial")
      throw ParseError(line.number, "expected keyword 'initial', got '" + line.tokens[0] + "'");
    if (line.tokens.size() < 2)
      throw ParseError(line.number, "initial set must be nonempty");
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
      a.initial.insert(parse_id(line.tokens[i], line.number, a.state_count, "state"));
  }

  while (pos < lines.size() && lines[pos].tokens[0] == "trans") {
    const Line& line = lines[pos++];
    if (line.tokens.size() != 4)
      throw ParseError(line.number, "'trans' takes 3 arguments");
    int q = parse_id(line.tokens[1], line.number, a.state_count, "state");
    int letter = parse_id(line.tokens[2], line.number, a.alphabet_size, "letter");
    int target = parse_id(line.tokens[3], line.number, a.state_count, "state");
    a.add_transition(q, letter, target);
  }

  int k = 0;
  {
    const Line& line = keyword_line("pairs", 1);
    k = parse_int(line.tokens[1], line.number);
    if (k < 0) throw ParseError(line.number, "pair count must be non-negative");
    if (a.acceptance.kind == AcceptanceKind::buchi && k != 1)
      throw ParseError(line.number, "buchi requires pairs 1");
  }
  bool pair_kind = a.acceptance.kind == AcceptanceKind::streett ||
                   a.acceptance.kind == AcceptanceKind::parity ||
                   a.acceptance.kind == AcceptanceKind::rabin;
  a.acceptance.b.assign(static_cast<std::size_t>(k), StateSet{});
  if (pair_kind) a.acceptance.g.assign(static_cast<std::size_t>(k), StateSet{});
  std::vector<bool> have_g(static_cast<std::size_t>(k), false);
  std::vector<bool> have_b(static_cast<std::size_t>(k), false);

  while (pos < lines.size() &&
         (lines[pos].tokens[0] == "G" || lines[pos].tokens[0] == "B")) {
    const Line& line = lines[pos++];
    bool is_g = line.tokens[0] == "G";
    if (is_g && !pair_kind)
      throw ParseError(line.number, "G line forbidden for automaton type " +
                                        std::string(kind_name(a.acceptance.kind)));
    if (line.tokens.size() < 2)
      throw ParseError(line.number, "missing pair index");
    const std::string& idx_tok = line.tokens[1];
    if (idx_tok.empty() || idx_tok.back() != ':')
      throw ParseError(line.number, "pair index must end with ':'");
    int i = parse_int(idx_tok.substr(0, idx_tok.size() - 1), line.number);
    if (i < 1 || i > k)
      throw ParseError(line.number, "pair index " + std::to_string(i) + " out of range");
    std::vector<bool>& have = is_g ? have_g : have_b;
    if (have[static_cast<std::size_t>(i - 1)])
      throw ParseError(line.number, std::string(is_g ? "G" : "B") + " " +
                                        std::to_string(i) + " given twice");
    have[static_cast<std::size_t>(i - 1)] = true;
    StateSet set;
    for (std::size_t t = 2; t < line.tokens.size(); ++t)
      set.insert(parse_id(line.tokens[t], line.number, a.state_count, "state"));
    if (is_g)
      a.acceptance.g[static_cast<std::size_t>(i - 1)] = std::move(set);
    else
      a.acceptance.b[static_cast<std::size_t>(i - 1)] = std::move(set);
  }

  {
    const Line& line = next("end");
    if (line.tokens[0] != "end")
      throw ParseError(line.number, "expected keyword 'end', got '" + line.tokens[0] + "'");
    if (line.tokens.size() != 1) throw ParseError(line.number, "'end' takes no arguments");
    for (int i = 1; i <= k; ++i) {
      if (!have_b[static_cast<std::size_t>(i - 1)])
        throw ParseError(line.number, "missing B line for pair " + std::to_string(i));
      if (pair_kind && !have_g[static_cast<std::size_t>(i - 1)])
        throw ParseError(line.number, "missing G line for pair " + std::to_string(i));
    }
  }
  if (pos != lines.size())
    throw ParseError(lines[pos].number, "text after 'end'");
  return a;
}

Automaton parse_automaton_string(const std::string& text) {
  std::istringstream in(text);
  return parse_automaton(in);
}

Automaton load_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_automaton(in);
}

std::string format_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "automaton " << kind_name(a.acceptance.kind) << '\n';
  out << "alphabet " << a.alphabet_size << '\n';
  out << "states " << a.state_count << '\n';
  out << "initial";
  for (int q : a.initial) out << ' ' << q;
  out << '\n';
  for (int q = 0; q < a.state_count; ++q)
    for (int letter = 0; letter < a.alphabet_size; ++letter)
      for (int target : a.successors(q, letter))
        out << "trans " << q << ' ' << letter << ' ' << target << '\n';
  int k = a.acceptance.pair_count();
  out << "pairs " << k << '\n';
  for (int i = 1; i <= k; ++i) {
    if (a.acceptance.has_g()) {
      out << "G " << i << ':';
      for (int q : a.acceptance.g_set(i)) out << ' ' << q;
      out << '\n';
    }
    out << "B " << i << ':';
    for (int q : a.acceptance.b_set(i)) out << ' ' << q;
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

LassoWord parse_word(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("word must contain ';' between prefix and loop");
  if (text.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("word must contain a single ';'");
  LassoWord w;
  auto read = [](const std::string& part, std::vector<int>& out) {
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad letter '" + tok + "' in word");
      }
      if (used != tok.size() || v < 0)
        throw std::invalid_argument("bad letter '" + tok + "' in word");
      out.push_back(v);
    }
  };
  read(text.substr(0, semi), w.prefix);
  read(text.substr(semi + 1), w.loop);
  if (w.loop.empty()) throw std::invalid_argument("word loop must be nonempty");
  return w;
}

std::string automaton_to_dot(const Automaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int q : a.initial) {
    out << "  init" << q << " [shape=point, style=invis];\n";
    out << "  init" << q << " -> s" << q << ";\n";
  }
  for (int q = 0; q < a.state_count; ++q)
    out << "  s" << q << " [label=\"" << q << "\"];\n";
  for (int q = 0; q < a.state_count; ++q)
    for (int letter = 0; letter < a.alphabet_size; ++letter)
      for (int target : a.successors(q, letter))
        out << "  s" << q << " -> s" << target << " [label=\"" << letter << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace odet
