#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "odet/equiv.hpp"
#include "odet/io.hpp"
#include "odet/its.hpp"
#include "odet/oracle.hpp"
#include "odet/rabin_det.hpp"
#include "odet/random_gen.hpp"
#include "odet/safra_classic.hpp"
#include "odet/safra_improved.hpp"

namespace {

using namespace odet;

constexpr int kExitError = 2;
constexpr int kExitCap = 3;

Automaton load_or_exit(const std::string& path) {
  try {
    Automaton a = load_automaton_file(path);
    auto bad = validate(a);
    if (!bad.empty()) {
      for (const auto& b : bad) std::cerr << path << ": " << b << "\n";
      std::exit(kExitError);
    }
    return a;
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    std::exit(kExitError);
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(kExitError);
  }
  out << text;
}

Automaton to_streett_or_exit(const Automaton& a) {
  if (a.acceptance.kind == AcceptanceKind::rabin) {
    std::cerr << "rabin input needs --algo rabin\n";
    std::exit(kExitError);
  }
  return as_streett(a);
}

struct DeterminizeArgs {
  std::string input;
  std::string algo = "improved";
  std::size_t cap = 1'000'000;
  std::string out_path;
  std::string dict_path;
};

int run_determinize(const DeterminizeArgs& args) {
  Automaton a = load_or_exit(args.input);
  DetOptions opts;
  opts.cap = args.cap;
  DetResult result;
  try {
    if (args.algo == "classic") {
      result = determinize_classic(to_streett_or_exit(a), opts);
    } else if (args.algo == "improved") {
      result = determinize_improved(to_streett_or_exit(a), opts);
    } else {
      if (a.acceptance.kind != AcceptanceKind::rabin) {
        std::cerr << "--algo rabin requires rabin input\n";
        return kExitError;
      }
      result = determinize_rabin(a, opts);
    }
  } catch (const CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  }
  write_output(args.out_path, format_automaton(result.automaton));
  if (!args.dict_path.empty()) {
    std::ofstream dict(args.dict_path);
    if (!dict) {
      std::cerr << "cannot write " << args.dict_path << "\n";
      return kExitError;
    }
    for (std::size_t s = 0; s < result.state_keys.size(); ++s)
      dict << "{\"state\":" << s << ",\"tree\":\"" << result.state_keys[s] << "\"}\n";
  }
  std::cerr << "states " << result.stats.states << " pairs "
            << result.automaton.acceptance.pair_count() << "\n";
  return 0;
}

int run_member(const std::string& input, const std::string& word_text) {
  Automaton a = load_or_exit(input);
  try {
    LassoWord w = parse_word(word_text);
    bool in = member(a, w);
    std::cout << (in ? "accept" : "reject") << "\n";
    return in ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
}

int run_equiv(const std::string& file_a, const std::string& file_b, int samples, int max_len,
              int exhaustive_len, std::uint64_t seed) {
  Automaton a = load_or_exit(file_a);
  Automaton b = load_or_exit(file_b);
  try {
    std::optional<LassoWord> diff =
        exhaustive_len > 0 ? find_difference_exhaustive(a, b, exhaustive_len)
                           : find_difference_sampled(a, b, samples, max_len, seed);
    if (diff) {
      std::cout << "counterexample " << diff->to_string() << "\n";
      return 1;
    }
    std::cout << "equivalent on tested set\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
}

int run_random(const std::string& type, int n, int k, int alphabet, double density,
               std::uint64_t seed, const std::string& out_path) {
  auto kind = kind_from_name(type);
  if (!kind) {
    std::cerr << "unknown automaton type '" << type << "'\n";
    return kExitError;
  }
  RandomSpec spec;
  spec.kind = *kind;
  spec.n = n;
  spec.k = k;
  spec.alphabet_size = alphabet;
  spec.density = density;
  spec.seed = seed;
  try {
    write_output(out_path, format_automaton(random_automaton(spec)));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return 0;
}

int run_stats(const std::string& input, const std::string& algo, std::size_t cap) {
  Automaton a = load_or_exit(input);
  DetOptions opts;
  opts.cap = cap;
  auto start = std::chrono::steady_clock::now();
  DetResult result;
  try {
    if (algo == "classic")
      result = determinize_classic(to_streett_or_exit(a), opts);
    else if (algo == "improved")
      result = determinize_improved(to_streett_or_exit(a), opts);
    else if (algo == "rabin" && a.acceptance.kind == AcceptanceKind::rabin)
      result = determinize_rabin(a, opts);
    else {
      std::cerr << "bad --algo / input combination\n";
      return kExitError;
    }
  } catch (const CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  }
  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  int k = a.acceptance.pair_count();
  int mu = std::min(a.state_count, k);
  std::cout << "n,k,mu,algo,states,index_size,max_tree_nodes,max_spine_len,wall_ms\n";
  std::cout << a.state_count << ',' << k << ',' << mu << ',' << algo << ','
            << result.stats.states << ',' << result.automaton.acceptance.pair_count() << ','
            << result.stats.max_tree_nodes << ',' << result.stats.max_spine_len << ','
            << wall_ms << "\n";
  return 0;
}

int run_dot(const std::string& input, bool trees, std::size_t cap, const std::string& out_path) {
  Automaton a = load_or_exit(input);
  if (!trees) {
    write_output(out_path, automaton_to_dot(a));
    return 0;
  }
  DetOptions opts;
  opts.cap = cap;
  DetResult result;
  try {
    result = determinize_improved(to_streett_or_exit(a), opts);
  } catch (const CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  }
  std::string dot = "digraph trees {\n  node [shape=box];\n";
  for (std::size_t s = 0; s < result.state_keys.size(); ++s) {
    dot += "  t" + std::to_string(s) + " [label=\"" + std::to_string(s) + ": " +
           result.state_keys[s] + "\"];\n";
  }
  for (std::size_t s = 0; s < result.state_keys.size(); ++s)
    for (int letter = 0; letter < a.alphabet_size; ++letter) {
      int target = result.automaton.successors(static_cast<int>(s), letter).min();
      dot += "  t" + std::to_string(s) + " -> t" + std::to_string(target) + " [label=\"" +
             std::to_string(letter) + "\"];\n";
    }
  dot += "}\n";
  write_output(out_path, dot);
  return 0;
}

int run_its(const std::string& input, bool dot, const std::string& out_path) {
  Automaton a = load_or_exit(input);
  if (a.acceptance.kind == AcceptanceKind::rabin) {
    std::cerr << "its needs a streett-convertible input\n";
    return kExitError;
  }
  Automaton s = as_streett(a);
  ItsTree tree = build_its(s.state_count, s.acceptance.pair_count(), s.acceptance.b);
  write_output(out_path, dot ? its_to_dot(tree) : its_to_text(tree));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-automata determinization toolkit"};
  app.require_subcommand(1);

  DeterminizeArgs det;
  auto* det_cmd = app.add_subcommand("determinize", "determinize to a Rabin automaton");
  det_cmd->add_option("input", det.input, "automaton file")->required();
  det_cmd->add_option("--algo", det.algo, "classic | improved | rabin")
      ->check(CLI::IsMember({"classic", "improved", "rabin"}));
  det_cmd->add_option("--cap", det.cap, "state exploration cap");
  det_cmd->add_option("--out", det.out_path, "output file (default stdout)");
  det_cmd->add_option("--dict", det.dict_path, "state dictionary file (json lines)");

  std::string member_input, member_word;
  auto* member_cmd = app.add_subcommand("member", "test membership of an ultimately periodic word");
  member_cmd->add_option("input", member_input, "automaton file")->required();
  member_cmd->add_option("--word", member_word, "word as \"u;v\"")->required();

  std::string equiv_a, equiv_b;
  int equiv_samples = 200, equiv_maxlen = 6, equiv_exhaustive = 0;
  std::uint64_t equiv_seed = 1;
  auto* equiv_cmd = app.add_subcommand("equiv", "compare two automata on sampled or all short words");
  equiv_cmd->add_option("fileA", equiv_a)->required();
  equiv_cmd->add_option("fileB", equiv_b)->required();
  equiv_cmd->add_option("--samples", equiv_samples, "number of sampled words");
  equiv_cmd->add_option("--maxlen", equiv_maxlen, "max prefix/loop length for samples");
  equiv_cmd->add_option("--exhaustive", equiv_exhaustive, "check all words up to this length");
  equiv_cmd->add_option("--seed", equiv_seed, "sampling seed");

  std::string rand_type = "streett", rand_out;
  int rand_n = 3, rand_k = 1, rand_alphabet = 2;
  double rand_density = 0.5;
  std::uint64_t rand_seed = 1;
  auto* rand_cmd = app.add_subcommand("random", "generate a seeded random automaton");
  rand_cmd->add_option("--type", rand_type, "buchi|genbuchi|streett|parity|rabin");
  rand_cmd->add_option("--n", rand_n, "states");
  rand_cmd->add_option("--k", rand_k, "pairs");
  rand_cmd->add_option("--alphabet", rand_alphabet, "letters");
  rand_cmd->add_option("--density", rand_density, "transition probability");
  rand_cmd->add_option("--seed", rand_seed, "seed");
  rand_cmd->add_option("--out", rand_out, "output file (default stdout)");

  std::string stats_input, stats_algo = "improved";
  std::size_t stats_cap = 1'000'000;
  auto* stats_cmd = app.add_subcommand("stats", "determinize and print a CSV stats row");
  stats_cmd->add_option("input", stats_input)->required();
  stats_cmd->add_option("--algo", stats_algo)
      ->check(CLI::IsMember({"classic", "improved", "rabin"}));
  stats_cmd->add_option("--cap", stats_cap);

  std::string dot_input, dot_out;
  bool dot_trees = false;
  std::size_t dot_cap = 100'000;
  auto* dot_cmd = app.add_subcommand("dot", "emit DOT for an automaton or its reachable trees");
  dot_cmd->add_option("input", dot_input)->required();
  dot_cmd->add_flag("--trees", dot_trees, "render every reachable tree state");
  dot_cmd->add_option("--cap", dot_cap);
  dot_cmd->add_option("--out", dot_out);

  std::string its_input, its_out;
  bool its_dot = false;
  auto* its_cmd = app.add_subcommand("its", "print the increasing tree of sets of the B family");
  its_cmd->add_option("input", its_input)->required();
  its_cmd->add_flag("--dot", its_dot, "emit DOT instead of indented text");
  its_cmd->add_option("--out", its_out);

  CLI11_PARSE(app, argc, argv);

  if (det_cmd->parsed()) return run_determinize(det);
  if (member_cmd->parsed()) return run_member(member_input, member_word);
  if (equiv_cmd->parsed())
    return run_equiv(equiv_a, equiv_b, equiv_samples, equiv_maxlen, equiv_exhaustive, equiv_seed);
  if (rand_cmd->parsed())
    return run_random(rand_type, rand_n, rand_k, rand_alphabet, rand_density, rand_seed, rand_out);
  if (stats_cmd->parsed()) return run_stats(stats_input, stats_algo, stats_cap);
  if (dot_cmd->parsed()) return run_dot(dot_input, dot_trees, dot_cap, dot_out);
  if (its_cmd->parsed()) return run_its(its_input, its_dot, its_out);
  return kExitError;
}
