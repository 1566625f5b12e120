#include "traces/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "traces/automaton.hpp"
#include "traces/lazard.hpp"
#include "traces/series.hpp"
#include "traces/trace.hpp"

namespace traces {

namespace {

std::vector<std::string> split_whitespace(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string token; is >> token;) out.push_back(token);
  return out;
}

}  // namespace

CommutationGraph parse_graph(std::istream& in) {
  std::optional<std::vector<std::string>> letters;
  std::vector<CommutationGraph::Pair> pairs;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!letters) {
      letters = tokens;
      try {
        CommutationGraph::build(*letters, {});
      } catch (const Error& e) {
        throw ParseError(number, e.what());
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(number, "expected two letter names, got " + std::to_string(tokens.size()));
    }
    for (const auto& t : tokens) {
      if (std::find(letters->begin(), letters->end(), t) == letters->end()) {
        throw ParseError(number, "unknown letter '" + t + "'");
      }
    }
    pairs.emplace_back(tokens[0], tokens[1]);
  }
  if (!letters) throw ParseError(1, "missing letter list");
  return CommutationGraph::build(*letters, pairs);
}

CommutationGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw Error(path.string() + ":" + e.what());
  }
}

namespace cli {

namespace {

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string graph_path;
  std::string kind;
  std::optional<std::string> sub;
  std::optional<std::string> letter;
  std::optional<std::string> word;
  std::size_t max_length = 6;
  std::optional<std::string> out_path;
};

Subalphabet require_sub(const CommutationGraph& g, const Options& o) {
  if (!o.sub) throw Error("--sub is required for kind '" + o.kind + "'");
  return g.parse_subalphabet(*o.sub);
}

Dfa build_kind(const CommutationGraph& g, const Options& o) {
  if (o.kind == "tnb") {
    if (!o.letter) throw Error("--letter is required for kind 'tnb'");
    return tn_automaton(g, g.index(*o.letter));
  }
  if (o.kind == "left") return left_factor_automaton(Bisection(g, require_sub(g, o)));
  if (o.kind == "gen") return generating_set_automaton(Bisection(g, require_sub(g, o)));
  if (o.kind == "nf") return normal_form_automaton(g);
  throw Error("unknown automaton kind '" + o.kind + "' (expected tnb, left, gen or nf)");
}

std::string format_trace(const Trace& t) { return t.empty() ? "ε" : t.to_string(); }

void show(const CommutationGraph& g, std::ostream& out) {
  out << "letters";
  for (const auto& n : g.names()) out << ' ' << n;
  out << '\n';
  for (std::size_t x = 0; x < g.size(); ++x) {
    out << "com " << g.name(static_cast<Letter>(x)) << ' '
        << g.format(g.commuting_set(static_cast<Letter>(x))) << '\n';
  }
  out << "cliques " << enumerate_cliques(g).size() << '\n';
  out << "clique_polynomial " << CountSeries(clique_polynomial(g).coefficients).to_string() << '\n';
}

void print_automaton(const Dfa& d, std::ostream& out) {
  const CommutationGraph& g = d.graph();
  out << "states " << d.num_states() << '\n';
  out << "initial " << d.label(d.initial()).to_string(g) << '\n';
  out << "finals";
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    if (d.is_final(static_cast<State>(q))) out << ' ' << d.label(static_cast<State>(q)).to_string(g);
  }
  out << '\n';
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      const State r = d.delta(static_cast<State>(q), static_cast<Letter>(x));
      out << d.label(static_cast<State>(q)).to_string(g) << ' ' << g.name(static_cast<Letter>(x)) << ' '
          << d.label(r).to_string(g) << '\n';
    }
  }
}

CountSeries count_kind(const CommutationGraph& g, const Options& o) {
  if (o.kind == "nf") return count_by_length(normal_form_automaton(g), o.max_length);
  if (o.kind == "left") return left_factor_count_series(Bisection(g, require_sub(g, o)), o.max_length);
  // Saturated languages: one normal form per accepted trace.
  return count_by_length(intersect(normal_form_automaton(g), build_kind(g, o)), o.max_length);
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  const CommutationGraph g = load_graph(o.graph_path);
  if (command == "show") {
    show(g, out);
  } else if (command == "automaton") {
    print_automaton(build_kind(g, o), out);
  } else if (command == "member") {
    if (!o.word) throw Error("--word is required");
    out << (build_kind(g, o).accepts(parse_word(g, *o.word)) ? "true" : "false") << '\n';
  } else if (command == "factorize") {
    if (!o.word) throw Error("--word is required");
    const auto [u, v] = lazard_factorize(Bisection(g, require_sub(g, o)), parse_word(g, *o.word));
    out << format_trace(u) << ' ' << format_trace(v) << '\n';
  } else if (command == "count") {
    try {
      out << count_kind(g, o).to_string() << '\n';
    } catch (const ConstructionMismatch& e) {
      throw VerificationFailed(e.what());
    }
  } else if (command == "verify") {
    const BisectionReport report = verify_bisection(Bisection(g, require_sub(g, o)), o.max_length);
    out << report.to_string();
    return exit_code(report);
  } else if (command == "dot") {
    const std::string text = to_dot(build_kind(g, o), o.kind);
    if (o.out_path) {
      std::ofstream file(*o.out_path, std::ios::binary);
      if (!file) throw Error("cannot write '" + *o.out_path + "'");
      file << text;
    } else {
      out << text;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lazard elimination in trace monoids: automata for the left factor and its code"};
  app.name("trace-lazard");
  Options o;
  app.add_option("--graph", o.graph_path, "Commutation graph file")->required();
  app.require_subcommand(1);
  app.fallthrough();

  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("kind", o.kind, "tnb, left, gen or nf")->required();
  };
  auto add_sub = [&](CLI::App* sub) { sub->add_option("--sub", o.sub, "Eliminated letters, comma-separated"); };

  app.add_subcommand("show", "Print the alphabet, Com sets and clique polynomial");
  auto* automaton_cmd = app.add_subcommand("automaton", "Print an automaton's transition table");
  auto* member_cmd = app.add_subcommand("member", "Membership of a word");
  auto* factorize_cmd = app.add_subcommand("factorize", "Lazard factorization of a word");
  auto* count_cmd = app.add_subcommand("count", "Trace counts by length");
  auto* verify_cmd = app.add_subcommand("verify", "Check the bisection identity and unique factorization");
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");

  for (auto* sub : {automaton_cmd, member_cmd, count_cmd, dot_cmd}) {
    add_kind(sub);
    add_sub(sub);
    sub->add_option("--letter", o.letter, "Letter b for kind tnb");
  }
  add_sub(factorize_cmd);
  add_sub(verify_cmd);
  for (auto* sub : {member_cmd, factorize_cmd}) sub->add_option("--word", o.word, "Word");
  for (auto* sub : {count_cmd, verify_cmd}) {
    sub->add_option("--max-length", o.max_length, "Largest length")->capture_default_str();
  }
  dot_cmd->add_option("--out", o.out_path, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o, out);
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cli

}  // namespace traces
