#include "traces/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "traces/kernels.hpp"

namespace traces {

StateLabel StateLabel::subset(Subalphabet s) {
  StateLabel l(Kind::Subset);
  l.subset_ = s;
  return l;
}

StateLabel StateLabel::pair(StateLabel first, StateLabel second) {
  StateLabel l(Kind::Pair);
  l.pair_ = std::make_shared<const std::pair<StateLabel, StateLabel>>(std::move(first), std::move(second));
  return l;
}

StateLabel StateLabel::named(std::string name) {
  StateLabel l(Kind::Named);
  l.name_ = std::move(name);
  return l;
}

std::string StateLabel::to_string(const CommutationGraph& g) const {
  switch (kind_) {
    case Kind::Subset: return g.format(subset_);
    case Kind::F: return "F";
    case Kind::H: return "H";
    case Kind::Sink: return "sink";
    case Kind::Pair: return "(" + first().to_string(g) + "," + second().to_string(g) + ")";
    case Kind::Named: return name_;
  }
  return {};
}

bool StateLabel::operator==(const StateLabel& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Subset: return subset_ == other.subset_;
    case Kind::Pair: return first() == other.first() && second() == other.second();
    case Kind::Named: return name_ == other.name_;
    default: return true;
  }
}

Dfa::Dfa(CommutationGraph graph, std::vector<StateLabel> labels, State initial,
         std::vector<bool> finals, std::vector<State> table)
    : graph_(std::move(graph)),
      labels_(std::move(labels)),
      initial_(initial),
      finals_(std::move(finals)),
      table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error("automaton needs at least one state");
  if (initial_ >= n) throw Error("initial state out of range");
  if (finals_.size() != n) throw Error("final-state flags do not match the state count");
  if (table_.size() != n * alphabet_size()) {
    throw Error("transition table is not total: expected " + std::to_string(n * alphabet_size()) +
                " entries, got " + std::to_string(table_.size()));
  }
  for (State q : table_) {
    if (q >= n) throw Error("transition target out of range");
  }
}

Dfa Dfa::from_partial(CommutationGraph graph, std::vector<StateLabel> labels, State initial,
                      std::vector<bool> finals, const std::vector<std::optional<State>>& table) {
  const bool partial = std::any_of(table.begin(), table.end(), [](const auto& t) { return !t; });
  const auto sink = static_cast<State>(labels.size());
  std::vector<State> full;
  full.reserve(table.size() + graph.size());
  for (const auto& t : table) full.push_back(t.value_or(sink));
  if (partial) {
    labels.push_back(StateLabel::sink());
    finals.push_back(false);
    full.insert(full.end(), graph.size(), sink);
  }
  return Dfa(std::move(graph), std::move(labels), initial, std::move(finals), std::move(full));
}

State Dfa::run(const Word& w) const {
  State q = initial_;
  for (Letter x : w) {
    if (x >= alphabet_size()) throw Error("word contains a letter outside the automaton's alphabet");
    q = delta(q, x);
  }
  return q;
}

std::optional<State> Dfa::find_state(const StateLabel& label) const {
  for (std::size_t q = 0; q < labels_.size(); ++q) {
    if (labels_[q] == label) return static_cast<State>(q);
  }
  return std::nullopt;
}

std::vector<State> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.num_states(), false);
  std::vector<State> stack{d.initial()};
  seen[d.initial()] = true;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (std::size_t x = 0; x < d.alphabet_size(); ++x) {
      const State r = d.delta(q, static_cast<Letter>(x));
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  std::vector<State> out;
  for (std::size_t q = 0; q < seen.size(); ++q) {
    if (seen[q]) out.push_back(static_cast<State>(q));
  }
  return out;
}

namespace {

void require_same_alphabet(const Dfa& d1, const Dfa& d2) {
  if (!(d1.graph() == d2.graph())) throw Error("automata are defined over different alphabets");
}

}  // namespace

Dfa intersect(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1, d2);
  const std::size_t k = d1.alphabet_size();
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> states;
  std::deque<State> queue;
  auto lookup = [&](State a, State b) {
    auto [it, fresh] = index.try_emplace({a, b}, static_cast<State>(states.size()));
    if (fresh) {
      states.emplace_back(a, b);
      queue.push_back(it->second);
    }
    return it->second;
  };
  lookup(d1.initial(), d2.initial());
  std::vector<State> table;
  while (!queue.empty()) {
    const State p = queue.front();
    queue.pop_front();
    // Rows are appended in BFS order, which is the state numbering order.
    table.resize(states.size() * k);
    for (std::size_t x = 0; x < k; ++x) {
      const auto [a, b] = states[p];
      table[p * k + x] = lookup(d1.delta(a, static_cast<Letter>(x)), d2.delta(b, static_cast<Letter>(x)));
    }
  }
  table.resize(states.size() * k);
  std::vector<StateLabel> labels;
  std::vector<bool> finals;
  for (const auto& [a, b] : states) {
    labels.push_back(StateLabel::pair(d1.label(a), d2.label(b)));
    finals.push_back(d1.is_final(a) && d2.is_final(b));
  }
  return Dfa(d1.graph(), std::move(labels), 0, std::move(finals), std::move(table));
}

Dfa complement(const Dfa& d) {
  std::vector<bool> finals = d.finals();
  finals.flip();
  return Dfa(d.graph(), d.labels(), d.initial(), std::move(finals),
             std::vector<State>(d.table().begin(), d.table().end()));
}

Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet_size();
  const std::vector<State> live = reachable_states(d);
  // Unreachable states keep class -1 and are never consulted.
  std::vector<std::int64_t> cls(d.num_states(), -1);
  std::size_t classes = 0;
  {
    std::map<bool, std::int64_t> first;
    for (State q : live) {
      auto [it, fresh] = first.try_emplace(d.is_final(q), static_cast<std::int64_t>(first.size()));
      cls[q] = it->second;
    }
    classes = first.size();
  }
  while (true) {
    std::map<std::vector<std::int64_t>, std::int64_t> numbering;
    std::vector<std::int64_t> next(d.num_states(), -1);
    std::vector<std::int64_t> signature(k + 1);
    for (State q : live) {
      signature[0] = cls[q];
      for (std::size_t x = 0; x < k; ++x) signature[x + 1] = cls[d.delta(q, static_cast<Letter>(x))];
      auto [it, fresh] = numbering.try_emplace(signature, static_cast<std::int64_t>(numbering.size()));
      next[q] = it->second;
    }
    cls = std::move(next);
    if (numbering.size() == classes) break;
    classes = numbering.size();
  }

  std::vector<State> representative(classes, 0);
  std::vector<bool> assigned(classes, false);
  for (State q : live) {
    const auto c = static_cast<std::size_t>(cls[q]);
    if (!assigned[c]) {
      assigned[c] = true;
      representative[c] = q;
    }
  }
  std::vector<StateLabel> labels;
  std::vector<bool> finals;
  std::vector<State> table;
  table.reserve(classes * k);
  for (State rep : representative) {
    labels.push_back(d.label(rep));
    finals.push_back(d.is_final(rep));
    for (std::size_t x = 0; x < k; ++x) {
      table.push_back(static_cast<State>(cls[d.delta(rep, static_cast<Letter>(x))]));
    }
  }
  return Dfa(d.graph(), std::move(labels), static_cast<State>(cls[d.initial()]), std::move(finals),
             std::move(table));
}

bool equivalent_languages(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1, d2);
  std::vector<bool> seen(d1.num_states() * d2.num_states(), false);
  std::vector<std::pair<State, State>> stack{{d1.initial(), d2.initial()}};
  seen[d1.initial() * d2.num_states() + d2.initial()] = true;
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    if (d1.is_final(a) != d2.is_final(b)) return false;
    for (std::size_t x = 0; x < d1.alphabet_size(); ++x) {
      const State na = d1.delta(a, static_cast<Letter>(x));
      const State nb = d2.delta(b, static_cast<Letter>(x));
      const std::size_t key = na * d2.num_states() + nb;
      if (!seen[key]) {
        seen[key] = true;
        stack.emplace_back(na, nb);
      }
    }
  }
  return true;
}

bool is_diamond_closed(const Dfa& d, const CommutationGraph& g) {
  if (g.size() != d.alphabet_size()) throw Error("graph and automaton alphabets differ in size");
  for (State q : reachable_states(d)) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      const auto lx = static_cast<Letter>(x);
      for (Letter y : (g.commuting_set(lx) - Subalphabet::first(x + 1)).letters()) {
        if (d.delta(d.delta(q, lx), y) != d.delta(d.delta(q, y), lx)) return false;
      }
    }
  }
  return true;
}

CountSeries count_by_length(const Dfa& d, std::size_t max_length) {
  return kernels::omp::count_by_length(d, max_length);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Dfa& d, const std::string& name) {
  const CommutationGraph& g = d.graph();
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  init [shape=point];\n";
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    os << "  q" << q << " [label=\"" << dot_escape(d.label(static_cast<State>(q)).to_string(g))
       << "\", shape=" << (d.is_final(static_cast<State>(q)) ? "doublecircle" : "circle") << "];\n";
  }
  os << "  init -> q" << d.initial() << ";\n";
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    // Targets in order of their smallest letter.
    std::vector<std::pair<State, std::vector<Letter>>> groups;
    for (std::size_t x = 0; x < d.alphabet_size(); ++x) {
      const State r = d.delta(static_cast<State>(q), static_cast<Letter>(x));
      auto it = std::find_if(groups.begin(), groups.end(), [r](const auto& gr) { return gr.first == r; });
      if (it == groups.end()) {
        groups.push_back({r, {static_cast<Letter>(x)}});
      } else {
        it->second.push_back(static_cast<Letter>(x));
      }
    }
    for (const auto& [r, letters] : groups) {
      std::string label;
      for (Letter x : letters) {
        if (!label.empty()) label += ',';
        label += g.name(x);
      }
      os << "  q" << q << " -> q" << r << " [label=\"" << dot_escape(label) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace traces
