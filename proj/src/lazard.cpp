#include "traces/lazard.hpp"

#include <algorithm>

namespace traces {

Bisection::Bisection(CommutationGraph g, Subalphabet b) : graph_(std::move(g)), eliminated_(b) {
  if (!b.subset_of(graph_.all())) throw Error("eliminated subalphabet is not contained in the alphabet");
  members_ = b.letters();
}

State Bisection::subset_state(Subalphabet s) const {
  if (!s.subset_of(eliminated_)) throw Error("subset state outside the eliminated subalphabet");
  State q = 0;
  for (std::size_t j = 0; j < members_.size(); ++j) {
    if (s.contains(members_[j])) q |= State{1} << j;
  }
  return q;
}

Subalphabet Bisection::subset_of_state(State q) const {
  Subalphabet s;
  for (std::size_t j = 0; j < members_.size(); ++j) {
    if ((q >> j) & 1U) s = s.with(members_[j]);
  }
  return s;
}

Dfa tn_automaton(const CommutationGraph& g, Letter b) {
  if (b >= g.size()) throw Error("tn_automaton: unknown letter");
  const std::size_t k = g.size();
  const Subalphabet com = g.commuting_set(b);
  std::vector<State> table(2 * k);
  for (std::size_t x = 0; x < k; ++x) {
    const auto lx = static_cast<Letter>(x);
    table[x] = lx == b ? 1 : 0;
    table[k + x] = com.contains(lx) ? 1 : 0;
  }
  return Dfa(g, {StateLabel::subset({}), StateLabel::subset(Subalphabet::single(b))}, 0, {true, false},
             std::move(table));
}

Dfa left_factor_automaton(const Bisection& bi) {
  const CommutationGraph& g = bi.graph();
  const std::size_t k = g.size();
  const std::size_t n = bi.subset_count();
  std::vector<StateLabel> labels;
  std::vector<State> table(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    const Subalphabet current = bi.subset_of_state(static_cast<State>(q));
    labels.push_back(StateLabel::subset(current));
    for (std::size_t x = 0; x < k; ++x) {
      const auto lx = static_cast<Letter>(x);
      table[q * k + x] = bi.subset_state(current.with(lx) & g.commuting_set(lx) & bi.eliminated());
    }
  }
  std::vector<bool> finals(n, false);
  finals[0] = true;
  return Dfa(g, std::move(labels), 0, std::move(finals), std::move(table));
}

Dfa left_factor_by_intersection(const Bisection& bi) {
  const CommutationGraph& g = bi.graph();
  const auto letters = bi.eliminated().letters();
  if (letters.empty()) {
    return Dfa(g, {StateLabel::subset({})}, 0, {true}, std::vector<State>(g.size(), 0));
  }
  Dfa product = tn_automaton(g, letters.front());
  for (std::size_t i = 1; i < letters.size(); ++i) {
    product = minimize(intersect(product, tn_automaton(g, letters[i])));
  }
  return minimize(product);
}

Dfa generating_set_automaton(const Bisection& bi) {
  const CommutationGraph& g = bi.graph();
  const std::size_t k = g.size();
  const std::size_t subsets = bi.subset_count();
  const auto f = static_cast<State>(subsets);
  const auto h = static_cast<State>(subsets + 1);
  std::vector<StateLabel> labels;
  std::vector<State> table((subsets + 2) * k);
  for (std::size_t q = 0; q < subsets; ++q) {
    const Subalphabet current = bi.subset_of_state(static_cast<State>(q));
    labels.push_back(StateLabel::subset(current));
    for (std::size_t x = 0; x < k; ++x) {
      const auto lx = static_cast<Letter>(x);
      const Subalphabet target = current.with(lx) & g.commuting_set(lx) & bi.eliminated();
      if (bi.eliminated().contains(lx)) {
        table[q * k + x] = bi.subset_state(target);
      } else {
        table[q * k + x] = target.empty() ? f : h;
      }
    }
  }
  labels.push_back(StateLabel::f());
  labels.push_back(StateLabel::h());
  for (std::size_t x = 0; x < k; ++x) {
    table[f * k + x] = h;
    table[h * k + x] = h;
  }
  std::vector<bool> finals(subsets + 2, false);
  finals[f] = true;
  return Dfa(g, std::move(labels), 0, std::move(finals), std::move(table));
}

bool in_left_factor(const Bisection& bi, const Word& w) {
  return !terminal_alphabet(bi.graph(), w).intersects(bi.eliminated());
}

bool in_generating_set(const Bisection& bi, const Word& w, std::size_t bound) {
  if (w.size() > bound) {
    throw OracleBoundExceeded("length " + std::to_string(w.size()) + " exceeds the oracle bound " +
                              std::to_string(bound));
  }
  if (w.empty() || !in_left_factor(bi, w)) return false;
  const CommutationGraph& g = bi.graph();
  for (const Word& rep : representatives(g, w, bound)) {
    Subalphabet prefix_ta;
    for (std::size_t split = 1; split < rep.size(); ++split) {
      const Letter x = rep[split - 1];
      prefix_ta = prefix_ta.with(x) & g.commuting_set(x);
      if (prefix_ta.intersects(bi.eliminated())) continue;
      const Word suffix(rep.begin() + static_cast<std::ptrdiff_t>(split), rep.end());
      if (in_left_factor(bi, suffix)) return false;
    }
  }
  return true;
}

std::pair<Trace, Trace> lazard_factorize(const Bisection& bi, const Word& w) {
  const CommutationGraph& g = bi.graph();
  Word rest = w;
  Word right;
  while (true) {
    const Subalphabet strip = terminal_alphabet(g, rest) & bi.eliminated();
    if (strip.empty()) break;
    // A terminal letter's last occurrence commutes with everything after it.
    const Letter b = strip.letters().front();
    const auto last = std::find(rest.rbegin(), rest.rend(), b);
    rest.erase(std::next(last).base());
    right.insert(right.begin(), b);
  }
  return {Trace(g, rest), Trace(g, right)};
}

std::set<std::pair<Word, Word>> lazard_factorizations_by_search(const Bisection& bi, const Word& w,
                                                                std::size_t bound) {
  const CommutationGraph& g = bi.graph();
  std::set<std::pair<Word, Word>> out;
  for (const Word& rep : representatives(g, w, bound)) {
    for (std::size_t split = 0; split <= rep.size(); ++split) {
      const Word left(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(split));
      const Word right(rep.begin() + static_cast<std::ptrdiff_t>(split), rep.end());
      const bool right_in_b = std::all_of(right.begin(), right.end(),
                                          [&](Letter x) { return bi.eliminated().contains(x); });
      if (right_in_b && in_left_factor(bi, left)) {
        out.emplace(lex_normal_form(g, left), lex_normal_form(g, right));
      }
    }
  }
  return out;
}

}  // namespace traces
