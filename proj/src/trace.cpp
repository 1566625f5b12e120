#include "traces/trace.hpp"

#include <algorithm>
#include <deque>

namespace traces {

namespace {

bool single_character_names(const CommutationGraph& g) {
  return std::all_of(g.names().begin(), g.names().end(),
                     [](const std::string& n) { return n.size() == 1; });
}

void check_bound(std::size_t length, std::size_t bound) {
  if (length > bound) {
    throw OracleBoundExceeded("length " + std::to_string(length) + " exceeds the oracle bound " +
                              std::to_string(bound));
  }
}

}  // namespace

Word parse_word(const CommutationGraph& g, std::string_view text) {
  Word w;
  if (text.empty()) return w;
  if (single_character_names(g)) {
    for (char c : text) w.push_back(g.index(std::string_view(&c, 1)));
    return w;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    w.push_back(g.index(text.substr(start, comma == text.npos ? text.npos : comma - start)));
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return w;
}

std::string format_word(const CommutationGraph& g, const Word& w) {
  const bool compact = single_character_names(g);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += g.name(w[i]);
  }
  return out;
}

Subalphabet terminal_alphabet(const CommutationGraph& g, const Word& w) {
  Subalphabet ta;
  for (Letter x : w) ta = ta.with(x) & g.commuting_set(x);
  return ta;
}

Word lex_normal_form(const CommutationGraph& g, const Word& w) {
  Word rest = w;
  Word out;
  out.reserve(w.size());
  while (!rest.empty()) {
    // A first occurrence can move to the front iff everything before it commutes with it.
    Subalphabet seen;
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const Letter x = rest[i];
      if (!seen.contains(x) && seen.subset_of(g.commuting_set(x)) &&
          (best == rest.size() || x < rest[best])) {
        best = i;
      }
      seen = seen.with(x);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool equivalent(const CommutationGraph& g, const Word& w1, const Word& w2) {
  return w1.size() == w2.size() && lex_normal_form(g, w1) == lex_normal_form(g, w2);
}

std::set<Word> representatives(const CommutationGraph& g, const Word& w, std::size_t bound) {
  check_bound(w.size(), bound);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] == u[i + 1] || !g.commutes(u[i], u[i + 1])) continue;
      std::swap(u[i], u[i + 1]);
      if (seen.insert(u).second) queue.push_back(u);
      std::swap(u[i], u[i + 1]);
    }
  }
  return seen;
}

namespace {

Word checked_normal_form(const CommutationGraph& g, const Word& w) {
  for (Letter x : w) {
    if (x >= g.size()) throw Error("word contains a letter outside the alphabet");
  }
  return lex_normal_form(g, w);
}

}  // namespace

Trace::Trace(CommutationGraph g, const Word& w)
    : graph_(std::move(g)), normal_form_(checked_normal_form(graph_, w)) {}

Trace concat(const Trace& t1, const Trace& t2) {
  if (!(t1.graph() == t2.graph())) throw Error("concat: traces belong to different graphs");
  Word w = t1.normal_form();
  w.insert(w.end(), t2.normal_form().begin(), t2.normal_form().end());
  return Trace(t1.graph(), w);
}

std::vector<Trace> enumerate_traces(const CommutationGraph& g, std::size_t n, std::size_t bound) {
  check_bound(n, bound);
  // Every trace of length k+1 is t·x for a trace t of length k.
  std::set<Word> layer{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<Word> next;
    for (const Word& t : layer) {
      Word w = t;
      w.push_back(0);
      for (std::size_t x = 0; x < g.size(); ++x) {
        w.back() = static_cast<Letter>(x);
        next.insert(lex_normal_form(g, w));
      }
    }
    layer = std::move(next);
  }
  std::vector<Trace> out;
  out.reserve(layer.size());
  for (const Word& w : layer) out.emplace_back(g, w);
  return out;
}

}  // namespace traces
