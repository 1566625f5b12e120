#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "traces/commutation.hpp"

namespace traces {

/// A finite letter sequence over some graph's alphabet.
using Word = std::vector<Letter>;

/// Default length limit of the brute-force routines (representatives and the
/// exhaustive enumerations built on them). Swap-closure classes grow
/// factorially, so callers must opt in to anything larger.
inline constexpr std::size_t kDefaultOracleBound = 12;

class OracleBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Words are written as concatenated letter names when every name is a single
/// character, and comma-separated otherwise. The empty text is the empty word.
Word parse_word(const CommutationGraph& g, std::string_view text);
std::string format_word(const CommutationGraph& g, const Word& w);

/// TA(w) by the recurrence TA(ε) = ∅, TA(ux) = (TA(u) ∪ {x}) ∩ Com(x).
Subalphabet terminal_alphabet(const CommutationGraph& g, const Word& w);

/// Lexicographically least representative of the trace of w.
Word lex_normal_form(const CommutationGraph& g, const Word& w);

bool equivalent(const CommutationGraph& g, const Word& w1, const Word& w2);

/// The whole equivalence class of w, closed under adjacent commuting swaps.
std::set<Word> representatives(const CommutationGraph& g, const Word& w,
                               std::size_t bound = kDefaultOracleBound);

/// An element of the trace monoid, held as its lexicographic normal form.
class Trace {
 public:
  Trace(CommutationGraph g, const Word& w);
  /// The empty trace.
  static Trace identity(CommutationGraph g) { return Trace(std::move(g), Word{}); }

  const CommutationGraph& graph() const { return graph_; }
  const Word& normal_form() const { return normal_form_; }
  std::size_t length() const { return normal_form_.size(); }
  bool empty() const { return normal_form_.empty(); }
  std::string to_string() const { return format_word(graph_, normal_form_); }

  bool operator==(const Trace& other) const {
    return normal_form_ == other.normal_form_ && graph_ == other.graph_;
  }
  /// Orders by normal form; only meaningful within one graph.
  bool operator<(const Trace& other) const { return normal_form_ < other.normal_form_; }

 private:
  CommutationGraph graph_;
  Word normal_form_;
};

/// Monoid product. Throws Error when the traces live on different graphs.
Trace concat(const Trace& t1, const Trace& t2);

/// One trace per class of length n, ordered by normal form.
std::vector<Trace> enumerate_traces(const CommutationGraph& g, std::size_t n,
                                    std::size_t bound = kDefaultOracleBound);

}  // namespace traces
