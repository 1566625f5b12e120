#pragma once

#include <set>
#include <utility>

#include "traces/automaton.hpp"
#include "traces/commutation.hpp"
#include "traces/trace.hpp"

namespace traces {

/// Elimination of the subalphabet B: M(Σ,ϑ) = L · M(B,ϑ_B), where L holds the
/// traces whose terminal alphabet avoids B. Z = Σ \ B is the kept alphabet.
class Bisection {
 public:
  /// Throws Error unless b is a subalphabet of g.
  Bisection(CommutationGraph g, Subalphabet b);

  const CommutationGraph& graph() const { return graph_; }
  /// B.
  Subalphabet eliminated() const { return eliminated_; }
  /// Z = Σ \ B.
  Subalphabet kept() const { return graph_.all() - eliminated_; }

  /// Index of a subset of B among the states of the subset automata: bit j of
  /// the index selects the j-th letter of B in canonical order.
  State subset_state(Subalphabet s) const;
  Subalphabet subset_of_state(State q) const;
  std::size_t subset_count() const { return std::size_t{1} << eliminated_.size(); }

 private:
  CommutationGraph graph_;
  Subalphabet eliminated_;
  std::vector<Letter> members_;
};

/// Two-state automaton for TN_b, the words whose trace does not end with b.
/// State 0 (∅, initial and final) loops on Σ\{b} and moves to state 1 ({b})
/// on b; state 1 loops on Com(b) and returns on Σ\Com(b).
Dfa tn_automaton(const CommutationGraph& g, Letter b);
inline Dfa tn_automaton(const Bisection& bi, Letter b) { return tn_automaton(bi.graph(), b); }

/// Subset automaton for Rep(L): states are the subsets of B, ∅ is initial and
/// the only final state, delta(B', x) = (B' ∪ {x}) ∩ Com(x) ∩ B. The state
/// after reading w is TA(w) ∩ B.
Dfa left_factor_automaton(const Bisection& bi);

/// minimize(∩_{b ∈ B} TN_b); the one-state universal automaton when B = ∅.
Dfa left_factor_by_intersection(const Bisection& bi);

/// Automaton for Rep(G(L)), the minimal generating set of L.
///
/// Subsets of B, then F, then H. B-letters move between subsets as in the
/// left-factor automaton. A Z-letter leads to F when the left-factor target
/// is ∅ and to H otherwise; this includes the state ∅, so every single letter
/// of Z is accepted. F and H go to H on every letter. F is the only final state.
Dfa generating_set_automaton(const Bisection& bi);

/// TA(w) ∩ B = ∅, decided without any automaton.
bool in_left_factor(const Bisection& bi, const Word& w);

/// Brute force: the trace of w is a nonempty element of L and no representative
/// splits into two nonempty words whose traces both lie in L.
bool in_generating_set(const Bisection& bi, const Word& w, std::size_t bound = kDefaultOracleBound);

/// The unique (u, v) with u·v = [w], u ∈ L and v ∈ M(B,ϑ_B), by stripping
/// terminal letters of B from the right.
std::pair<Trace, Trace> lazard_factorize(const Bisection& bi, const Word& w);

/// Every (u, v) obtained by splitting some representative of w with u ∈ L and
/// v ∈ B*, as normal forms. Exhaustive, for checking uniqueness.
std::set<std::pair<Word, Word>> lazard_factorizations_by_search(const Bisection& bi, const Word& w,
                                                                std::size_t bound = kDefaultOracleBound);

}  // namespace traces
