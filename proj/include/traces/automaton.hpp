#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "traces/commutation.hpp"
#include "traces/count_series.hpp"
#include "traces/trace.hpp"

namespace traces {

using State = std::uint32_t;

/// Display label of an automaton state.
class StateLabel {
 public:
  enum class Kind { Subset, F, H, Sink, Pair, Named };

  static StateLabel subset(Subalphabet s);
  static StateLabel f() { return StateLabel(Kind::F); }
  static StateLabel h() { return StateLabel(Kind::H); }
  static StateLabel sink() { return StateLabel(Kind::Sink); }
  static StateLabel pair(StateLabel first, StateLabel second);
  static StateLabel named(std::string name);

  Kind kind() const { return kind_; }
  /// Only valid for Kind::Subset.
  Subalphabet subset() const { return subset_; }
  /// Only valid for Kind::Pair.
  const StateLabel& first() const { return pair_->first; }
  const StateLabel& second() const { return pair_->second; }

  std::string to_string(const CommutationGraph& g) const;

  bool operator==(const StateLabel& other) const;

 private:
  explicit StateLabel(Kind kind) : kind_(kind) {}

  Kind kind_;
  Subalphabet subset_;
  std::string name_;
  std::shared_ptr<const std::pair<StateLabel, StateLabel>> pair_;
};

/// Complete deterministic automaton over a commutation graph's alphabet.
///
/// The transition table is row-major: delta(q, x) = table[q * |Σ| + x].
/// Construction validates totality and state indices; values are immutable.
class Dfa {
 public:
  Dfa(CommutationGraph graph, std::vector<StateLabel> labels, State initial,
      std::vector<bool> finals, std::vector<State> table);

  /// Missing transitions (nullopt) are routed to a fresh Sink state, which is
  /// appended only when needed.
  static Dfa from_partial(CommutationGraph graph, std::vector<StateLabel> labels, State initial,
                          std::vector<bool> finals, const std::vector<std::optional<State>>& table);

  const CommutationGraph& graph() const { return graph_; }
  std::size_t num_states() const { return labels_.size(); }
  std::size_t alphabet_size() const { return graph_.size(); }
  State initial() const { return initial_; }
  bool is_final(State q) const { return finals_.at(q); }
  const std::vector<bool>& finals() const { return finals_; }
  const StateLabel& label(State q) const { return labels_.at(q); }
  const std::vector<StateLabel>& labels() const { return labels_; }
  std::span<const State> table() const { return table_; }

  State delta(State q, Letter x) const { return table_[q * alphabet_size() + x]; }

  /// State reached from the initial state. Throws Error on foreign letters.
  State run(const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(w)); }

  /// First state carrying `label`, if any.
  std::optional<State> find_state(const StateLabel& label) const;

 private:
  CommutationGraph graph_;
  std::vector<StateLabel> labels_;
  State initial_;
  std::vector<bool> finals_;
  std::vector<State> table_;
};

/// States reachable from the initial state, in increasing index order.
std::vector<State> reachable_states(const Dfa& d);

/// Reachable part of the synchronized product; states carry Pair labels.
/// Throws Error when the alphabets differ.
Dfa intersect(const Dfa& d1, const Dfa& d2);

Dfa complement(const Dfa& d);

/// Reachable Moore-minimized automaton. Classes are numbered by the smallest
/// original state index they contain and take that state's label.
Dfa minimize(const Dfa& d);

/// Language equality by a synchronized product search for a state pair that
/// disagrees on acceptance. Throws Error when the alphabets differ.
bool equivalent_languages(const Dfa& d1, const Dfa& d2);

/// "Complete squares": delta(delta(q,x),y) == delta(delta(q,y),x) for every
/// reachable q and every commuting pair (x,y) of `g`.
bool is_diamond_closed(const Dfa& d, const CommutationGraph& g);
inline bool is_diamond_closed(const Dfa& d) { return is_diamond_closed(d, d.graph()); }

/// Accepted words per length 0..N (transfer-matrix recurrence).
CountSeries count_by_length(const Dfa& d, std::size_t max_length);

/// Graphviz text. States by index, edge groups by source then by smallest
/// letter, letters comma-joined in canonical order.
std::string to_dot(const Dfa& d, const std::string& name = "automaton");

}  // namespace traces
