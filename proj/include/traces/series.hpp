#pragma once

#include <string>
#include <vector>

#include "traces/automaton.hpp"
#include "traces/commutation.hpp"
#include "traces/count_series.hpp"
#include "traces/lazard.hpp"

namespace traces {

/// Raised when two independent counting routes disagree.
class ConstructionMismatch : public Error {
 public:
  using Error::Error;
};

/// Number of traces of each length, from the reciprocal of the clique
/// polynomial: sum_j (-1)^j c_j m(n-j) = [n = 0].
CountSeries trace_count_series(const CommutationGraph& g, std::size_t max_length);

/// Accepts exactly the lexicographic normal forms. A state is the set of
/// letters that may not come next; reading x forbids the smaller letters that
/// commute with x and keeps the forbidden letters that commute with x.
/// The Sink state is the last one.
Dfa normal_form_automaton(const CommutationGraph& g);

/// l(n) = m(n) - sum_{k<n} l(k) m_B(n-k).
CountSeries left_factor_counts_by_deconvolution(const Bisection& bi, std::size_t max_length);
/// Words accepted by both the normal-form automaton and the left-factor automaton.
CountSeries left_factor_counts_by_automaton(const Bisection& bi, std::size_t max_length);
/// Traces of L by length; throws ConstructionMismatch unless both routes agree.
CountSeries left_factor_count_series(const Bisection& bi, std::size_t max_length);

/// Exact convolution (a * b)(n) for n up to the shorter length.
CountSeries convolve(const CountSeries& a, const CountSeries& b);

struct BisectionReport {
  std::vector<std::string> lines;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  /// Report lines, then one "counterexample: ..." line per failure.
  std::string to_string() const;
};

/// Checks m = l * m_B for every length up to max_length (l taken from the
/// automaton route) and that every trace of those lengths has exactly one
/// Lazard factorization, agreeing with lazard_factorize.
BisectionReport verify_bisection(const Bisection& bi, std::size_t max_length,
                                 std::size_t bound = kDefaultOracleBound);

}  // namespace traces
