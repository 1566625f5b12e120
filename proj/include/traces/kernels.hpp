#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "traces/automaton.hpp"
#include "traces/count_series.hpp"
#include "traces/trace.hpp"

// Data-parallel kernels. Each kernel has an OpenMP version used by the library
// and a serial reference kept for testing and benchmarking.
namespace traces::kernels {

/// Outcome of checking a predicate on every word of length 0..max_length.
struct SweepResult {
  std::uint64_t words_checked = 0;
  std::uint64_t violations = 0;
  /// Shortest, then lexicographically least, word failing the predicate.
  std::optional<Word> first_violation;

  bool operator==(const SweepResult&) const = default;
};

/// Must be safe to call concurrently.
using WordPredicate = std::function<bool(const Word&)>;

/// The index-th word of length `length` in lexicographic order.
Word decode_word(std::uint64_t index, std::size_t alphabet_size, std::size_t length);

namespace serial {

/// Forward recurrence: counts of words reaching each state, from the initial state.
CountSeries count_by_length(const Dfa& d, std::size_t max_length);

SweepResult sweep_words(std::size_t alphabet_size, std::size_t max_length, const WordPredicate& holds);

}  // namespace serial

namespace omp {

/// Backward recurrence: accepted words from each state, one parallel pass per length.
CountSeries count_by_length(const Dfa& d, std::size_t max_length);

SweepResult sweep_words(std::size_t alphabet_size, std::size_t max_length, const WordPredicate& holds);

}  // namespace omp

}  // namespace traces::kernels
