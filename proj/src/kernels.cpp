#include "traces/kernels.hpp"

#include <atomic>
#include <exception>
#include <limits>

namespace traces::kernels {

namespace {

std::uint64_t words_of_length(std::size_t alphabet_size, std::size_t length) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total = checked_mul(total, alphabet_size);
  return total;
}

// Parallel loops below this many iterations run on one thread.
constexpr std::int64_t kParallelThreshold = 4096;

}  // namespace

Word decode_word(std::uint64_t index, std::size_t alphabet_size, std::size_t length) {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Letter>(index % alphabet_size);
    index /= alphabet_size;
  }
  return w;
}

namespace serial {

CountSeries count_by_length(const Dfa& d, std::size_t max_length) {
  const std::size_t n = d.num_states();
  std::vector<std::uint64_t> reach(n, 0);
  reach[d.initial()] = 1;
  std::vector<std::uint64_t> out;
  out.reserve(max_length + 1);
  for (std::size_t len = 0;; ++len) {
    std::uint64_t accepted = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (d.is_final(static_cast<State>(q))) accepted = checked_add(accepted, reach[q]);
    }
    out.push_back(accepted);
    if (len == max_length) break;
    std::vector<std::uint64_t> next(n, 0);
    for (std::size_t q = 0; q < n; ++q) {
      if (reach[q] == 0) continue;
      for (std::size_t x = 0; x < d.alphabet_size(); ++x) {
        const State r = d.delta(static_cast<State>(q), static_cast<Letter>(x));
        next[r] = checked_add(next[r], reach[q]);
      }
    }
    reach = std::move(next);
  }
  return CountSeries(std::move(out));
}

SweepResult sweep_words(std::size_t alphabet_size, std::size_t max_length, const WordPredicate& holds) {
  SweepResult result;
  for (std::size_t len = 0; len <= max_length; ++len) {
    const std::uint64_t total = words_of_length(alphabet_size, len);
    for (std::uint64_t i = 0; i < total; ++i) {
      Word w = decode_word(i, alphabet_size, len);
      ++result.words_checked;
      if (!holds(w)) {
        ++result.violations;
        if (!result.first_violation) result.first_violation = std::move(w);
      }
    }
    if (alphabet_size == 0) break;
  }
  return result;
}

}  // namespace serial

namespace omp {

CountSeries count_by_length(const Dfa& d, std::size_t max_length) {
  const auto n = static_cast<std::int64_t>(d.num_states());
  const std::size_t k = d.alphabet_size();
  std::vector<std::uint64_t> from(static_cast<std::size_t>(n));
  for (std::int64_t q = 0; q < n; ++q) from[q] = d.is_final(static_cast<State>(q)) ? 1 : 0;
  std::vector<std::uint64_t> out{from[d.initial()]};
  out.reserve(max_length + 1);
  std::vector<std::uint64_t> next(from.size());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static) if (n * static_cast<std::int64_t>(k) >= kParallelThreshold)
    for (std::int64_t q = 0; q < n; ++q) {
      std::uint64_t sum = 0;
      for (std::size_t x = 0; x < k; ++x) {
        if (__builtin_add_overflow(sum, from[d.delta(static_cast<State>(q), static_cast<Letter>(x))], &sum)) {
          overflow.store(true, std::memory_order_relaxed);
        }
      }
      next[q] = sum;
    }
    if (overflow.load()) throw ArithmeticOverflow("count overflow in addition");
    std::swap(from, next);
    out.push_back(from[d.initial()]);
  }
  return CountSeries(std::move(out));
}

SweepResult sweep_words(std::size_t alphabet_size, std::size_t max_length, const WordPredicate& holds) {
  SweepResult result;
  for (std::size_t len = 0; len <= max_length; ++len) {
    const std::uint64_t total = words_of_length(alphabet_size, len);
    if (total > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ArithmeticOverflow("sweep too large");
    }
    const auto count = static_cast<std::int64_t>(total);
    std::uint64_t violations = 0;
    std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
    std::exception_ptr failure;
#pragma omp parallel if (count >= kParallelThreshold)
    {
      std::uint64_t local_first = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(dynamic, 256) reduction(+ : violations)
      for (std::int64_t i = 0; i < count; ++i) {
        try {
          if (!holds(decode_word(static_cast<std::uint64_t>(i), alphabet_size, len))) {
            ++violations;
            local_first = std::min(local_first, static_cast<std::uint64_t>(i));
          }
        } catch (...) {
#pragma omp critical(traces_sweep_failure)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(traces_sweep_first)
      first = std::min(first, local_first);
    }
    if (failure) std::rethrow_exception(failure);
    result.words_checked += total;
    result.violations += violations;
    if (!result.first_violation && violations > 0) {
      result.first_violation = decode_word(first, alphabet_size, len);
    }
    if (alphabet_size == 0) break;
  }
  return result;
}

}  // namespace omp

}  // namespace traces::kernels
