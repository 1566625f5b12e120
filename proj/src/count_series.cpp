#include "traces/count_series.hpp"

namespace traces {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("count overflow in addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("count overflow in multiplication");
  return r;
}

std::string CountSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(counts_[i]);
  }
  return out;
}

}  // namespace traces
