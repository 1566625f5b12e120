#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traces/commutation.hpp"

namespace traces {

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Number of elements of a language per length 0..N.
class CountSeries {
 public:
  CountSeries() = default;
  explicit CountSeries(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  /// Largest length covered.
  std::size_t max_length() const { return counts_.empty() ? 0 : counts_.size() - 1; }
  std::uint64_t operator[](std::size_t n) const { return counts_.at(n); }
  const std::vector<std::uint64_t>& values() const { return counts_; }

  /// Space-separated entries, e.g. "1 5 20".
  std::string to_string() const;

  bool operator==(const CountSeries&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

}  // namespace traces
