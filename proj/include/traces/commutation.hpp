#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace traces {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index of a letter in its graph's canonical order.
using Letter = std::uint8_t;

/// Largest alphabet a CommutationGraph accepts; subalphabets are bit masks.
inline constexpr std::size_t kMaxLetters = 64;

/// A set of letters, stored as a bit mask over canonical letter indices.
class Subalphabet {
 public:
  constexpr Subalphabet() = default;
  constexpr explicit Subalphabet(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subalphabet single(Letter x) { return Subalphabet{std::uint64_t{1} << x}; }
  /// The letters 0..n-1.
  static constexpr Subalphabet first(std::size_t n) {
    return Subalphabet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Letter x) const { return (bits_ >> x) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(Subalphabet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subalphabet other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subalphabet with(Letter x) const { return Subalphabet{bits_ | (std::uint64_t{1} << x)}; }
  constexpr Subalphabet without(Letter x) const { return Subalphabet{bits_ & ~(std::uint64_t{1} << x)}; }

  constexpr Subalphabet operator|(Subalphabet o) const { return Subalphabet{bits_ | o.bits_}; }
  constexpr Subalphabet operator&(Subalphabet o) const { return Subalphabet{bits_ & o.bits_}; }
  constexpr Subalphabet operator-(Subalphabet o) const { return Subalphabet{bits_ & ~o.bits_}; }
  constexpr bool operator==(const Subalphabet&) const = default;
  constexpr auto operator<=>(const Subalphabet&) const = default;

  /// Members in increasing letter order.
  std::vector<Letter> letters() const;

 private:
  std::uint64_t bits_ = 0;
};

/// A subalphabet whose members pairwise commute.
struct Clique {
  Subalphabet members;
  bool operator==(const Clique&) const = default;
};

/// c[j] = number of cliques with j letters. The signed polynomial is
/// sum_j (-1)^j c[j] t^j.
struct CliquePolynomial {
  std::vector<std::uint64_t> coefficients;
  bool operator==(const CliquePolynomial&) const = default;
};

/// Alphabet Sigma together with a reflexive, symmetric commutation relation.
///
/// The declared letter order is the canonical total order used by normal forms
/// and every other ordering decision. Copies share the immutable data.
class CommutationGraph {
 public:
  using Pair = std::pair<std::string, std::string>;

  /// Builds the reflexive-symmetric closure of `commuting_pairs`.
  /// Throws Error on duplicate or unknown letter names, empty names,
  /// or more than kMaxLetters letters.
  static CommutationGraph build(std::vector<std::string> letters,
                                const std::vector<Pair>& commuting_pairs);

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(Letter x) const { return data_->names.at(x); }
  std::optional<Letter> find(std::string_view name) const;
  /// Like find(), but throws Error for unknown names.
  Letter index(std::string_view name) const;

  Subalphabet all() const { return Subalphabet::first(size()); }
  bool commutes(Letter x, Letter y) const { return data_->com[x].contains(y); }
  /// Com(x); always contains x.
  Subalphabet commuting_set(Letter x) const { return data_->com.at(x); }
  Subalphabet commuting_set(std::string_view name) const { return commuting_set(index(name)); }

  /// Parses a comma-separated list of letter names; the empty string is the
  /// empty subalphabet.
  Subalphabet parse_subalphabet(std::string_view text) const;
  /// "{a,b}" in canonical order, or "∅".
  std::string format(Subalphabet s) const;

  /// The induced graph on `b`, inheriting the letter order.
  CommutationGraph restrict(Subalphabet b) const;

  bool operator==(const CommutationGraph& other) const;

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<Subalphabet> com;
  };
  explicit CommutationGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// All cliques including the empty one, by recursive extension in letter order.
std::vector<Clique> enumerate_cliques(const CommutationGraph& g);

CliquePolynomial clique_polynomial(const CommutationGraph& g);

}  // namespace traces
