#include "traces/commutation.hpp"

#include <algorithm>
#include <unordered_set>

namespace traces {

std::vector<Letter> Subalphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<Letter>(std::countr_zero(rest)));
  }
  return out;
}

CommutationGraph CommutationGraph::build(std::vector<std::string> letters,
                                         const std::vector<Pair>& commuting_pairs) {
  if (letters.size() > kMaxLetters) {
    throw Error("alphabet has " + std::to_string(letters.size()) + " letters; at most " +
                std::to_string(kMaxLetters) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : letters) {
    if (name.empty()) throw Error("empty letter name");
    if (!seen.insert(name).second) throw Error("duplicate letter name '" + name + "'");
  }

  auto data = std::make_shared<Data>();
  data->names = std::move(letters);
  data->com.resize(data->names.size());
  for (std::size_t i = 0; i < data->names.size(); ++i) {
    data->com[i] = Subalphabet::single(static_cast<Letter>(i));
  }
  CommutationGraph g{data};
  for (const auto& [x, y] : commuting_pairs) {
    const Letter i = g.index(x);
    const Letter j = g.index(y);
    data->com[i] = data->com[i].with(j);
    data->com[j] = data->com[j].with(i);
  }
  return g;
}

std::optional<Letter> CommutationGraph::find(std::string_view name) const {
  const auto& names = data_->names;
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Letter>(it - names.begin());
}

Letter CommutationGraph::index(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error("unknown letter '" + std::string(name) + "'");
}

Subalphabet CommutationGraph::parse_subalphabet(std::string_view text) const {
  Subalphabet out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out = out.with(index(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string CommutationGraph::format(Subalphabet s) const {
  if (s.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (Letter x : s.letters()) {
    if (!first) out += ',';
    out += name(x);
    first = false;
  }
  out += '}';
  return out;
}

CommutationGraph CommutationGraph::restrict(Subalphabet b) const {
  if (!b.subset_of(all())) throw Error("restrict: subalphabet is not contained in the alphabet");
  if (b == all()) return *this;
  const auto members = b.letters();
  auto data = std::make_shared<Data>();
  for (Letter x : members) data->names.push_back(name(x));
  data->com.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (commutes(members[i], members[j])) {
        data->com[i] = data->com[i].with(static_cast<Letter>(j));
      }
    }
  }
  return CommutationGraph{data};
}

bool CommutationGraph::operator==(const CommutationGraph& other) const {
  if (data_ == other.data_) return true;
  return data_->names == other.data_->names && data_->com == other.data_->com;
}

namespace {

// Every candidate is larger than the members of `current` and commutes with all of them.
void extend_cliques(const CommutationGraph& g, Subalphabet current, Subalphabet candidates,
                    std::vector<Clique>& out) {
  out.push_back(Clique{current});
  for (Letter x : candidates.letters()) {
    const Subalphabet later{candidates.bits() & ~((std::uint64_t{2} << x) - 1)};
    extend_cliques(g, current.with(x), later & g.commuting_set(x), out);
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const CommutationGraph& g) {
  std::vector<Clique> out;
  extend_cliques(g, Subalphabet{}, g.all(), out);
  return out;
}

CliquePolynomial clique_polynomial(const CommutationGraph& g) {
  CliquePolynomial p;
  for (const Clique& c : enumerate_cliques(g)) {
    const std::size_t j = c.members.size();
    if (p.coefficients.size() <= j) p.coefficients.resize(j + 1, 0);
    ++p.coefficients[j];
  }
  return p;
}

}  // namespace traces
