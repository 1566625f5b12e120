#include "traces/series.hpp"

#include <deque>
#include <map>

namespace traces {

CountSeries trace_count_series(const CommutationGraph& g, std::size_t max_length) {
  const auto c = clique_polynomial(g).coefficients;
  std::vector<std::uint64_t> m;
  m.reserve(max_length + 1);
  m.push_back(1);
  for (std::size_t n = 1; n <= max_length; ++n) {
    // Odd-size cliques contribute positively, even-size ones negatively.
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
    for (std::size_t j = 1; j < c.size() && j <= n; ++j) {
      std::uint64_t& side = j % 2 == 1 ? positive : negative;
      side = checked_add(side, checked_mul(c[j], m[n - j]));
    }
    if (negative > positive) throw ConstructionMismatch("negative trace count at length " + std::to_string(n));
    m.push_back(positive - negative);
  }
  return CountSeries(std::move(m));
}

Dfa normal_form_automaton(const CommutationGraph& g) {
  const std::size_t k = g.size();
  std::map<Subalphabet, State> index;
  std::vector<Subalphabet> states;
  std::deque<State> queue;
  auto lookup = [&](Subalphabet s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<State>(states.size()));
    if (fresh) {
      states.push_back(s);
      queue.push_back(it->second);
    }
    return it->second;
  };
  lookup(Subalphabet{});
  std::vector<std::optional<State>> table;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    table.resize(states.size() * k);
    for (std::size_t x = 0; x < k; ++x) {
      const auto lx = static_cast<Letter>(x);
      const Subalphabet forbidden = states[q];
      if (forbidden.contains(lx)) continue;
      const Subalphabet com = g.commuting_set(lx);
      const Subalphabet smaller = Subalphabet::first(x) & com;
      table[q * k + x] = lookup(smaller | (forbidden & com));
    }
  }
  table.resize(states.size() * k);
  std::vector<StateLabel> labels;
  for (Subalphabet s : states) labels.push_back(StateLabel::subset(s));
  std::vector<bool> finals(states.size(), true);
  return Dfa::from_partial(g, std::move(labels), 0, std::move(finals), table);
}

CountSeries convolve(const CountSeries& a, const CountSeries& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<std::uint64_t> out(len, 0);
  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t k = 0; k <= n; ++k) out[n] = checked_add(out[n], checked_mul(a[k], b[n - k]));
  }
  return CountSeries(std::move(out));
}

CountSeries left_factor_counts_by_deconvolution(const Bisection& bi, std::size_t max_length) {
  const CountSeries m = trace_count_series(bi.graph(), max_length);
  const CountSeries mb = trace_count_series(bi.graph().restrict(bi.eliminated()), max_length);
  std::vector<std::uint64_t> l;
  l.reserve(max_length + 1);
  for (std::size_t n = 0; n <= max_length; ++n) {
    std::uint64_t known = 0;
    for (std::size_t k = 0; k < n; ++k) known = checked_add(known, checked_mul(l[k], mb[n - k]));
    if (known > m[n]) {
      throw ConstructionMismatch("deconvolution went negative at length " + std::to_string(n));
    }
    l.push_back(m[n] - known);
  }
  return CountSeries(std::move(l));
}

CountSeries left_factor_counts_by_automaton(const Bisection& bi, std::size_t max_length) {
  return count_by_length(intersect(normal_form_automaton(bi.graph()), left_factor_automaton(bi)),
                         max_length);
}

CountSeries left_factor_count_series(const Bisection& bi, std::size_t max_length) {
  CountSeries by_series = left_factor_counts_by_deconvolution(bi, max_length);
  const CountSeries by_automaton = left_factor_counts_by_automaton(bi, max_length);
  if (!(by_series == by_automaton)) {
    throw ConstructionMismatch("left factor counts disagree: deconvolution " + by_series.to_string() +
                               " vs automaton " + by_automaton.to_string());
  }
  return by_series;
}

std::string BisectionReport::to_string() const {
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  for (const auto& line : counterexamples) out += "counterexample: " + line + '\n';
  return out;
}

BisectionReport verify_bisection(const Bisection& bi, std::size_t max_length, std::size_t bound) {
  const CommutationGraph& g = bi.graph();
  BisectionReport report;
  const CountSeries m = trace_count_series(g, max_length);
  const CountSeries mb = trace_count_series(g.restrict(bi.eliminated()), max_length);
  const CountSeries l = left_factor_counts_by_automaton(bi, max_length);
  const CountSeries l_series = left_factor_counts_by_deconvolution(bi, max_length);
  const CountSeries product = convolve(l, mb);
  report.lines.push_back("m " + m.to_string());
  report.lines.push_back("m_B " + mb.to_string());
  report.lines.push_back("l " + l.to_string());
  if (!(l == l_series)) {
    report.counterexamples.push_back("left factor counts by deconvolution " + l_series.to_string() +
                                     " differ from automaton counts " + l.to_string());
  }

  for (std::size_t n = 0; n <= max_length; ++n) {
    const bool identity = product[n] == m[n];
    report.lines.push_back("identity n=" + std::to_string(n) + " m=" + std::to_string(m[n]) +
                           " l*m_B=" + std::to_string(product[n]) + (identity ? " ok" : " FAIL"));
    if (!identity) {
      report.counterexamples.push_back("bisection identity fails at length " + std::to_string(n));
    }

    const auto traces_n = enumerate_traces(g, n, bound);
    std::size_t unique = 0;
    for (const Trace& t : traces_n) {
      const auto found = lazard_factorizations_by_search(bi, t.normal_form(), bound);
      const auto [u, v] = lazard_factorize(bi, t.normal_form());
      if (found.size() == 1 && found.begin()->first == u.normal_form() &&
          found.begin()->second == v.normal_form()) {
        ++unique;
        continue;
      }
      report.counterexamples.push_back("trace " + t.to_string() + " has " + std::to_string(found.size()) +
                                       " Lazard factorizations; greedy gave (" + u.to_string() + ", " +
                                       v.to_string() + ")");
    }
    report.lines.push_back("factorization n=" + std::to_string(n) + " traces=" + std::to_string(traces_n.size()) +
                           " unique=" + std::to_string(unique) + (unique == traces_n.size() ? " ok" : " FAIL"));
  }
  return report;
}

}  // namespace traces
