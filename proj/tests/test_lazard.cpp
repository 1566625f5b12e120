#include <doctest.h>

#include "test_support.hpp"
#include "traces/lazard.hpp"

using namespace traces;
using traces::testing::ex1;
using traces::testing::word;

namespace {

Bisection ex1_ab() {
  const auto g = ex1();
  return Bisection(g, g.parse_subalphabet("a,b"));
}

State subset(const Bisection& bi, const char* letters) {
  return bi.subset_state(bi.graph().parse_subalphabet(letters));
}

// G(L) membership straight from the definition: nonempty, in L, and no
// product u·v of nonempty L-traces equals it. Splits are searched over the
// swap class rather than over a representatives() call.
bool in_code_oracle(const Bisection& bi, const Word& w) {
  const auto& g = bi.graph();
  auto in_l = [&](const Word& u) {
    return !traces::testing::terminal_by_class(g, u).intersects(bi.eliminated());
  };
  if (w.empty() || !in_l(w)) return false;
  for (const Word& r : traces::testing::swap_class(g, w)) {
    for (std::size_t i = 1; i < r.size(); ++i) {
      if (in_l(Word(r.begin(), r.begin() + i)) && in_l(Word(r.begin() + i, r.end()))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Bisection validates and indexes subsets") {
  const auto g = ex1();
  CHECK_THROWS_AS(Bisection(g, Subalphabet{0b100000}), Error);
  const Bisection bi = ex1_ab();
  CHECK(bi.kept() == g.parse_subalphabet("c,d,e"));
  CHECK(bi.subset_count() == 4);
  for (State q = 0; q < 4; ++q) CHECK(bi.subset_state(bi.subset_of_state(q)) == q);
  CHECK(subset(bi, "b") == 2);
  CHECK_THROWS_AS(bi.subset_state(g.parse_subalphabet("c")), Error);
}

TEST_CASE("tn_automaton") {
  const auto g = ex1();
  const Dfa tb = tn_automaton(g, g.index("b"));
  CHECK(tb.num_states() == 2);
  for (const char* x : {"c", "d", "e"}) CHECK(tb.delta(1, g.index(x)) == 0);
  for (const char* x : {"a", "b"}) CHECK(tb.delta(1, g.index(x)) == 1);
  for (const char* x : {"a", "c", "d", "e"}) CHECK(tb.delta(0, g.index(x)) == 0);

  const Dfa ta = tn_automaton(g, g.index("a"));
  CHECK(ta.run(word(g, "ab")) == 1);
  CHECK_FALSE(ta.accepts(word(g, "ab")));
  CHECK_THROWS_AS(tn_automaton(g, 9), Error);

  // A letter commuting with everything stays terminal once read.
  const auto star = CommutationGraph::build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  const Dfa t = tn_automaton(star, 0);
  for (Letter x = 0; x < 3; ++x) CHECK(t.delta(1, x) == 1);
  CHECK(count_by_length(t, 4) == CountSeries({1, 2, 4, 8, 16}));
}

TEST_CASE("left_factor_automaton on ex1") {
  const Bisection bi = ex1_ab();
  const auto& g = bi.graph();
  const Dfa d = left_factor_automaton(bi);
  CHECK(d.num_states() == 4);
  CHECK(d.initial() == subset(bi, ""));
  CHECK(d.finals() == std::vector<bool>{true, false, false, false});
  for (const char* x : {"c", "d", "e"}) CHECK(d.delta(subset(bi, "b"), g.index(x)) == subset(bi, ""));
  CHECK(d.delta(subset(bi, "a,b"), g.index("c")) == subset(bi, "a"));
  CHECK(d.delta(subset(bi, "a,b"), g.index("d")) == subset(bi, "a"));

  const Dfa all = left_factor_automaton(Bisection(g, Subalphabet{}));
  CHECK(all.num_states() == 1);
  CHECK(count_by_length(all, 3) == CountSeries({1, 5, 25, 125}));
}

TEST_CASE("left_factor_by_intersection") {
  const Bisection bi = ex1_ab();
  const auto& g = bi.graph();
  CHECK(equivalent_languages(left_factor_by_intersection(bi), left_factor_automaton(bi)));
  const Bisection single(g, g.parse_subalphabet("d"));
  CHECK(equivalent_languages(left_factor_by_intersection(single), tn_automaton(g, g.index("d"))));
  const Dfa none = left_factor_by_intersection(Bisection(g, Subalphabet{}));
  CHECK(none.num_states() == 1);
  CHECK(none.is_final(0));
}

TEST_CASE("generating_set_automaton on ex1") {
  const Bisection bi = ex1_ab();
  const auto& g = bi.graph();
  const Dfa d = generating_set_automaton(bi);
  CHECK(d.num_states() == 6);
  const State f = *d.find_state(StateLabel::f());
  const State h = *d.find_state(StateLabel::h());
  CHECK(d.finals()[f]);
  CHECK(std::count(d.finals().begin(), d.finals().end(), true) == 1);
  CHECK(d.initial() == subset(bi, ""));

  CHECK(d.delta(subset(bi, "a"), g.index("e")) == f);
  CHECK(d.delta(subset(bi, "a"), g.index("c")) == h);
  CHECK(d.delta(subset(bi, "a"), g.index("d")) == h);
  for (const char* z : {"c", "d", "e"}) CHECK(d.delta(subset(bi, ""), g.index(z)) == f);
  // The formal definition, not the drawing: {b} reaches F on every kept letter.
  for (const char* z : {"c", "d", "e"}) CHECK(d.delta(subset(bi, "b"), g.index(z)) == f);
  for (Letter x = 0; x < 5; ++x) {
    CHECK(d.delta(f, x) == h);
    CHECK(d.delta(h, x) == h);
  }
  CHECK(d.accepts(word(g, "bc")));
  CHECK(in_generating_set(bi, word(g, "bc")));
}

TEST_CASE("membership oracles") {
  const Bisection bi = ex1_ab();
  const auto& g = bi.graph();
  CHECK(in_left_factor(bi, word(g, "abe")));
  CHECK(in_left_factor(bi, Word{}));
  CHECK_FALSE(in_left_factor(bi, word(g, "ab")));

  CHECK_FALSE(in_generating_set(bi, word(g, "cd")));
  CHECK(in_generating_set(bi, word(g, "abe")));
  CHECK_FALSE(in_generating_set(bi, Word{}));
  for (const char* z : {"c", "d", "e"}) CHECK(in_generating_set(bi, word(g, z)));
  for (const char* b : {"a", "b"}) CHECK_FALSE(in_generating_set(bi, word(g, b)));
  CHECK_THROWS_AS(in_generating_set(bi, Word(13, 2)), OracleBoundExceeded);
}

TEST_CASE("lazard_factorize") {
  const Bisection bi = ex1_ab();
  const auto& g = bi.graph();
  auto check = [&](const char* w, const char* u, const char* v) {
    const auto [left, right] = lazard_factorize(bi, word(g, w));
    CHECK(left.normal_form() == lex_normal_form(g, word(g, u)));
    CHECK(right.normal_form() == lex_normal_form(g, word(g, v)));
  };
  check("ab", "", "ab");
  check("abe", "abe", "");
  check("cab", "c", "ab");
  CHECK(lazard_factorizations_by_search(bi, word(g, "cab")).size() == 1);
}

TEST_CASE("constructions agree with the oracles on random graphs") {
  auto graphs = traces::testing::random_graphs(10, 4, 77);
  graphs.push_back(ex1());
  for (const auto& g : graphs) {
    for (Subalphabet b : traces::testing::all_subsets(g)) {
      const Bisection bi(g, b);
      const Dfa left = left_factor_automaton(bi);
      const Dfa gen = generating_set_automaton(bi);
      CHECK(is_diamond_closed(left));
      CHECK(is_diamond_closed(gen));
      for (std::size_t n = 0; n <= (g.size() > 4 ? 4 : 5); ++n) {
        for (const Word& w : traces::testing::all_words(g.size(), n)) {
          const Subalphabet ta = traces::testing::terminal_by_class(g, w);
          CHECK(left.label(left.run(w)) == StateLabel::subset(ta & b));
          CHECK(in_left_factor(bi, w) == !ta.intersects(b));
          const bool code = in_code_oracle(bi, w);
          CHECK(in_generating_set(bi, w) == code);
          CHECK(gen.accepts(w) == code);
        }
      }
    }
  }
}
