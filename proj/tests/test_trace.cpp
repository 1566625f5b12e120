#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "traces/trace.hpp"

using namespace traces;
using traces::testing::ex1;
using traces::testing::word;

TEST_CASE("words parse and print") {
  const auto g = ex1();
  CHECK(format_word(g, word(g, "bdc")) == "bdc");
  CHECK(word(g, "").empty());
  CHECK_THROWS_AS(word(g, "abz"), Error);

  const auto long_names = CommutationGraph::build({"x1", "x2"}, {{"x1", "x2"}});
  const Word w = parse_word(long_names, "x2,x1,x1");
  CHECK(w == Word{1, 0, 0});
  CHECK(format_word(long_names, w) == "x2,x1,x1");
}

TEST_CASE("terminal_alphabet") {
  const auto g = ex1();
  CHECK(terminal_alphabet(g, word(g, "bdc")) == g.parse_subalphabet("c,d"));
  CHECK(terminal_alphabet(g, word(g, "ab")) == g.parse_subalphabet("a,b"));
  CHECK(terminal_alphabet(g, word(g, "abe")) == g.parse_subalphabet("e"));
  CHECK(terminal_alphabet(g, Word{}).empty());
  for (std::size_t x = 0; x < g.size(); ++x) {
    CHECK(terminal_alphabet(g, Word{static_cast<Letter>(x)}) == Subalphabet::single(static_cast<Letter>(x)));
  }
}

TEST_CASE("lex_normal_form") {
  const auto two = traces::testing::two_commuting();
  CHECK(lex_normal_form(two, word(two, "ba")) == word(two, "ab"));
  const auto g = ex1();
  CHECK(lex_normal_form(g, word(g, "ced")) == word(g, "cde"));
  CHECK(lex_normal_form(g, word(g, "cde")) == word(g, "cde"));
  CHECK(lex_normal_form(g, word(g, "bdc")) == word(g, "bcd"));
}

TEST_CASE("equivalent") {
  const auto two = traces::testing::two_commuting();
  CHECK(equivalent(two, word(two, "ab"), word(two, "ba")));
  const auto free = traces::testing::two_free();
  CHECK_FALSE(equivalent(free, word(free, "ab"), word(free, "ba")));
  const auto g = ex1();
  CHECK(equivalent(g, word(g, "bdc"), word(g, "bcd")));
  CHECK_FALSE(equivalent(g, word(g, "bdc"), word(g, "bc")));
}

TEST_CASE("representatives") {
  const auto two = traces::testing::two_commuting();
  CHECK(representatives(two, word(two, "ab")) == std::set<Word>{word(two, "ab"), word(two, "ba")});
  const auto free = traces::testing::two_free();
  CHECK(representatives(free, word(free, "abba")).size() == 1);
  const auto g = ex1();
  CHECK(representatives(g, word(g, "adc")).size() == 6);
  CHECK_THROWS_AS(representatives(g, Word(13, 0)), OracleBoundExceeded);
  CHECK(representatives(g, Word(13, 0), 13).size() == 1);
}

TEST_CASE("concat") {
  const auto g = ex1();
  const Trace eps = Trace::identity(g);
  const Trace bd(g, word(g, "bd"));
  CHECK(concat(eps, bd) == bd);
  CHECK(concat(bd, eps) == bd);
  CHECK(concat(bd, Trace(g, word(g, "c"))).normal_form() == word(g, "bcd"));

  const auto two = traces::testing::two_commuting();
  CHECK(concat(Trace(two, word(two, "b")), Trace(two, word(two, "a"))) == Trace(two, word(two, "ab")));
  CHECK_THROWS_AS(concat(bd, Trace(two, word(two, "a"))), Error);
}

TEST_CASE("enumerate_traces") {
  const auto g = ex1();
  CHECK(enumerate_traces(g, 0).size() == 1);
  CHECK(enumerate_traces(g, 1).size() == 5);
  const auto twos = enumerate_traces(g, 2);
  CHECK(twos.size() == 20);
  CHECK(std::is_sorted(twos.begin(), twos.end()));
  CHECK_THROWS_AS(enumerate_traces(g, 13), OracleBoundExceeded);
}

TEST_CASE("trace properties against swap-closure oracles") {
  auto graphs = traces::testing::random_graphs(12, 4, 5);
  graphs.push_back(ex1());
  std::mt19937 rng(99);
  for (const auto& g : graphs) {
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto all = traces::testing::all_words(g.size(), n);
      std::set<Word> normal_forms;
      for (const Word& w : all) {
        const auto cls = traces::testing::swap_class(g, w);
        const Word nf = lex_normal_form(g, w);
        normal_forms.insert(nf);
        CHECK(nf == *cls.begin());
        CHECK(lex_normal_form(g, nf) == nf);
        CHECK(representatives(g, w) == cls);
        CHECK(terminal_alphabet(g, w) == traces::testing::terminal_by_class(g, w));
        if (!w.empty()) CHECK(terminal_alphabet(g, w).contains(w.back()));
      }
      CHECK(enumerate_traces(g, n).size() == normal_forms.size());
      CHECK(normal_forms.size() == traces::testing::class_count(g, n));
    }

    // Associativity and identity on random triples.
    std::uniform_int_distribution<std::size_t> len(0, 4);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(g.size()) - 1);
    auto random_trace = [&] {
      Word w(len(rng));
      for (auto& x : w) x = static_cast<Letter>(letter(rng));
      return Trace(g, w);
    };
    for (int i = 0; i < 30; ++i) {
      const Trace a = random_trace(), b = random_trace(), c = random_trace();
      CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
      CHECK(concat(Trace::identity(g), a) == a);
    }
  }
}
