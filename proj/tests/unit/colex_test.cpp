#include <doctest.h>

#include <random>

#include "../support/support.hpp"
#include "wat/colex.hpp"
#include "wat/constructions.hpp"
#include "wat/error.hpp"
#include "wat/gadgets.hpp"
#include "wat/oracle.hpp"

using namespace wat;
using wat::testing::fig1;
using wat::testing::letters;

namespace {

Word w(const char* text) { return parse_word(letters(4), text); }

// Input-consistent DFA with a # copy for the initial state when needed.
Dfa input_consistent(const Dfa& d) { return Dfa::from_nfa(make_input_consistent(d.to_nfa()).nfa); }

}  // namespace

TEST_CASE("colex comparison") {
  CHECK(colex_less(w(""), w("a")));
  CHECK(colex_less(w("ac"), w("bc")));
  CHECK(colex_less(w("bc"), w("acc")));
  CHECK(colex_less(w("b"), w("ab")));
  CHECK(colex_cmp(w("abc"), w("abc")) == std::strong_ordering::equal);
  std::mt19937_64 rng(3);
  const auto words = oracle::all_words(3, 4);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const Word& x = words[pick(rng)];
    const Word& y = words[pick(rng)];
    CHECK(colex_less(x, y) == oracle::colex_less(x, y));
  }
}

TEST_CASE("min max table") {
  const Dfa d = fig1();
  const MinMaxTable t(d, 3);
  CHECK(t.min(0, 3) == Word{});
  CHECK(t.max(0, 3) == Word{});
  const Alphabet& s = d.alphabet();
  CHECK(t.min(2, 3) == parse_word(s, "ac"));
  CHECK(t.max(2, 3) == parse_word(s, "acc"));
  CHECK_FALSE(t.min(2, 1).has_value());

  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    const Dfa r = testing::random_dfa(rng, 6, 2);
    const MinMaxTable rt(r, 6);
    for (State q = 0; q < r.num_states(); ++q) {
      const auto words = oracle::incoming_words(r.to_nfa(), q, 6);
      if (words.empty()) {
        CHECK_FALSE(rt.min(q, 6).has_value());
      } else {
        CHECK(rt.min(q, 6) == words.front());
        CHECK(rt.max(q, 6) == words.back());
      }
    }
  }
}

TEST_CASE("wheeler conditions on figure 1") {
  const Nfa a = fig1().to_nfa();
  CHECK_FALSE(check_wheeler_conditions(a, WheelerOrder::identity(6)).has_value());

  const WheelerOrder swapped = WheelerOrder::from_sequence({0, 1, 3, 2, 4, 5});
  const auto v = check_wheeler_conditions(a, swapped);
  REQUIRE(v.has_value());
  CHECK(v->kind == ViolationKind::Propagation);
  CHECK(*v->first == Transition{1, 1, 2});
  CHECK(*v->second == Transition{4, 1, 3});
  const auto all = list_wheeler_violations(a, swapped);
  CHECK(std::find(all.begin(), all.end(), *v) != all.end());

  const Nfa single(letters(1), 2, {0}, {1}, {{0, 0, 1}});
  CHECK_FALSE(check_wheeler_conditions(single, WheelerOrder::identity(2)).has_value());
  const auto bad = check_wheeler_conditions(single, WheelerOrder::from_sequence({1, 0}));
  REQUIRE(bad.has_value());
  CHECK(bad->kind == ViolationKind::InitialNotMinimum);
}

TEST_CASE("is_wheeler_dfa") {
  const auto c = is_wheeler_dfa(fig1());
  REQUIRE(c.wheeler());
  CHECK(c.order->by_rank == std::vector<State>{0, 1, 2, 3, 4, 5});
  CHECK(is_wheeler_dfa(testing::fig4()).wheeler());
  CHECK_FALSE(is_wheeler_dfa(family_B(3)).wheeler());
  CHECK_FALSE(is_wheeler_dfa(family_A(3)).wheeler());
  CHECK_FALSE(oracle::exhaustive_wheeler_order(family_A(3).to_nfa()).has_value());

  std::mt19937_64 rng(22);
  for (int i = 0; i < 150; ++i) {
    const Dfa d = trim(testing::random_dfa(rng, 2 + i % 5, 2));
    if (d.is_empty_language()) continue;
    CHECK(is_wheeler_dfa(d).wheeler() == oracle::exhaustive_wheeler_order(d.to_nfa()).has_value());
  }
}

TEST_CASE("colex partial order") {
  const ColexRelation fig = colex_partial_order_dfa(fig1());
  CHECK(fig.is_total());
  CHECK(fig.to_order()->by_rank == std::vector<State>{0, 1, 2, 3, 4, 5});

  const Dfa one = input_consistent(Dfa(letters(1), 1, 0, {0}, {0}));
  CHECK(colex_partial_order_dfa(one).is_total());
  CHECK_THROWS_AS(colex_partial_order_dfa(Dfa(letters(2), 2, 0, {1}, {1, 1, kNoState, kNoState})),
                  PreconditionError);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const Dfa d = input_consistent(trim(testing::random_dfa(rng, 3 + i % 4, 2)));
    const ColexRelation rel = colex_partial_order_dfa(d);
    for (State q = 0; q < d.num_states(); ++q)
      for (State p = 0; p < d.num_states(); ++p)
        if (q != p) CHECK(rel.less(q, p) == oracle::dfa_state_less(d, q, p));
  }
}

TEST_CASE("brute force wheeler nfa") {
  const Nfa contradictory(letters(3), 3, {0}, {1, 2}, {{0, 2, 1}, {1, 2, 2}, {2, 2, 1}});
  CHECK_FALSE(is_wheeler_nfa_bruteforce(contradictory).wheeler());
  CHECK(is_wheeler_nfa_bruteforce(fig1().to_nfa()).wheeler());

  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const Nfa a = testing::random_nfa(rng, 2 + i % 4, 2, 0.25);
    const auto got = is_wheeler_nfa_bruteforce(a);
    CHECK(got.wheeler() == oracle::exhaustive_wheeler_order(a).has_value());
    if (got.wheeler()) CHECK_FALSE(check_wheeler_conditions(a, *got.order).has_value());
  }
  std::mt19937_64 big(25);
  CHECK_THROWS_AS(is_wheeler_nfa_bruteforce(testing::random_nfa(big, 12, 2), 9), ResourceError);
}

TEST_CASE("path coherence") {
  const Dfa d = fig1();
  const WheelerOrder id = WheelerOrder::identity(6);
  CHECK(is_interval_image(d, id, 1, 4, Word{1}));
  CHECK(is_interval_image(d, id, 3, 3, Word{3, 1}));
  CHECK(is_interval_image(d, id, 0, 5, Word{}));
  CHECK_FALSE(path_coherence_check(d, id, 1000).has_value());
  const WheelerOrder moved = WheelerOrder::from_sequence({0, 1, 3, 4, 2, 5});
  CHECK_FALSE(is_interval_image(d, moved, 1, 2, Word{1}));
  CHECK(path_coherence_check(d, moved, 1000).has_value());
}
