#include <doctest.h>

#include <random>

#include "../support/support.hpp"
#include "wat/constructions.hpp"
#include "wat/gadgets.hpp"
#include "wat/min_wdfa.hpp"
#include "wat/oracle.hpp"

using namespace wat;
using wat::testing::fig1;
using wat::testing::letters;

namespace {

std::vector<std::string> shown(const Dfa& d, const Fingerprint& f) {
  std::vector<std::string> out;
  for (const Word& w : f.reps) out.push_back(format_word(d.alphabet(), w));
  return out;
}

std::vector<std::string> b_list(std::size_t m) {
  std::vector<std::string> out{"ε", "a"};
  for (std::size_t i = 1; i <= m; ++i) out.push_back(std::string(i, 'b'));
  return out;
}

std::vector<std::string> a_list(std::size_t n) {
  std::vector<std::string> out{"ε"};
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::string(i, 'a'));
  for (std::size_t i = n - 1; i >= 1; --i) out.push_back("b" + std::string(i, 'a'));
  out.push_back("b");
  return out;
}

// I_1 = b·a* over a < b.
Dfa b_then_a() { return Dfa(letters(2), 2, 0, {1}, {kNoState, 1, 1, kNoState}); }

// Bounded oracle for the strict neighbours of g in I_q.
std::pair<std::optional<Word>, std::optional<Word>> neighbours(const Dfa& d, State q, const Word& g, std::size_t len) {
  std::optional<Word> below, above;
  for (const Word& w : oracle::incoming_words(d.to_nfa(), q, len)) {
    if (oracle::colex_less(w, g)) below = w;
    if (oracle::colex_less(g, w) && !above) above = w;
  }
  return {below, above};
}

}  // namespace

TEST_CASE("fingerprints of the tightness families") {
  for (std::size_t m = 1; m <= 5; ++m) {
    const Dfa b = family_B(m);
    CHECK(shown(b, fingerprint(b)) == b_list(m));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const Dfa a = family_A(n);
    CHECK(shown(a, fingerprint(a)) == a_list(n));
  }
}

TEST_CASE("minimum WDFAs match the drawn figures") {
  const WheelerDfa b3 = min_wdfa(family_B(3));
  CHECK(b3.dfa == testing::fig4());
  CHECK(b3.order.by_rank == std::vector<State>{0, 1, 2, 3, 4});
  const WheelerDfa a3 = min_wdfa(family_A(3));
  CHECK(a3.dfa == testing::fig5());

  const WheelerDfa f = min_wdfa(minimize(fig1()));
  CHECK(f.dfa.num_states() == 6);
  CHECK(isomorphic(f.dfa, fig1()));

  CHECK(min_wdfa(product_intersection(family_A(3), family_B(3))).dfa.num_states() == 9);

  const Dfa sigma_star(letters(2), 1, 0, {0}, {0, 0});
  const WheelerDfa s = min_wdfa(sigma_star);
  CHECK(s.dfa.num_states() == 3);
  CHECK(oracle::equiv_c_classes_bounded(sigma_star, 6).blocks.size() == 3);
}

TEST_CASE("bounded neighbour searches") {
  const Dfa d = b_then_a();
  const Alphabet& s = d.alphabet();
  CHECK(greatest_smaller(d, 1, parse_word(s, "ba")) == parse_word(s, "baa"));
  CHECK(smallest_greater(d, 1, parse_word(s, "ba")) == parse_word(s, "b"));
  CHECK_FALSE(greatest_smaller(d, 1, Word{}).has_value());
  CHECK_FALSE(smallest_greater(d, 1, parse_word(s, "bb")).has_value());

  const Dfa loop_d(Alphabet({"d"}), 1, 0, {0}, {0});
  CHECK(smallest_greater(loop_d, 0, Word{}) == Word{0});

  // In figure 1 every word of I_3 = dc·c* lies above "acc".
  const Dfa f = fig1();
  CHECK_FALSE(greatest_smaller(f, 3, parse_word(f.alphabet(), "acc")).has_value());
  CHECK(smallest_greater(f, 3, parse_word(f.alphabet(), "acc")).has_value());

  CHECK_THROWS_AS(greatest_smaller(d, 1, Word(7, 0), 6), PreconditionError);
  CHECK_THROWS_AS(greatest_smaller(d, 5, Word{}), PreconditionError);

  std::mt19937_64 rng(31);
  const std::size_t budget = 7;
  for (int i = 0; i < 10; ++i) {
    const Dfa r = testing::random_dfa(rng, 5, 2);
    const auto probes = oracle::all_words(2, 5);
    std::uniform_int_distribution<std::size_t> pick(0, probes.size() - 1);
    for (int j = 0; j < 100; ++j) {
      const State q = static_cast<State>(j % 5);
      const Word& g = probes[pick(rng)];
      const auto [below, above] = neighbours(r, q, g, budget);
      CHECK(greatest_smaller(r, q, g, budget) == below);
      CHECK(smallest_greater(r, q, g, budget) == above);
    }
  }
}

TEST_CASE("min max pairs and expand") {
  const Dfa b3 = family_B(3);
  const PairSet t = min_max_pairs(b3);
  REQUIRE(t.size() == b3.num_states());
  CHECK(t[0].m.empty());
  CHECK(t[0].M.size() == bounded_budget(b3));
  CHECK_FALSE(check_pair_invariants(b3, t).has_value());
  const Nfa f = fig1().to_nfa();
  const PairSet ft = min_max_pairs(fig1());
  REQUIRE(ft.size() == 6);
  for (State q = 0; q < 6; ++q) {
    CHECK(incoming_member(f, q, ft[q].m));
    CHECK(incoming_member(f, q, ft[q].M));
  }

  // One state entered by a, b and c.
  const Dfa abc(letters(3), 2, 0, {1}, {1, 1, 1, kNoState, kNoState, kNoState});
  const PairSet single{{Word{0}, Word{0}}};
  const Dfa one_a(letters(1), 2, 0, {1}, {1, kNoState});
  CHECK(expand(single, one_a) == single);
  const PairSet wide{{Word{}, Word{}}, {Word{0}, Word{2}}};
  CHECK(expand(wide, abc) == PairSet{{Word{}, Word{}}, {Word{0}, Word{0}}, {Word{1}, Word{1}}, {Word{2}, Word{2}}});
  const Dfa ab(letters(2), 2, 0, {1}, {1, 1, kNoState, kNoState});
  const PairSet narrow{{Word{}, Word{}}, {Word{0}, Word{1}}};
  CHECK(expand(narrow, ab) == PairSet{{Word{}, Word{}}, {Word{0}, Word{0}}, {Word{1}, Word{1}}});
}

TEST_CASE("fingerprint loop") {
  const auto run = fingerprint_run(family_A(4), {0, true});
  CHECK(run.iterations > 0);
  CHECK_THROWS_AS(fingerprint_run(family_A(4), {1, false}), ResourceError);
}

TEST_CASE("fingerprint_to_min_wdfa rejects malformed fingerprints") {
  const Dfa b3 = family_B(3);
  Fingerprint f = fingerprint(b3);
  Fingerprint unsorted = f;
  std::swap(unsorted.reps[1], unsorted.reps[2]);
  CHECK_THROWS_AS(fingerprint_to_min_wdfa(b3, unsorted), InputError);
  Fingerprint twice = f;
  twice.reps.insert(twice.reps.begin() + 2, Word{0, 0});
  CHECK_THROWS_AS(fingerprint_to_min_wdfa(b3, twice), InputError);
  Fingerprint missing = f;
  missing.reps.pop_back();
  CHECK_THROWS_AS(fingerprint_to_min_wdfa(b3, missing), InputError);
  const Dfa a1 = family_A(1);
  Fingerprint foreign{{Word{}, Word{0}, Word{0, 0}}};
  CHECK_THROWS_AS(fingerprint_to_min_wdfa(a1, foreign), InputError);
}

TEST_CASE("min_wdfa against exhaustive search") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    const Dfa d = testing::random_minimal_dfa(rng, 2 + i % 3, 2);
    if (!is_wheeler_language_dfa(d).wheeler) continue;
    const WheelerDfa w = min_wdfa(d);
    CHECK(same_language(w.dfa, d));
    CHECK_FALSE(check_wheeler_conditions(w.dfa.to_nfa(), w.order).has_value());
    if (w.dfa.num_states() <= 7) {
      const auto bf = oracle::brute_force_min_wdfa(d, w.dfa.num_states());
      REQUIRE(bf.has_value());
      CHECK(isomorphic(*bf, w.dfa));
    }
  }
  try {
    min_wdfa(Dfa(letters(1), 2, 0, {0}, {1, 0}));
    FAIL("expected NonWheelerError");
  } catch (const NonWheelerError& e) {
    CHECK(validate_witness(Dfa(letters(1), 2, 0, {0}, {1, 0}), e.witness()));
  }
}

TEST_CASE("determinize_wnfa") {
  const auto same = determinize_wnfa(fig1().to_nfa(), WheelerOrder::identity(6));
  CHECK(same.result.dfa == fig1());
  CHECK(same.bound == 2 * 6 - 1 - 4);

  // Two a-successors of the initial state that merge again on b.
  const Nfa a(letters(2), 4, {0}, {3}, {{0, 0, 1}, {0, 0, 2}, {1, 1, 3}, {2, 1, 3}, {2, 0, 2}});
  const auto order = oracle::exhaustive_wheeler_order(a);
  REQUIRE(order.has_value());
  const auto det = determinize_wnfa(a, WheelerOrder::from_sequence(*order));
  CHECK(det.result.dfa.num_states() <= det.bound);
  CHECK(is_wheeler_dfa(det.result.dfa).wheeler());
  CHECK(oracle::same_language_upto(a, det.result.dfa.to_nfa(), 8));

  CHECK_THROWS_AS(determinize_wnfa(fig1().to_nfa(), WheelerOrder::from_sequence({0, 1, 3, 2, 4, 5})),
                  PreconditionError);
}
