// Acceptance run: one PASS/FAIL line per criterion, with pinned time limits.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "../support/support.hpp"
#include "wat/colex.hpp"
#include "wat/constructions.hpp"
#include "wat/gadgets.hpp"
#include "wat/io.hpp"
#include "wat/min_wdfa.hpp"
#include "wat/oracle.hpp"
#include "wat/wheeler_language.hpp"

using namespace wat;
namespace wt = wat::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Log {
 public:
  void fail(const std::string& what) {
    if (out_.ok) out_.detail = what;
    out_.ok = false;
    ++failures_;
  }
  void note(const std::string& what) {
    if (out_.ok) out_.detail = what;
  }
  Outcome done() {
    if (failures_ > 1) out_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
    return out_;
  }

 private:
  Outcome out_;
  std::size_t failures_ = 0;
};

// Exhaustive ≤ 3-state minimal DFAs over {a, b}, then 200 random 4-6 state ones.
const std::vector<Dfa>& language_corpus() {
  static const std::vector<Dfa> corpus = [] {
    std::vector<Dfa> out = wt::all_minimal_dfas(3, 2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) out.push_back(wt::random_minimal_dfa(rng, 4 + i % 3, 2));
    return out;
  }();
  return corpus;
}

std::string show(const std::vector<State>& v) {
  std::string s;
  for (State q : v) s += (s.empty() ? "q" : "<q") + std::to_string(q);
  return s;
}

// ---------------------------------------------------------------------------

Outcome figure_one() {
  Log log;
  const AutomatonFile f = read_automaton(WAT_TEST_DATA "/fig1.aut");
  const auto c = is_wheeler_dfa(f.dfa());
  const std::vector<State> expected{0, 1, 2, 3, 4, 5};
  if (!c.wheeler()) log.fail("not Wheeler");
  else if (c.order->by_rank != expected) log.fail("order " + show(c.order->by_rank));
  else log.note("order " + show(c.order->by_rank));
  return log.done();
}

Outcome minimum_sizes() {
  Log log;
  if (const auto s = min_wdfa(family_B(3)).dfa.num_states(); s != 5) log.fail("B_3 gives " + std::to_string(s));
  if (const auto s = min_wdfa(family_A(3)).dfa.num_states(); s != 7) log.fail("A_3 gives " + std::to_string(s));
  for (std::size_t k = 1; k <= 5; ++k) {
    if (const auto s = min_wdfa(family_B(k)).dfa.num_states(); s != k + 2)
      log.fail("B_" + std::to_string(k) + " gives " + std::to_string(s));
    if (const auto s = min_wdfa(family_A(k)).dfa.num_states(); s != 2 * k + 1)
      log.fail("A_" + std::to_string(k) + " gives " + std::to_string(s));
  }
  log.note("B_3=5, A_3=7, B_m=m+2 and A_n=2n+1 for 1..5");
  return log.done();
}

Outcome intersection_bound() {
  Log log;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= 5; ++m) {
      const auto r = intersect_wdfa(min_wdfa(family_A(n)), min_wdfa(family_B(m)));
      const std::size_t got = r.result.dfa.num_states();
      if (got != 2 * n + m || r.bound != 2 * n + m)
        log.fail("A_" + std::to_string(n) + " ∩ B_" + std::to_string(m) + ": " + std::to_string(got) + " states, bound " +
                 std::to_string(r.bound));
    }
  // Random minimum WDFAs with at most 8 states over {a, b}.
  std::mt19937_64 rng(301);
  std::vector<WheelerDfa> pool;
  while (pool.size() < 60) {
    const Dfa d = wt::random_minimal_dfa(rng, 1 + pool.size() % 5, 2);
    if (!is_wheeler_language_dfa(d).wheeler) continue;
    WheelerDfa w = min_wdfa(d);
    if (w.dfa.num_states() <= 8) pool.push_back(std::move(w));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t slack = 0;
  for (int i = 0; i < 100; ++i) {
    const WheelerDfa& x = pool[pick(rng)];
    const WheelerDfa& y = pool[pick(rng)];
    try {
      const auto r = intersect_wdfa(x, y);
      if (!r.empty && !same_language(r.result.dfa, product_intersection(x.dfa, y.dfa))) log.fail("wrong language");
      if (!r.empty) slack += r.bound - r.result.dfa.num_states();
    } catch (const Error& e) {
      log.fail(e.what());
    }
  }
  log.note("2n+m on all 25 family pairs; 100 random pairs within the bound (total slack " + std::to_string(slack) + ")");
  return log.done();
}

// Random NFA whose states are sorted by incoming label, kept when the
// exhaustive order search finds a Wheeler order.
std::optional<std::pair<Nfa, WheelerOrder>> random_wnfa(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<Symbol> label(n, kHash);
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(k - 1));
  for (std::size_t q = 1; q < n; ++q) label[q] = sym(rng);
  std::sort(label.begin() + 1, label.end());
  std::vector<Transition> ts;
  std::uniform_int_distribution<State> src(0, static_cast<State>(n - 1));
  std::bernoulli_distribution extra(0.3), fork(0.5);
  for (State q = 1; q < n; ++q) {
    const State p = src(rng);
    ts.push_back({p, label[q], q});
    // A second target on the same label right after q makes p nondeterministic.
    if (q + 1 < n && label[q + 1] == label[q] && fork(rng)) ts.push_back({p, label[q], q + 1});
    while (extra(rng)) ts.push_back({src(rng), label[q], q});
  }
  std::vector<State> finals;
  for (State q = 0; q < n; ++q)
    if (extra(rng)) finals.push_back(q);
  if (finals.empty()) finals.push_back(static_cast<State>(n - 1));
  const Nfa a = trim(Nfa(wt::letters(k), n, {0}, finals, ts));
  if (a.is_empty_language()) return std::nullopt;
  const auto order = oracle::exhaustive_wheeler_order(a);
  if (!order) return std::nullopt;
  return std::pair{a, WheelerOrder::from_sequence(*order)};
}

Outcome determinization_bound() {
  Log log;
  std::mt19937_64 rng(401);
  std::size_t accepted = 0, nondeterministic = 0, tight = 0;
  while (accepted < 200) {
    const auto wnfa = random_wnfa(rng);
    // Keep at least half of the sample nondeterministic.
    if (!wnfa || (wnfa->first.is_deterministic() && 2 * nondeterministic < accepted)) continue;
    ++accepted;
    const auto& [a, order] = *wnfa;
    if (!a.is_deterministic()) ++nondeterministic;
    try {
      const auto det = determinize_wnfa(a, order);
      const std::size_t bound = 2 * a.num_states() - 1 - effective_alphabet_size(a);
      const std::size_t got = det.result.dfa.num_states();
      if (got > bound) log.fail(std::to_string(got) + " states above bound " + std::to_string(bound));
      if (got == bound) ++tight;
      if (!is_wheeler_dfa(det.result.dfa).wheeler()) log.fail("output is not a WDFA");
      if (!oracle::same_language_upto(a, det.result.dfa.to_nfa(), 7)) log.fail("language changed");
    } catch (const Error& e) {
      log.fail(e.what());
    }
  }
  log.note("200 WNFAs (" + std::to_string(nondeterministic) + " nondeterministic, " + std::to_string(tight) +
           " at the bound)");
  return log.done();
}

// Random input-consistent DFA: each state has a fixed incoming label.
Dfa random_input_consistent(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<Symbol> label(n, kHash);
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(k - 1));
  for (std::size_t q = 1; q < n; ++q) label[q] = sym(rng);
  std::vector<State> table(n * k, kNoState);
  std::bernoulli_distribution edge(0.6), fin(0.4);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<State> with;
    for (State q = 1; q < n; ++q)
      if (label[q] == static_cast<Symbol>(c)) with.push_back(q);
    if (with.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, with.size() - 1);
    for (State p = 0; p < n; ++p)
      if (edge(rng)) table[p * k + c] = with[pick(rng)];
  }
  std::vector<State> finals;
  for (State q = 0; q < n; ++q)
    if (fin(rng)) finals.push_back(q);
  if (finals.empty()) finals.push_back(static_cast<State>(n - 1));
  return trim(Dfa(wt::letters(k), n, 0, finals, table));
}

Outcome partial_order_oracle() {
  Log log;
  std::vector<Dfa> suite;
  for (const Dfa& d : wt::all_minimal_dfas(3, 2))
    suite.push_back(Dfa::from_nfa(make_input_consistent(d.to_nfa()).nfa));
  const std::size_t exhaustive = suite.size();
  std::mt19937_64 rng(501);
  while (suite.size() < exhaustive + 300) {
    const std::size_t n = 4 + (suite.size() - exhaustive) % 4;
    const Dfa d = random_input_consistent(rng, n + 1, 2);
    if (d.num_states() == n) suite.push_back(d);
  }
  std::size_t pairs = 0, related = 0;
  for (const Dfa& d : suite) {
    const ColexRelation rel = colex_partial_order_dfa(d);
    for (State q = 0; q < d.num_states(); ++q)
      for (State p = 0; p < d.num_states(); ++p) {
        if (q == p) continue;
        ++pairs;
        const bool want = oracle::dfa_state_less(d, q, p);
        related += want ? 1 : 0;
        if (rel.less(q, p) != want) log.fail("disagreement on a " + std::to_string(d.num_states()) + "-state DFA");
      }
  }
  log.note(std::to_string(suite.size()) + " DFAs, " + std::to_string(pairs) + " ordered pairs, " +
           std::to_string(related) + " related");
  return log.done();
}

Outcome language_cross_validation() {
  Log log;
  std::size_t wheeler = 0, other = 0, oracle_hits = 0;
  for (const Dfa& d : language_corpus()) {
    const auto v = is_wheeler_language_dfa(d);
    const std::size_t n = d.num_states();
    // (a) the bounded oracle never contradicts a positive verdict
    if (const auto w = bounded_witness_oracle(d, n <= 3 ? 6 : 4)) {
      ++oracle_hits;
      if (v.wheeler) log.fail("oracle witness on a Wheeler verdict");
      if (!validate_witness(d, *w)) log.fail("oracle witness does not replay");
    }
    // (b) block counts stay put on Wheeler languages and grow otherwise
    oracle::BlockCounter blocks(d);
    const std::size_t l0 = n * n + n + 2;
    const bool stable = blocks.count(l0) == blocks.count(3 * l0);
    if (stable != v.wheeler) log.fail("stabilization disagrees on a " + std::to_string(n) + "-state DFA");
    // (c) min_wdfa succeeds exactly on Wheeler languages
    bool built = true;
    try {
      min_wdfa(d);
    } catch (const NonWheelerError& e) {
      built = false;
      if (!validate_witness(v.minimal, e.witness())) log.fail("witness does not replay");
    }
    if (built != v.wheeler) log.fail("min_wdfa disagrees");
    (v.wheeler ? wheeler : other)++;
  }
  log.note(std::to_string(language_corpus().size()) + " DFAs: " + std::to_string(wheeler) + " Wheeler, " +
           std::to_string(other) + " not (" + std::to_string(oracle_hits) + " confirmed by bounded search)");
  return log.done();
}

// Every NFA with one initial state, `n` states and two symbols.
void for_each_nfa(std::size_t n, const std::function<void(const Nfa&)>& visit) {
  std::vector<Transition> all;
  for (State p = 0; p < n; ++p)
    for (Symbol c = 0; c < 2; ++c)
      for (State q = 0; q < n; ++q) all.push_back({p, c, q});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Transition> ts;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) ts.push_back(all[i]);
    for (std::uint64_t fmask = 0; fmask < (std::uint64_t{1} << n); ++fmask) {
      std::vector<State> finals;
      for (State q = 0; q < n; ++q)
        if (fmask >> q & 1) finals.push_back(q);
      visit(Nfa(wt::letters(2), n, {0}, finals, ts));
    }
  }
}

Outcome gadget_biconditionals() {
  Log log;
  std::size_t checked = 0, universal = 0, rejected = 0, reduced_inputs = 0;
  const auto check = [&](const Nfa& a) {
    ++checked;
    const bool u = oracle::bounded_universality(a, 8).universal;
    universal += u ? 1 : 0;
    const auto r1 = report_reduced_universality(a);
    if (r1.left_holds != u || !r1.agree()) log.fail("reduced-univ: " + serialize(a));
    const Nfa norm = normalize_initial(trim(a));
    if (is_reduced(norm)) {
      ++reduced_inputs;
      if (!is_reduced(gadget_reduced_universality(norm))) log.fail("reduced-univ lost reducedness: " + serialize(a));
    }
    if (!report_order_hardness(a).agree()) log.fail("order: " + serialize(a));
    if (!report_reducedness(a).agree()) log.fail("reducedness: " + serialize(a));
    const bool eps = std::any_of(a.initials().begin(), a.initials().end(), [&](State s) { return a.is_final(s); });
    if (eps) {
      if (!report_wheeler_language(a).agree()) log.fail("wheeler-lang: " + serialize(a));
    } else {
      ++rejected;
      if (u) log.fail("universal without ε");
    }
  };
  for (std::size_t n = 1; n <= 2; ++n) for_each_nfa(n, check);
  std::mt19937_64 rng(701);
  for (int i = 0; i < 20000; ++i) check(wt::random_nfa(rng, 3, 2, 0.35));
  for (int i = 0; i < 10000; ++i) check(wt::random_nfa(rng, 4, 2, 0.3));
  for (int i = 0; i < 100; ++i) check(wt::random_nfa(rng, 5 + i % 2, 2, 0.25));
  log.note(std::to_string(checked) + " NFAs (" + std::to_string(universal) + " universal, " +
           std::to_string(reduced_inputs) + " reduced, " + std::to_string(rejected) + " without ε)");
  return log.done();
}

Outcome fingerprint_correctness() {
  Log log;
  std::size_t instances = 0, searched = 0;
  for (const Dfa& d : language_corpus()) {
    if (!is_wheeler_language_dfa(d).wheeler) continue;
    ++instances;
    const std::size_t n = d.num_states();
    const Fingerprint f = fingerprint(d);
    oracle::BlockCounter blocks(d);
    const std::size_t l0 = n * n + n + 2;
    std::vector<std::size_t> hit;
    for (const Word& w : f.reps) {
      if (w.size() >= n + n * n) log.fail("representative of length " + std::to_string(w.size()));
      hit.push_back(blocks.block_of(w, l0));
    }
    std::sort(hit.begin(), hit.end());
    if (std::adjacent_find(hit.begin(), hit.end()) != hit.end() || hit.size() != blocks.count(l0))
      log.fail("fingerprint is not a bijection with the blocks");
    const WheelerDfa w = fingerprint_to_min_wdfa(d, f);
    if (!same_language(w.dfa, d)) log.fail("language changed");
    const std::size_t h = w.dfa.num_states();
    if (n <= 5 && std::pow(static_cast<double>(n), static_cast<double>(h - 1)) <= 2e5) {
      ++searched;
      const auto bf = oracle::brute_force_min_wdfa(d, h);
      if (!bf || !isomorphic(*bf, w.dfa)) log.fail("differs from the exhaustive minimum");
      if (h > 1 && oracle::brute_force_min_wdfa(d, h - 1)) log.fail("a smaller WDFA exists");
    }
  }
  log.note(std::to_string(instances) + " Wheeler instances, " + std::to_string(searched) +
           " checked by exhaustive WDFA search");
  return log.done();
}

Outcome interval_properties() {
  Log log;
  std::size_t automata = 0;
  std::uint64_t seed = 1;
  for (const Dfa& d : language_corpus()) {
    if (!is_wheeler_language_dfa(d).wheeler) continue;
    const WheelerDfa w = min_wdfa(d);
    ++automata;
    const auto pref = oracle::enum_pref(w.dfa, 9);
    // In rank order, each state's words must form one contiguous block.
    std::vector<char> closed(w.dfa.num_states(), 0);
    for (std::size_t i = 0; i < pref.entries.size(); ++i) {
      const State q = pref.entries[i].state;
      if (closed[q]) log.fail("I_q is not an interval");
      if (i + 1 < pref.entries.size() && pref.entries[i + 1].state != q) {
        closed[q] = 1;
        if (w.order.rank_of[pref.entries[i + 1].state] < w.order.rank_of[q]) log.fail("blocks out of rank order");
      }
    }
    if (const auto bad = path_coherence_check(w.dfa, w.order, 1000, seed++))
      log.fail("path coherence fails on [" + std::to_string(bad->lo) + ", " + std::to_string(bad->hi) + "]");
  }
  log.note(std::to_string(automata) + " WDFAs, 1000 probes each");
  return log.done();
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "figure-1 golden order", 1, figure_one},
      {2, "minimum WDFA sizes", 5, minimum_sizes},
      {3, "intersection bound and tightness", 30, intersection_bound},
      {4, "WNFA determinization bound", 60, determinization_bound},
      {5, "partial order vs enumeration oracle", 90, partial_order_oracle},
      {6, "Wheeler-language cross-validation", 180, language_cross_validation},
      {7, "gadget biconditionals", 300, gadget_biconditionals},
      {8, "fingerprint correctness", 180, fingerprint_correctness},
      {9, "interval and path coherence", 60, interval_properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.limit_s) {
      out.ok = false;
      out.detail += "; over the time limit";
    }
    failed += out.ok ? 0 : 1;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s]\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs, c.limit_s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
