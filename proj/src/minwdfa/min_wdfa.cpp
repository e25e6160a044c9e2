#include "wat/min_wdfa.hpp"

#include <algorithm>

#include "search.hpp"
#include "wat/constructions.hpp"

namespace wat {

namespace {

Symbol end_of(const Word& w) { return w.empty() ? kHash : w.back(); }

// Lemma 4 places a representative of every class strictly below n + n^2.
std::size_t fingerprint_budget(const Dfa& d) { return bounded_budget(d) - 1; }

std::string describe_pair(const Alphabet& sigma, const WordPair& p) {
  return "(" + format_word(sigma, p.m) + ", " + format_word(sigma, p.M) + ")";
}

struct LivePair {
  WordPair words;
  State state;
};

void sort_pairs(std::vector<LivePair>& t) {
  std::sort(t.begin(), t.end(), [](const LivePair& x, const LivePair& y) { return colex_less(x.words.m, y.words.m); });
}

PairSet strip(const std::vector<LivePair>& t) {
  PairSet out;
  out.reserve(t.size());
  for (const auto& p : t) out.push_back(p.words);
  return out;
}

PairSet expand_with(const PairSet& t, const Dfa& d, detail::BoundedSearch& search) {
  PairSet out;
  for (const auto& [m, M] : t) {
    const Symbol lo = end_of(m), hi = end_of(M);
    if (lo == hi) {
      out.push_back({m, M});
      continue;
    }
    const State q = d.run(m);
    for (Symbol c = lo + 1; c < hi; ++c)
      if (auto alpha = search.min_ending_with(q, c)) out.push_back({*alpha, *alpha});
    out.push_back({m, m});
    out.push_back({M, M});
  }
  std::sort(out.begin(), out.end(), [](const WordPair& x, const WordPair& y) { return colex_less(x.m, y.m); });
  return out;
}

}  // namespace

std::optional<std::string> check_pair_invariants(const Dfa& d, const PairSet& t) {
  const Alphabet& sigma = d.alphabet();
  std::vector<const Word*> parts;
  for (const auto& p : t) {
    parts.push_back(&p.m);
    if (p.M != p.m) parts.push_back(&p.M);
  }
  std::sort(parts.begin(), parts.end(), [](const Word* x, const Word* y) { return colex_less(*x, *y); });
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (*parts[i] == *parts[i - 1]) return "word " + format_word(sigma, *parts[i]) + " appears in two pairs";
  for (const auto& p : t) {
    if (colex_less(p.M, p.m)) return "pair " + describe_pair(sigma, p) + " is reversed";
    if (d.run(p.m) == kNoState || d.run(p.m) != d.run(p.M))
      return "pair " + describe_pair(sigma, p) + " spans two Myhill-Nerode classes";
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (d.run(t[i].m) != d.run(t[j].m)) continue;
      const bool ordered = colex_less(t[i].M, t[j].m) || colex_less(t[j].M, t[i].m);
      if (!ordered) return "pairs " + describe_pair(sigma, t[i]) + " and " + describe_pair(sigma, t[j]) + " overlap";
    }
  return std::nullopt;
}

PairSet expand(const PairSet& t, const Dfa& d, std::size_t budget) {
  detail::BoundedSearch search(d, budget != 0 ? budget : bounded_budget(d));
  return expand_with(t, d, search);
}

FingerprintRun fingerprint_run(const Dfa& d, const FingerprintOptions& opts) {
  FingerprintRun run;
  if (d.is_empty_language()) {
    run.fingerprint.reps.push_back({});
    return run;
  }
  const std::size_t n = d.num_states();
  const std::size_t cap = opts.iteration_cap != 0 ? opts.iteration_cap : 4 * (n * n + n) * n;
  detail::BoundedSearch search(d, fingerprint_budget(d));
  std::vector<LivePair> t;
  {
    const MinMaxTable& table = search.table();
    for (State q = 0; q < n; ++q) {
      auto lo = table.min(q, table.budget());
      auto hi = table.max(q, table.budget());
      if (!lo || !hi) throw PreconditionError("fingerprint needs a trimmed DFA");
      t.push_back({{std::move(*lo), std::move(*hi)}, q});
    }
  }
  sort_pairs(t);
  const auto check = [&] {
    if (!opts.check_invariants) return;
    if (auto bad = check_pair_invariants(d, strip(t))) throw Error("pair invariant broken: " + *bad);
  };
  check();
  while (true) {
    std::size_t i = 0;
    while (i + 1 < t.size() && !colex_less(t[i + 1].words.m, t[i].words.M)) ++i;
    if (i + 1 >= t.size()) break;
    if (run.iterations == cap)
      throw ResourceError("fingerprint iteration cap " + std::to_string(cap) + " reached; overlapping pairs " +
                          describe_pair(d.alphabet(), t[i].words) + " and " +
                          describe_pair(d.alphabet(), t[i + 1].words) + "; the language may not be Wheeler");
    ++run.iterations;
    auto low = search.greatest_smaller(t[i].state, t[i + 1].words.m);
    auto high = search.smallest_greater(t[i].state, t[i + 1].words.m);
    if (!low || !high) throw Error("internal: split of " + describe_pair(d.alphabet(), t[i].words) + " failed");
    LivePair upper{{std::move(*high), t[i].words.M}, t[i].state};
    t[i].words.M = std::move(*low);
    t.push_back(std::move(upper));
    sort_pairs(t);
    check();
  }
  const PairSet expanded = expand_with(strip(t), d, search);
  // Each class is an interval following the previous one, so its least member
  // is the least word with its state and last symbol above the previous class.
  auto& reps = run.fingerprint.reps;
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    const Word& w = expanded[i].m;
    std::optional<Word> least;
    if (i > 0 && !w.empty()) least = search.least_after(d.run(w), w.back(), expanded[i - 1].m);
    reps.push_back(least ? std::move(*least) : w);
  }
  return run;
}

Fingerprint fingerprint(const Dfa& d, const FingerprintOptions& opts) { return fingerprint_run(d, opts).fingerprint; }

WheelerDfa fingerprint_to_min_wdfa(const Dfa& d, const Fingerprint& f) {
  const Alphabet& sigma = d.alphabet();
  if (d.is_empty_language()) return {Dfa::empty(sigma), WheelerOrder::identity(1)};
  const auto& reps = f.reps;
  const std::size_t m = reps.size(), k = sigma.size();
  if (m == 0 || !reps.front().empty()) throw InputError("fingerprint must start with the empty word");
  std::vector<State> state(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && !colex_less(reps[i - 1], reps[i])) throw InputError("fingerprint is not strictly co-lex sorted");
    state[i] = d.run(reps[i]);
    if (state[i] == kNoState) throw InputError("representative " + format_word(sigma, reps[i]) + " is not a prefix");
    if (i > 0 && state[i] == state[i - 1] && end_of(reps[i]) == end_of(reps[i - 1]))
      throw InputError("representatives " + format_word(sigma, reps[i - 1]) + " and " + format_word(sigma, reps[i]) +
                       " share a class");
  }
  const auto same_class = [&](std::size_t s, State t, Symbol c) { return state[s] == t && end_of(reps[s]) == c; };
  std::vector<State> table(m * k, kNoState);
  std::vector<State> finals;
  Word w;
  for (std::size_t j = 0; j < m; ++j) {
    if (d.is_final(state[j])) finals.push_back(static_cast<State>(j));
    for (std::size_t c = 0; c < k; ++c) {
      const auto sym = static_cast<Symbol>(c);
      const State t = d.next(state[j], sym);
      if (t == kNoState) continue;
      w = reps[j];
      w.push_back(sym);
      // First representative above w; ε guarantees it is not the first.
      const auto above = std::upper_bound(reps.begin(), reps.end(), w,
                                          [](const Word& x, const Word& y) { return colex_less(x, y); });
      const auto s = static_cast<std::size_t>(above - reps.begin()) - 1;
      std::size_t target = m;
      if (reps[s] == w || same_class(s, t, sym))
        target = s;
      else if (s + 1 < m && same_class(s + 1, t, sym))
        target = s + 1;
      if (target == m || state[target] != t)
        throw InputError("no representative for the class of " + format_word(sigma, w));
      table[j * k + c] = static_cast<State>(target);
    }
  }
  WheelerDfa out{Dfa(sigma, m, 0, std::move(finals), std::move(table)), WheelerOrder::identity(m)};
  if (auto v = check_wheeler_conditions(out.dfa.to_nfa(), out.order))
    throw InputError("fingerprint does not give a Wheeler automaton: " + v->describe(sigma));
  return out;
}

WheelerDfa min_wdfa(const Dfa& d, const FingerprintOptions& opts) {
  const LanguageVerdict verdict = is_wheeler_language_dfa(d);
  if (!verdict.wheeler) {
    const auto& w = *verdict.witness;
    const Alphabet& sigma = d.alphabet();
    throw NonWheelerError("language is not Wheeler: mu=" + format_word(sigma, w.mu) + " nu=" +
                              format_word(sigma, w.nu) + " gamma=" + format_word(sigma, w.gamma),
                          w);
  }
  return fingerprint_to_min_wdfa(verdict.minimal, fingerprint(verdict.minimal, opts));
}

WnfaDeterminization determinize_wnfa(const Nfa& a, const WheelerOrder& order, std::size_t cap) {
  if (auto v = check_wheeler_conditions(a, order))
    throw PreconditionError("order is not a Wheeler order: " + v->describe(a.alphabet()));
  const std::size_t n = a.num_states(), sigma_eff = effective_alphabet_size(a);
  WnfaDeterminization out;
  out.bound = 2 * n >= sigma_eff + 1 ? 2 * n - 1 - sigma_eff : 0;
  Determinized det = determinize(a, cap);
  for (auto& subset : det.subsets) {
    for (State& q : subset) q = static_cast<State>(order.rank_of[q]);
    std::sort(subset.begin(), subset.end());
    if (!subset.empty() && subset.back() - subset.front() + 1 != subset.size())
      throw PreconditionError("a reached subset is not an interval of the order");
  }
  if (det.dfa.num_states() > out.bound && !a.is_empty_language())
    throw PreconditionError("determinization has " + std::to_string(det.dfa.num_states()) + " states, above the bound " +
                            std::to_string(out.bound));
  const WheelerCertificate cert = is_wheeler_dfa(det.dfa);
  if (!cert.wheeler()) throw PreconditionError("determinization is not Wheeler");
  const std::size_t m = det.dfa.num_states();
  std::vector<State> new_id(m);
  for (State q = 0; q < m; ++q) new_id[q] = static_cast<State>(cert.order->rank_of[q]);
  out.result = {permute(det.dfa, new_id), WheelerOrder::identity(m)};
  out.subsets.resize(m);
  for (State q = 0; q < m; ++q) out.subsets[new_id[q]] = std::move(det.subsets[q]);
  return out;
}

}  // namespace wat
