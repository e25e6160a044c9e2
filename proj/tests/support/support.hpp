#pragma once

#include <random>
#include <set>
#include <vector>

#include "wat/automaton.hpp"
#include "wat/constructions.hpp"

namespace wat::testing {

inline Dfa fig1() {
  const Alphabet sigma({"a", "c", "d", "f"});
  std::vector<State> t(6 * 4, kNoState);
  const auto edge = [&](State p, Symbol a, State q) { t[p * 4 + static_cast<std::size_t>(a)] = q; };
  edge(0, 0, 1);
  edge(0, 2, 4);
  edge(1, 1, 2);
  edge(2, 1, 2);
  edge(4, 1, 3);
  edge(3, 1, 3);
  edge(3, 3, 5);
  edge(4, 3, 5);
  return Dfa(sigma, 6, 0, {1, 2, 5}, t);
}

/// Minimum WDFA of B_3 as drawn, states in Wheeler order.
inline Dfa fig4() {
  const Alphabet sigma({"a", "b"});
  return Dfa(sigma, 5, 0, {0, 1, 2, 3, 4}, {1, 2, 1, 2, 1, 3, 1, 4, 1, kNoState});
}

/// Minimum WDFA of A_3 as drawn, states in Wheeler order.
inline Dfa fig5() {
  const Alphabet sigma({"a", "b"});
  return Dfa(sigma, 7, 0, {0, 1, 2, 3, 4, 5, 6}, {1, 6, 2, 6, 3, 6, kNoState, 6, 3, 6, 4, 6, 5, 6});
}

inline Alphabet letters(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(names);
}

/// Partial DFA with each edge present with probability `density`.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k, double density = 0.7) {
  std::bernoulli_distribution edge(density), fin(0.4);
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  std::vector<State> t(n * k, kNoState);
  std::vector<State> finals;
  for (State q = 0; q < n; ++q) {
    if (fin(rng)) finals.push_back(q);
    for (std::size_t c = 0; c < k; ++c)
      if (edge(rng)) t[q * k + c] = target(rng);
  }
  if (finals.empty()) finals.push_back(static_cast<State>(n - 1));
  return Dfa(letters(k), n, 0, finals, t);
}

/// Random minimal DFA with exactly `n` states, by rejection.
inline Dfa random_minimal_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k, double density = 0.7) {
  while (true) {
    Dfa m = minimize(random_dfa(rng, n + 2, k, density));
    if (!m.is_empty_language() && m.num_states() == n) return m;
  }
}

inline Nfa random_nfa(std::mt19937_64& rng, std::size_t n, std::size_t k, double density = 0.3) {
  std::bernoulli_distribution edge(density), fin(0.4);
  std::vector<Transition> ts;
  std::vector<State> finals;
  for (State q = 0; q < n; ++q) {
    if (fin(rng)) finals.push_back(q);
    for (std::size_t c = 0; c < k; ++c)
      for (State p = 0; p < n; ++p)
        if (edge(rng)) ts.push_back({q, static_cast<Symbol>(c), p});
  }
  return Nfa(letters(k), n, {0}, finals, ts);
}

/// Every trimmed minimal DFA with at most `max_n` states over `k` symbols, one
/// per isomorphism class.
inline std::vector<Dfa> all_minimal_dfas(std::size_t max_n, std::size_t k) {
  std::vector<Dfa> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t cells = n * k;
    std::vector<State> t(cells, 0);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < cells; ++i) combos *= n + 1;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < cells; ++i, c /= n + 1) t[i] = c % (n + 1) == n ? kNoState : static_cast<State>(c % (n + 1));
      for (std::size_t fmask = 1; fmask < (std::size_t{1} << n); ++fmask) {
        std::vector<State> finals;
        for (State q = 0; q < n; ++q)
          if (fmask >> q & 1) finals.push_back(q);
        const Dfa d(letters(k), n, 0, finals, t);
        const Dfa m = minimize(d);
        if (m.num_states() == n && m == d) out.push_back(d);
      }
    }
  }
  return out;
}

}  // namespace wat::testing
