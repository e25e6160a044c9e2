#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wat/automaton.hpp"
#include "wat/limits.hpp"

namespace wat {

/// Removes states that are unreachable or cannot reach a final state.
///
/// Surviving states keep their relative order. When no accepting path exists the
/// result is the flagged empty automaton.
Nfa trim(const Nfa& a);
Dfa trim(const Dfa& d);

/// Renumbers the reachable part breadth-first from the initial state, visiting
/// successors in symbol order. Unreachable states are dropped.
Dfa canonicalize(const Dfa& d);

/// Applies `new_id[q]` to every state; `new_id` must be a permutation.
Dfa permute(const Dfa& d, std::span<const State> new_id);
Nfa permute(const Nfa& a, std::span<const State> new_id);

/// Equality after canonical renumbering.
bool isomorphic(const Dfa& x, const Dfa& y);

struct InputConsistent {
  Nfa nfa;
  /// State of the input automaton each result state copies.
  std::vector<State> origin;
  /// Unique incoming label of each result state, `kHash` for initial states.
  std::vector<Symbol> label;
};

/// Splits every state into one copy per incoming label, plus a `#` copy for an
/// initial state that also has incoming edges.
InputConsistent make_input_consistent(const Nfa& a);

/// The label function when all edges entering each state share a symbol and
/// initial states have no incoming edges.
std::optional<std::vector<Symbol>> label_function(const Nfa& a);
std::optional<std::vector<Symbol>> label_function(const Dfa& d);

struct Determinized {
  Dfa dfa;
  /// Sorted member states of each result state.
  std::vector<std::vector<State>> subsets;
};

/// Subset construction over reachable subsets, numbered breadth-first.
/// Throws ResourceError when more than `cap` subsets appear.
Determinized determinize(const Nfa& a, std::size_t cap = Limits{}.det_cap);

/// Minimal trimmed DFA for the same language, canonically numbered.
Dfa minimize(const Dfa& d);

/// Trimmed product automaton for the intersection, canonically numbered.
Dfa product_intersection(const Dfa& x, const Dfa& y);

/// Exact language equality.
bool same_language(const Dfa& x, const Dfa& y);

/// True when `w` labels a path from some initial state to `q`.
bool incoming_member(const Nfa& a, State q, std::span<const Symbol> w);

/// True when I_q = I_p, decided on the reachable subsets of the powerset automaton.
bool same_incoming(const Nfa& a, State q, State p, std::size_t cap = Limits{}.det_cap);

/// True when distinct states have distinct incoming languages.
bool is_reduced(const Nfa& a, std::size_t cap = Limits{}.det_cap);

/// Adds a fresh initial state 0 when there are several initial states or the
/// initial state has incoming edges, then trims. Other automata are returned as is.
Nfa normalize_initial(const Nfa& a);
Dfa normalize_initial(const Dfa& d);

/// Number of distinct symbols labelling some transition.
std::size_t effective_alphabet_size(const Nfa& a);
std::size_t effective_alphabet_size(const Dfa& d);

}  // namespace wat
