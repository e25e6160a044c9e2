#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "wat/alphabet.hpp"

namespace wat {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

struct Transition {
  State src;
  Symbol sym;
  State dst;

  auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic automaton with a set of initial states.
///
/// Transitions are kept sorted by (src, sym, dst) without duplicates, so the
/// out-edges of a state form a contiguous run. The distinguished empty-language
/// value is a single non-final initial state without transitions, flagged.
class Nfa {
 public:
  Nfa() = default;
  /// Validates ids and symbols (InputError) and normalizes the transition list.
  Nfa(Alphabet alphabet, std::size_t num_states, std::vector<State> initials,
      std::vector<State> finals, std::vector<Transition> transitions);

  static Nfa empty(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  std::span<const State> initials() const noexcept { return initials_; }
  std::span<const State> finals() const noexcept { return finals_; }
  bool is_initial(State q) const;
  bool is_final(State q) const noexcept { return final_mask_[q] != 0; }
  std::span<const Transition> transitions() const noexcept { return transitions_; }
  bool is_empty_language() const noexcept { return empty_; }

  /// Out-edges of `q`, sorted by (sym, dst).
  std::span<const Transition> out(State q) const;
  /// In-edges of `q`, sorted by (sym, src).
  std::span<const Transition> in(State q) const;

  /// At most one destination per (src, sym) and a single initial state.
  bool is_deterministic() const;

  bool operator==(const Nfa& other) const;

 private:
  void index();

  Alphabet alphabet_;
  std::size_t num_states_ = 0;
  std::vector<State> initials_;
  std::vector<State> finals_;
  std::vector<char> final_mask_;
  std::vector<Transition> transitions_;
  std::vector<Transition> by_dst_;
  std::vector<std::size_t> out_offset_;
  std::vector<std::size_t> in_offset_;
  bool empty_ = false;
};

/// Partial deterministic automaton stored as a dense table.
class Dfa {
 public:
  Dfa() = default;
  /// `table[q * |Σ| + a]` is the successor or kNoState.
  Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<State> finals,
      std::vector<State> table);

  static Dfa empty(Alphabet alphabet);
  /// Throws PreconditionError when `nfa` is not deterministic.
  static Dfa from_nfa(const Nfa& nfa);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  State initial() const noexcept { return initial_; }
  bool is_final(State q) const noexcept { return final_mask_[q] != 0; }
  std::vector<State> finals() const;
  bool is_empty_language() const noexcept { return empty_; }

  State next(State q, Symbol a) const noexcept {
    return table_[static_cast<std::size_t>(q) * alphabet_.size() + static_cast<std::size_t>(a)];
  }
  /// State reached from `from` by `word`, kNoState when the run dies.
  State run(std::span<const Symbol> word, State from) const;
  State run(std::span<const Symbol> word) const { return run(word, initial_); }
  bool accepts(std::span<const Symbol> word) const;

  std::size_t num_transitions() const;
  /// True when the initial state has an incoming edge.
  bool initial_has_in_edges() const;

  Nfa to_nfa() const;

  bool operator==(const Dfa& other) const = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_ = 0;
  State initial_ = 0;
  std::vector<char> final_mask_;
  std::vector<State> table_;
  bool empty_ = false;
};

/// Predecessor lists of a DFA, `preds(q, a) = {p : δ(p, a) = q}`.
class ReverseIndex {
 public:
  explicit ReverseIndex(const Dfa& dfa);
  std::span<const State> preds(State q, Symbol a) const {
    const std::size_t slot = static_cast<std::size_t>(q) * sigma_ + static_cast<std::size_t>(a);
    return {lists_.data() + offset_[slot], lists_.data() + offset_[slot + 1]};
  }

 private:
  std::size_t sigma_;
  std::vector<std::size_t> offset_;
  std::vector<State> lists_;
};

}  // namespace wat
