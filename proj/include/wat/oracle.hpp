#pragma once

// Brute-force ground truth. Nothing here calls into the algorithmic modules;
// only the automaton and alphabet types are shared.

#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "wat/automaton.hpp"
#include "wat/limits.hpp"

namespace wat::oracle {

/// Co-lex comparison by reversal: true when x strictly precedes y.
bool colex_less(std::span<const Symbol> x, std::span<const Symbol> y);

/// Every word over `sigma` symbols of length at most `len`, shortest first.
std::vector<Word> all_words(std::size_t sigma, std::size_t len);

/// Membership by direct set simulation.
bool accepts(const Nfa& a, std::span<const Symbol> w);
bool accepts(const Dfa& d, std::span<const Symbol> w);

/// Membership agreement on every word of length at most `len`.
bool same_language_upto(const Nfa& x, const Nfa& y, std::size_t len);

/// States reached from the initial states by `w`.
std::vector<State> reach(const Nfa& a, std::span<const Symbol> w);

/// I_q ∩ Σ^{≤len}, co-lex sorted.
std::vector<Word> incoming_words(const Nfa& a, State q, std::size_t len);

struct PrefixEntry {
  Word word;
  State state;
  Symbol end;
};

struct BoundedPrefixSet {
  std::size_t length = 0;
  /// Pref(L) ∩ Σ^{≤length}, co-lex sorted, each word with the state it reaches.
  std::vector<PrefixEntry> entries;
};

/// Words readable from the initial state of `d`, i.e. Pref(L) for a trimmed DFA.
/// Throws ResourceError when `len` exceeds `cap`.
BoundedPrefixSet enum_pref(const Dfa& d, std::size_t len, std::size_t cap = Limits{}.enum_cap);

struct ClassBlock {
  Word rep;  ///< co-lex least word of the block
  State state;
  Symbol end;
  std::size_t size;
};

struct ClassBlocks {
  std::vector<ClassBlock> blocks;
  /// Set when the count still grows from length-1 to length, so the blocks are
  /// only a bounded view of the classes.
  bool bounded_only = false;
};

/// Maximal runs of constant (state, last symbol) in the co-lex sorted bounded
/// prefix set. A state that reappears after a different state opens a new block.
ClassBlocks equiv_c_classes_bounded(const Dfa& d, std::size_t len, std::size_t cap = Limits{}.enum_cap);

/// The same block structure for budgets far beyond explicit enumeration.
///
/// The co-lex sorted list of Σ^{≤r} is ε followed, for each symbol x in order,
/// by the sorted list of Σ^{≤r-1} with x appended. Block boundaries are counted
/// on that recursion, memoized on (pending state map, budget, end symbol).
class BlockCounter {
 public:
  explicit BlockCounter(const Dfa& d);

  /// Number of blocks of Pref(L) ∩ Σ^{≤len}.
  std::size_t count(std::size_t len);
  /// Zero-based block containing `w`; `w` must be readable and |w| ≤ len.
  std::size_t block_of(std::span<const Symbol> w, std::size_t len);

 private:
  struct Label {
    State state;
    Symbol end;
    bool operator==(const Label&) const = default;
  };
  struct Summary {
    std::size_t runs = 0;
    Label first{kNoState, kHash};
    Label last{kNoState, kHash};
  };
  using Key = std::tuple<std::vector<State>, std::size_t, Symbol>;

  static Summary join(const Summary& x, const Summary& y);
  Summary summarize(const std::vector<State>& f, std::size_t r, Symbol end);
  std::vector<State> compose(const std::vector<State>& f, Symbol x) const;

  const Dfa& d_;
  std::map<Key, Summary> memo_;
};

/// First total order (as the list of states from smallest to largest) in
/// lexicographic permutation order satisfying the Wheeler conditions, checked
/// naively on all transition pairs. Throws ResourceError above `cap` states.
std::optional<std::vector<State>> exhaustive_wheeler_order(const Nfa& a, std::size_t cap = Limits{}.order_cap);

struct Universality {
  bool universal = false;
  /// False when the subset construction hit the cap and the verdict comes from
  /// sampling words up to the fallback length.
  bool authoritative = true;
};

/// Universality through a complete subset construction.
Universality bounded_universality(const Nfa& a, std::size_t len, std::size_t cap = Limits{}.det_cap);

/// Co-lex least and greatest words of length at most `len` leading from the
/// initial states to some state of `targets`, chosen greedily on the reversed
/// word. Empty when no such word exists.
std::optional<Word> bounded_colex_min(const Nfa& a, std::span<const State> targets, std::size_t len);
std::optional<Word> bounded_colex_max(const Nfa& a, std::span<const State> targets, std::size_t len);

/// q < p in the DFA sense: every word of I_q precedes every word of I_p, judged
/// on words of length at most `len` (n^2+n when zero).
bool dfa_state_less(const Dfa& d, State q, State p, std::size_t len = 0);

/// q <_A p for NFAs: I_q ≠ I_p and no α∈I_q, β∈I_p, not both in I_q∩I_p, with
/// β ≺ α. Witnesses are searched up to d^2+d where d is the size of a naive
/// powerset automaton. Throws ResourceError above `cap` subsets.
bool nfa_state_less(const Nfa& a, State q, State p, std::size_t cap = Limits{}.det_cap);

/// Myhill-Nerode classes among readable words of length at most `word_len`,
/// separating words by accepted extensions of length at most `ctx_len`.
std::size_t nerode_class_count(const Dfa& d, std::size_t word_len, std::size_t ctx_len);

/// Smallest DFA with the Wheeler property recognizing L(d), found by trying
/// every label sequence and every state map into `d` for growing sizes, up to
/// `max_states`. States are numbered in Wheeler order. Returns nullopt if none
/// of size at most `max_states` exists.
std::optional<Dfa> brute_force_min_wdfa(const Dfa& d, std::size_t max_states);

}  // namespace wat::oracle
