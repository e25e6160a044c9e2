#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wat/automaton.hpp"
#include "wat/colex.hpp"
#include "wat/error.hpp"
#include "wat/limits.hpp"
#include "wat/wheeler_language.hpp"

namespace wat {

/// A DFA together with a Wheeler order on its states.
struct WheelerDfa {
  Dfa dfa;
  WheelerOrder order;
};

/// One representative per ≡_L^c class, sorted co-lexicographically.
struct Fingerprint {
  std::vector<Word> reps;
};

struct WordPair {
  Word m;  ///< co-lex smaller end
  Word M;  ///< co-lex larger end
  bool operator==(const WordPair&) const = default;
};

using PairSet = std::vector<WordPair>;

/// Default length budget n^2 + n for an n-state DFA.
std::size_t bounded_budget(const Dfa& d);

/// Greatest word of I_q strictly co-lex smaller than `g`, among words of length
/// at most `budget` (0 selects n^2 + n). Throws PreconditionError when |g|
/// exceeds the budget or `q` is out of range.
std::optional<Word> greatest_smaller(const Dfa& d, State q, const Word& g, std::size_t budget = 0);

/// Smallest word of I_q strictly co-lex greater than `g`, same conventions.
std::optional<Word> smallest_greater(const Dfa& d, State q, const Word& g, std::size_t budget = 0);

/// For every state, the co-lex least and greatest incoming word within the budget.
PairSet min_max_pairs(const Dfa& d, std::size_t budget = 0);

/// Checks invariants 0 to 2 of a pair set over a minimal DFA. Returns a
/// description of the first failure.
std::optional<std::string> check_pair_invariants(const Dfa& d, const PairSet& t);

/// Replaces each pair whose ends differ by its two ends, and adds one pair for
/// every symbol strictly between the two end symbols that enters the state.
PairSet expand(const PairSet& t, const Dfa& d, std::size_t budget = 0);

struct FingerprintOptions {
  /// 0 selects 4 * (n^2 + n) * n.
  std::size_t iteration_cap = 0;
  /// Check the pair invariants after every iteration.
  bool check_invariants = false;
};

struct FingerprintRun {
  Fingerprint fingerprint;
  std::size_t iterations = 0;
};

/// Splits overlapping pairs until none remain, then expands. `d` must be
/// minimal with a Wheeler language. Representatives have length below n + n^2.
/// Throws ResourceError naming the last overlapping pairs when the cap is hit.
FingerprintRun fingerprint_run(const Dfa& d, const FingerprintOptions& opts = {});
Fingerprint fingerprint(const Dfa& d, const FingerprintOptions& opts = {});

/// Builds the minimum WDFA whose states are the representatives, numbered by
/// rank. Throws InputError for a fingerprint that is unsorted, not made of
/// prefixes, or holds two words of one class.
WheelerDfa fingerprint_to_min_wdfa(const Dfa& d, const Fingerprint& f);

/// Raised when a minimum WDFA is requested for a language that is not Wheeler.
class NonWheelerError : public Error {
 public:
  NonWheelerError(const std::string& what, NonWheelerWitness witness)
      : Error(what), witness_(std::move(witness)) {}
  const NonWheelerWitness& witness() const noexcept { return witness_; }

 private:
  NonWheelerWitness witness_;
};

/// Minimum WDFA of L(d). Throws NonWheelerError when L(d) is not Wheeler.
WheelerDfa min_wdfa(const Dfa& d, const FingerprintOptions& opts = {});

struct WnfaDeterminization {
  WheelerDfa result;
  /// Member states of each result state, as ranks of the input order.
  std::vector<std::vector<State>> subsets;
  /// 2n - 1 - |Σ_eff| for the input.
  std::size_t bound = 0;
};

/// Subset construction on a Wheeler NFA. Every reached subset must be an
/// interval of `order`, the result must be Wheeler and within the bound;
/// a failure throws PreconditionError, which means the order was not valid.
WnfaDeterminization determinize_wnfa(const Nfa& a, const WheelerOrder& order,
                                     std::size_t cap = Limits{}.det_cap);

}  // namespace wat
