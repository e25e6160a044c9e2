#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wat/automaton.hpp"

namespace wat {

/// Co-lexicographic comparison: last symbols first, a proper suffix is smaller.
std::strong_ordering colex_cmp(std::span<const Symbol> x, std::span<const Symbol> y);
inline bool colex_less(std::span<const Symbol> x, std::span<const Symbol> y) { return colex_cmp(x, y) < 0; }

/// Words stored as backward links, so extending a word by one symbol is O(1)
/// and common prefixes are shared. Node 0 is ε.
class WordPool {
 public:
  using Id = std::uint32_t;
  static constexpr Id kEpsilon = 0;
  static constexpr Id kNone = UINT32_MAX;

  WordPool();
  Id extend(Id parent, Symbol s);
  std::size_t length(Id w) const { return len_[w]; }
  Symbol last(Id w) const { return sym_[w]; }
  std::strong_ordering cmp(Id x, Id y) const;
  Word word(Id w) const;

 private:
  std::vector<Id> parent_;
  std::vector<Symbol> sym_;
  std::vector<std::uint32_t> len_;
};

/// Co-lex least and greatest incoming word of every state for every length budget.
///
/// Entry (q, j) is built from the entries (p, j-1) of the predecessors of q: the
/// incoming symbol decides first and the predecessor entry breaks ties. The
/// initial state also has ε at every budget.
class MinMaxTable {
 public:
  /// `budget` defaults to n^2 + n.
  explicit MinMaxTable(const Dfa& d, std::size_t budget = 0);

  std::size_t budget() const noexcept { return budget_; }
  std::optional<Word> min(State q, std::size_t j) const;
  std::optional<Word> max(State q, std::size_t j) const;

  /// Extremes over a set of states.
  std::optional<Word> min_over(std::span<const State> states, std::size_t j) const;
  std::optional<Word> max_over(std::span<const State> states, std::size_t j) const;

  WordPool::Id min_id(State q, std::size_t j) const { return min_[j * n_ + q]; }
  WordPool::Id max_id(State q, std::size_t j) const { return max_[j * n_ + q]; }
  const WordPool& pool() const noexcept { return pool_; }

 private:
  std::size_t n_;
  std::size_t budget_;
  WordPool pool_;
  std::vector<WordPool::Id> min_;
  std::vector<WordPool::Id> max_;
};

/// A total order on states, smallest first.
struct WheelerOrder {
  std::vector<State> by_rank;
  std::vector<std::size_t> rank_of;

  static WheelerOrder from_sequence(std::vector<State> by_rank);
  static WheelerOrder identity(std::size_t n);
  bool less(State q, State p) const { return rank_of[q] < rank_of[p]; }
  std::size_t size() const { return by_rank.size(); }
};

/// A strict relation on states stored as a dense matrix.
class ColexRelation {
 public:
  explicit ColexRelation(std::size_t n = 0) : n_(n), less_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  bool less(State q, State p) const { return less_[q * n_ + p] != 0; }
  void set(State q, State p, bool v) { less_[q * n_ + p] = v ? 1 : 0; }
  /// Every pair of distinct states is comparable.
  bool is_total() const;
  /// The order itself when total.
  std::optional<WheelerOrder> to_order() const;
  bool operator==(const ColexRelation&) const = default;

 private:
  std::size_t n_;
  std::vector<char> less_;
};

enum class ViolationKind {
  NotPermutation,
  MultipleInitials,
  InitialHasInEdges,
  InitialNotMinimum,
  LabelOrder,   ///< condition (i): a1 ≺ a2 but not v1 < v2
  Propagation,  ///< condition (ii): a1 = a2, u1 < u2 but v2 < v1
  NotInputConsistent,
  NoValidOrder,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::optional<Transition> first;
  std::optional<Transition> second;

  std::string describe(const Alphabet& alphabet) const;
  bool operator==(const Violation&) const = default;
};

struct WheelerCertificate {
  std::optional<WheelerOrder> order;
  std::optional<Violation> violation;
  bool wheeler() const noexcept { return order.has_value(); }
};

/// Validates a claimed Wheeler order. Returns nothing when every condition holds,
/// otherwise the first violation found. For condition (ii) the reported pair is
/// the violating edge with the smallest source rank together with the edge of
/// largest source rank among those carrying the smallest later target.
std::optional<Violation> check_wheeler_conditions(const Nfa& a, const WheelerOrder& order);

/// Every violating transition pair, by direct enumeration.
std::vector<Violation> list_wheeler_violations(const Nfa& a, const WheelerOrder& order);

/// Wheelerness of a DFA: states sorted by their least incoming word, then checked.
WheelerCertificate is_wheeler_dfa(const Dfa& d);

/// The exact relation <_D of an input-consistent DFA as a greatest fixpoint.
/// Throws PreconditionError when the DFA is not input-consistent.
ColexRelation colex_partial_order_dfa(const Dfa& d);

/// Backtracking over orders that sort states by incoming label, which condition
/// (i) forces. Throws ResourceError above `cap` states.
WheelerCertificate is_wheeler_nfa_bruteforce(const Nfa& a, std::size_t cap = 9);

/// True when the states reached from ranks [lo, hi] by `word` form an interval.
bool is_interval_image(const Dfa& d, const WheelerOrder& order, std::size_t lo, std::size_t hi,
                       std::span<const Symbol> word);

struct PathCoherenceFailure {
  std::size_t lo, hi;
  Word word;
  std::vector<State> reached;
};

/// Samples intervals and words of length at most 2n and checks that images are
/// intervals. Returns the first failing probe.
std::optional<PathCoherenceFailure> path_coherence_check(const Dfa& d, const WheelerOrder& order, std::size_t samples,
                                                         std::uint64_t seed = 1);

}  // namespace wat
