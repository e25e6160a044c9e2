#pragma once

#include <optional>
#include <vector>

#include "wat/colex.hpp"

namespace wat::detail {

// Shared state for repeated bounded searches on one DFA.
class BoundedSearch {
 public:
  BoundedSearch(const Dfa& d, std::size_t budget);

  std::size_t budget() const noexcept { return table_.budget(); }
  const MinMaxTable& table() const noexcept { return table_; }

  std::optional<Word> greatest_smaller(State q, const Word& g) { return smaller_in({&q, 1}, g, budget()); }
  std::optional<Word> smallest_greater(State q, const Word& g) { return greater_in({&q, 1}, g, budget()); }
  // Same searches over the union of I_t for t in `targets`, words of length at most `limit`.
  std::optional<Word> smaller_in(std::span<const State> targets, const Word& g, std::size_t limit);
  std::optional<Word> greater_in(std::span<const State> targets, const Word& g, std::size_t limit);
  // Least word within budget whose last symbol is c and which ends in q.
  std::optional<Word> min_ending_with(State q, Symbol c);
  // Least word of I_q ending with c that is co-lex greater than `prev`.
  std::optional<Word> least_after(State q, Symbol c, const Word& prev);

 private:
  void build_levels(std::span<const State> targets, const Word& g, std::size_t limit);
  std::span<const State> preds_of_level(std::size_t k, Symbol c);

  const Dfa& d_;
  ReverseIndex rev_;
  MinMaxTable table_;
  std::vector<std::vector<State>> levels_;
  std::vector<State> scratch_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace wat::detail
