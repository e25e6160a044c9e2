#include "search.hpp"

#include "wat/error.hpp"
#include "wat/min_wdfa.hpp"

namespace wat {
namespace detail {

BoundedSearch::BoundedSearch(const Dfa& d, std::size_t budget)
    : d_(d), rev_(d), table_(d, budget), mark_(d.num_states(), 0) {}

// levels_[k] = states from which the suffix of g of length k leads to q.
void BoundedSearch::build_levels(std::span<const State> targets, const Word& g, std::size_t limit) {
  for (State q : targets)
    if (q >= d_.num_states()) throw PreconditionError("state out of range");
  if (limit > budget()) throw PreconditionError("search limit above the table budget");
  if (g.size() > limit) throw PreconditionError("word longer than the length budget");
  levels_.assign(1, std::vector<State>(targets.begin(), targets.end()));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Symbol c = g[g.size() - 1 - k];
    if (!d_.alphabet().valid(c)) throw PreconditionError("symbol outside the alphabet");
    const auto preds = preds_of_level(k, c);
    levels_.emplace_back(preds.begin(), preds.end());
    if (levels_.back().empty()) break;
  }
}

std::span<const State> BoundedSearch::preds_of_level(std::size_t k, Symbol c) {
  ++stamp_;
  scratch_.clear();
  for (State s : levels_[k])
    for (State p : rev_.preds(s, c))
      if (mark_[p] != stamp_) {
        mark_[p] = stamp_;
        scratch_.push_back(p);
      }
  return scratch_;
}

namespace {

Word assemble(Word prefix, Symbol c, const Word& g, std::size_t k) {
  prefix.push_back(c);
  prefix.insert(prefix.end(), g.end() - static_cast<std::ptrdiff_t>(k), g.end());
  return prefix;
}

}  // namespace

// The answer shares the longest possible suffix with g; at that level the
// symbol before the shared suffix is as large as possible below g's, and an
// answer ending exactly at the suffix (q0 in the level) comes last.
std::optional<Word> BoundedSearch::smaller_in(std::span<const State> targets, const Word& g, std::size_t limit) {
  build_levels(targets, g, limit);
  const State q0 = d_.initial();
  for (std::size_t k = std::min(levels_.size(), g.size()); k-- > 0;) {
    if (levels_[k].empty()) continue;
    const Symbol next = g[g.size() - 1 - k];
    if (k + 1 <= limit) {
      for (Symbol c = next - 1; c >= 0; --c) {
        const auto best = table_.max_over(preds_of_level(k, c), limit - k - 1);
        if (best) return assemble(*best, c, g, k);
      }
    }
    for (State s : levels_[k])
      if (s == q0) return Word(g.end() - static_cast<std::ptrdiff_t>(k), g.end());
  }
  return std::nullopt;
}

// Dual search; a longer shared suffix gives a smaller answer, so words having
// all of g as a proper suffix are preferred whenever one exists.
std::optional<Word> BoundedSearch::greater_in(std::span<const State> targets, const Word& g, std::size_t limit) {
  build_levels(targets, g, limit);
  const auto k_sigma = static_cast<Symbol>(d_.alphabet().size());
  for (std::size_t k = levels_.size(); k-- > 0;) {
    if (levels_[k].empty() || k + 1 > limit) continue;
    const Symbol from = k == g.size() ? 0 : g[g.size() - 1 - k] + 1;
    for (Symbol c = from; c < k_sigma; ++c) {
      const auto best = table_.min_over(preds_of_level(k, c), limit - k - 1);
      if (best) return assemble(*best, c, g, k);
    }
  }
  return std::nullopt;
}

std::optional<Word> BoundedSearch::min_ending_with(State q, Symbol c) {
  if (budget() == 0) return std::nullopt;
  levels_.assign(1, {q});
  auto best = table_.min_over(preds_of_level(0, c), budget() - 1);
  if (!best) return std::nullopt;
  best->push_back(c);
  return best;
}

std::optional<Word> BoundedSearch::least_after(State q, Symbol c, const Word& prev) {
  if (budget() == 0 || (!prev.empty() && prev.back() > c)) return std::nullopt;
  levels_.assign(1, {q});
  const auto span = preds_of_level(0, c);
  const std::vector<State> preds(span.begin(), span.end());
  std::optional<Word> best;
  if (prev.empty() || prev.back() < c) {
    best = table_.min_over(preds, budget() - 1);
  } else {
    const Word head(prev.begin(), prev.end() - 1);
    if (head.size() < budget()) best = greater_in(preds, head, budget() - 1);
  }
  if (best) best->push_back(c);
  return best;
}

}  // namespace detail

std::size_t bounded_budget(const Dfa& d) { return d.num_states() * d.num_states() + d.num_states(); }

std::optional<Word> greatest_smaller(const Dfa& d, State q, const Word& g, std::size_t budget) {
  detail::BoundedSearch s(d, budget != 0 ? budget : bounded_budget(d));
  return s.greatest_smaller(q, g);
}

std::optional<Word> smallest_greater(const Dfa& d, State q, const Word& g, std::size_t budget) {
  detail::BoundedSearch s(d, budget != 0 ? budget : bounded_budget(d));
  return s.smallest_greater(q, g);
}

PairSet min_max_pairs(const Dfa& d, std::size_t budget) {
  const MinMaxTable table(d, budget != 0 ? budget : bounded_budget(d));
  PairSet out;
  if (d.is_empty_language()) return out;
  for (State q = 0; q < d.num_states(); ++q) {
    auto lo = table.min(q, table.budget());
    auto hi = table.max(q, table.budget());
    if (!lo || !hi) throw PreconditionError("state " + std::to_string(q) + " is unreachable within the budget");
    out.push_back({std::move(*lo), std::move(*hi)});
  }
  return out;
}

}  // namespace wat
