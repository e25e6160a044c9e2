#include "wat/colex.hpp"

#include <algorithm>
#include <unordered_map>

#include "wat/error.hpp"

namespace wat {

std::strong_ordering colex_cmp(std::span<const Symbol> x, std::span<const Symbol> y) {
  auto i = x.size(), j = y.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    if (x[i] != y[j]) return x[i] <=> y[j];
  }
  return x.size() <=> y.size();
}

WordPool::WordPool() : parent_{kNone}, sym_{kHash}, len_{0} {}

WordPool::Id WordPool::extend(Id parent, Symbol s) {
  parent_.push_back(parent);
  sym_.push_back(s);
  len_.push_back(len_[parent] + 1);
  return static_cast<Id>(parent_.size() - 1);
}

std::strong_ordering WordPool::cmp(Id x, Id y) const {
  while (x != y) {
    if (x == kEpsilon) return std::strong_ordering::less;
    if (y == kEpsilon) return std::strong_ordering::greater;
    if (sym_[x] != sym_[y]) return sym_[x] <=> sym_[y];
    x = parent_[x];
    y = parent_[y];
  }
  return std::strong_ordering::equal;
}

Word WordPool::word(Id w) const {
  Word out(len_[w]);
  for (auto i = out.size(); i > 0; --i) {
    out[i - 1] = sym_[w];
    w = parent_[w];
  }
  return out;
}

MinMaxTable::MinMaxTable(const Dfa& d, std::size_t budget)
    : n_(d.num_states()), budget_(budget != 0 ? budget : d.num_states() * d.num_states() + d.num_states()) {
  const std::size_t k = d.alphabet().size();
  const ReverseIndex rev(d);
  min_.assign((budget_ + 1) * n_, WordPool::kNone);
  max_.assign((budget_ + 1) * n_, WordPool::kNone);
  if (d.is_empty_language()) return;
  const State q0 = d.initial();
  min_[q0] = max_[q0] = WordPool::kEpsilon;
  // Interning keeps the pool a trie, so equal words share one id.
  std::unordered_map<std::uint64_t, WordPool::Id> interned;
  const auto make = [&](WordPool::Id parent, Symbol s) {
    const std::uint64_t key = (std::uint64_t{parent} << 32) | static_cast<std::uint32_t>(s);
    auto [it, fresh] = interned.emplace(key, 0);
    if (fresh) it->second = pool_.extend(parent, s);
    return it->second;
  };
  for (std::size_t j = 1; j <= budget_; ++j) {
    const WordPool::Id* prev_min = &min_[(j - 1) * n_];
    const WordPool::Id* prev_max = &max_[(j - 1) * n_];
    for (State q = 0; q < n_; ++q) {
      WordPool::Id lo = WordPool::kNone, hi = WordPool::kNone;
      Symbol lo_sym = kHash, hi_sym = kHash;
      for (std::size_t c = 0; c < k; ++c) {
        for (State p : rev.preds(q, static_cast<Symbol>(c))) {
          if (prev_min[p] == WordPool::kNone) continue;
          if (lo_sym == kHash || (lo_sym == static_cast<Symbol>(c) && pool_.cmp(prev_min[p], lo) < 0)) {
            lo = prev_min[p];
            lo_sym = static_cast<Symbol>(c);
          }
          if (hi_sym != static_cast<Symbol>(c) || pool_.cmp(prev_max[p], hi) > 0) {
            hi = prev_max[p];
            hi_sym = static_cast<Symbol>(c);
          }
        }
      }
      WordPool::Id& out_min = min_[j * n_ + q];
      WordPool::Id& out_max = max_[j * n_ + q];
      out_min = q == q0 ? WordPool::kEpsilon : (lo_sym == kHash ? WordPool::kNone : make(lo, lo_sym));
      out_max = hi_sym != kHash ? make(hi, hi_sym) : (q == q0 ? WordPool::kEpsilon : WordPool::kNone);
    }
  }
}

std::optional<Word> MinMaxTable::min(State q, std::size_t j) const {
  if (q >= n_ || j > budget_) throw PreconditionError("min/max table index out of range");
  const auto id = min_id(q, j);
  if (id == WordPool::kNone) return std::nullopt;
  return pool_.word(id);
}

std::optional<Word> MinMaxTable::max(State q, std::size_t j) const {
  if (q >= n_ || j > budget_) throw PreconditionError("min/max table index out of range");
  const auto id = max_id(q, j);
  if (id == WordPool::kNone) return std::nullopt;
  return pool_.word(id);
}

std::optional<Word> MinMaxTable::min_over(std::span<const State> states, std::size_t j) const {
  WordPool::Id best = WordPool::kNone;
  for (State q : states) {
    const auto id = min_id(q, j);
    if (id != WordPool::kNone && (best == WordPool::kNone || pool_.cmp(id, best) < 0)) best = id;
  }
  if (best == WordPool::kNone) return std::nullopt;
  return pool_.word(best);
}

std::optional<Word> MinMaxTable::max_over(std::span<const State> states, std::size_t j) const {
  WordPool::Id best = WordPool::kNone;
  for (State q : states) {
    const auto id = max_id(q, j);
    if (id != WordPool::kNone && (best == WordPool::kNone || pool_.cmp(id, best) > 0)) best = id;
  }
  if (best == WordPool::kNone) return std::nullopt;
  return pool_.word(best);
}

}  // namespace wat
