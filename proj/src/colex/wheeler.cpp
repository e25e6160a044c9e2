#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "wat/colex.hpp"
#include "wat/constructions.hpp"
#include "wat/error.hpp"

namespace wat {

WheelerOrder WheelerOrder::from_sequence(std::vector<State> by_rank) {
  WheelerOrder o;
  o.rank_of.assign(by_rank.size(), SIZE_MAX);
  for (std::size_t i = 0; i < by_rank.size(); ++i) {
    if (by_rank[i] >= by_rank.size() || o.rank_of[by_rank[i]] != SIZE_MAX)
      throw InputError("order is not a permutation of the states");
    o.rank_of[by_rank[i]] = i;
  }
  o.by_rank = std::move(by_rank);
  return o;
}

WheelerOrder WheelerOrder::identity(std::size_t n) {
  std::vector<State> seq(n);
  for (State q = 0; q < n; ++q) seq[q] = q;
  return from_sequence(std::move(seq));
}

bool ColexRelation::is_total() const {
  for (State q = 0; q < n_; ++q)
    for (State p = q + 1; p < n_; ++p)
      if (!less(q, p) && !less(p, q)) return false;
  return true;
}

std::optional<WheelerOrder> ColexRelation::to_order() const {
  if (!is_total()) return std::nullopt;
  std::vector<std::pair<std::size_t, State>> below(n_);
  for (State p = 0; p < n_; ++p) {
    below[p] = {0, p};
    for (State q = 0; q < n_; ++q) below[p].first += less(q, p) ? 1 : 0;
  }
  std::sort(below.begin(), below.end());
  std::vector<State> seq;
  for (const auto& [c, p] : below) seq.push_back(p);
  return WheelerOrder::from_sequence(std::move(seq));
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotPermutation: return "not-permutation";
    case ViolationKind::MultipleInitials: return "multiple-initials";
    case ViolationKind::InitialHasInEdges: return "initial-has-in-edges";
    case ViolationKind::InitialNotMinimum: return "initial-not-minimum";
    case ViolationKind::LabelOrder: return "label-order";
    case ViolationKind::Propagation: return "propagation";
    case ViolationKind::NotInputConsistent: return "not-input-consistent";
    case ViolationKind::NoValidOrder: return "no-valid-order";
  }
  return "unknown";
}

std::string Violation::describe(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << to_string(kind);
  const auto edge = [&](const Transition& t) {
    os << " (q" << t.src << ", " << alphabet.name(t.sym) << ", q" << t.dst << ")";
  };
  if (first) edge(*first);
  if (second) edge(*second);
  return os.str();
}

namespace {

std::optional<Violation> check_initial(const Nfa& a, const WheelerOrder& order) {
  if (order.size() != a.num_states()) return Violation{ViolationKind::NotPermutation, {}, {}};
  if (a.initials().size() != 1) return Violation{ViolationKind::MultipleInitials, {}, {}};
  const State q0 = a.initials()[0];
  if (!a.in(q0).empty()) return Violation{ViolationKind::InitialHasInEdges, a.in(q0)[0], {}};
  if (order.rank_of[q0] != 0) return Violation{ViolationKind::InitialNotMinimum, {}, {}};
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_wheeler_conditions(const Nfa& a, const WheelerOrder& order) {
  if (auto v = check_initial(a, order)) return v;
  const auto& r = order.rank_of;
  std::vector<std::vector<Transition>> by_sym(a.alphabet().size());
  for (const Transition& t : a.transitions()) by_sym[static_cast<std::size_t>(t.sym)].push_back(t);

  // (i): every target of a smaller symbol precedes every target of a larger one.
  std::optional<Transition> top;
  for (const auto& edges : by_sym) {
    if (edges.empty()) continue;
    const Transition* low = &edges[0];
    for (const Transition& t : edges)
      if (r[t.dst] < r[low->dst]) low = &t;
    if (top && r[top->dst] >= r[low->dst]) return Violation{ViolationKind::LabelOrder, *top, *low};
    for (const Transition& t : edges)
      if (!top || r[t.dst] > r[top->dst]) top = t;
  }

  // (ii): within one symbol, targets are nondecreasing along source ranks.
  for (auto& edges : by_sym) {
    std::sort(edges.begin(), edges.end(), [&](const Transition& x, const Transition& y) {
      return std::pair(r[x.src], r[x.dst]) < std::pair(r[y.src], r[y.dst]);
    });
    const std::size_t m = edges.size();
    // suffix[i]: edge with the smallest target among edges[i..], the largest source winning ties.
    std::vector<std::size_t> suffix(m + 1, SIZE_MAX);
    for (std::size_t i = m; i-- > 0;) {
      suffix[i] = suffix[i + 1];
      if (suffix[i] == SIZE_MAX || r[edges[i].dst] < r[edges[suffix[i]].dst]) suffix[i] = i;
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = i + 1;
      while (j < m && r[edges[j].src] == r[edges[i].src]) ++j;
      if (j < m && r[edges[suffix[j]].dst] < r[edges[i].dst])
        return Violation{ViolationKind::Propagation, edges[i], edges[suffix[j]]};
    }
  }
  return std::nullopt;
}

std::vector<Violation> list_wheeler_violations(const Nfa& a, const WheelerOrder& order) {
  if (auto v = check_initial(a, order)) return {*v};
  std::vector<Violation> out;
  const auto& r = order.rank_of;
  for (const Transition& e : a.transitions())
    for (const Transition& f : a.transitions()) {
      if (e.sym < f.sym && !(r[e.dst] < r[f.dst])) out.push_back({ViolationKind::LabelOrder, e, f});
      if (e.sym == f.sym && r[e.src] < r[f.src] && r[f.dst] < r[e.dst]) out.push_back({ViolationKind::Propagation, e, f});
    }
  return out;
}

WheelerCertificate is_wheeler_dfa(const Dfa& d) {
  const Nfa a = d.to_nfa();
  if (d.initial_has_in_edges()) return {std::nullopt, Violation{ViolationKind::InitialHasInEdges, a.in(d.initial())[0], {}}};
  const std::size_t n = d.num_states();
  const MinMaxTable table(d, n);
  std::vector<State> seq(n);
  for (State q = 0; q < n; ++q) {
    seq[q] = q;
    if (table.min_id(q, n) == WordPool::kNone) throw PreconditionError("DFA is not trimmed");
  }
  std::sort(seq.begin(), seq.end(),
            [&](State x, State y) { return table.pool().cmp(table.min_id(x, n), table.min_id(y, n)) < 0; });
  WheelerOrder order = WheelerOrder::from_sequence(std::move(seq));
  if (auto v = check_wheeler_conditions(a, order)) return {std::nullopt, v};
  return {std::move(order), std::nullopt};
}

ColexRelation colex_partial_order_dfa(const Dfa& d) {
  const auto label = label_function(d);
  if (!label) throw PreconditionError("the DFA is not input-consistent");
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  const State q0 = d.initial();
  ColexRelation rel(n);
  std::deque<std::pair<State, State>> removed;
  for (State q = 0; q < n; ++q)
    for (State p = 0; p < n; ++p) {
      if (q == p) continue;
      bool cand;
      if (p == q0) cand = false;
      else if (q == q0) cand = true;
      else cand = (*label)[q] <= (*label)[p];
      rel.set(q, p, cand);
      if (!cand) removed.emplace_back(q, p);
    }
  // A pair with a common label survives only if every pair of predecessors does.
  while (!removed.empty()) {
    const auto [u, v] = removed.front();
    removed.pop_front();
    for (std::size_t a = 0; a < k; ++a) {
      const State q = d.next(u, static_cast<Symbol>(a)), p = d.next(v, static_cast<Symbol>(a));
      if (q == kNoState || p == kNoState || q == p || !rel.less(q, p)) continue;
      rel.set(q, p, false);
      removed.emplace_back(q, p);
    }
  }
  for (State q = 0; q < n; ++q)
    for (State p = q + 1; p < n; ++p)
      if (rel.less(q, p) && rel.less(p, q)) {
        rel.set(q, p, false);
        rel.set(p, q, false);
      }
  return rel;
}

WheelerCertificate is_wheeler_nfa_bruteforce(const Nfa& a, std::size_t cap) {
  const std::size_t n = a.num_states();
  if (n > cap) throw ResourceError("exhaustive Wheeler search limited to " + std::to_string(cap) + " states");
  if (a.initials().size() != 1) return {std::nullopt, Violation{ViolationKind::MultipleInitials, {}, {}}};
  const State q0 = a.initials()[0];
  if (!a.in(q0).empty()) return {std::nullopt, Violation{ViolationKind::InitialHasInEdges, a.in(q0)[0], {}}};
  const auto label = label_function(a);
  if (!label) return {std::nullopt, Violation{ViolationKind::NotInputConsistent, {}, {}}};

  std::vector<State> seq{q0};
  std::vector<std::size_t> rank(n, SIZE_MAX);
  rank[q0] = 0;
  const auto ts = a.transitions();
  // Checks the pairs of same-symbol edges whose four endpoints are placed.
  const auto consistent = [&] {
    for (const Transition& e : ts)
      for (const Transition& f : ts) {
        if (e.sym != f.sym) continue;
        if (rank[e.src] == SIZE_MAX || rank[f.src] == SIZE_MAX || rank[e.dst] == SIZE_MAX || rank[f.dst] == SIZE_MAX)
          continue;
        if (rank[e.src] < rank[f.src] && rank[f.dst] < rank[e.dst]) return false;
      }
    return true;
  };
  const auto search = [&](auto&& self) -> bool {
    if (seq.size() == n) return true;
    const Symbol floor = (*label)[seq.back()];
    for (State q = 0; q < n; ++q) {
      if (rank[q] != SIZE_MAX || (*label)[q] < floor) continue;
      // Labels must be nondecreasing along the order: no unplaced state may carry a smaller label.
      bool smallest = true;
      for (State p = 0; p < n && smallest; ++p)
        if (rank[p] == SIZE_MAX && (*label)[p] < (*label)[q]) smallest = false;
      if (!smallest) continue;
      rank[q] = seq.size();
      seq.push_back(q);
      if (consistent() && self(self)) return true;
      seq.pop_back();
      rank[q] = SIZE_MAX;
    }
    return false;
  };
  if (!search(search)) return {std::nullopt, Violation{ViolationKind::NoValidOrder, {}, {}}};
  WheelerOrder order = WheelerOrder::from_sequence(seq);
  if (auto v = check_wheeler_conditions(a, order)) return {std::nullopt, v};
  return {std::move(order), std::nullopt};
}

bool is_interval_image(const Dfa& d, const WheelerOrder& order, std::size_t lo, std::size_t hi,
                       std::span<const Symbol> word) {
  std::vector<std::size_t> ranks;
  for (std::size_t i = lo; i <= hi; ++i) {
    const State r = d.run(word, order.by_rank[i]);
    if (r != kNoState) ranks.push_back(order.rank_of[r]);
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return ranks.empty() || ranks.back() - ranks.front() + 1 == ranks.size();
}

std::optional<PathCoherenceFailure> path_coherence_check(const Dfa& d, const WheelerOrder& order, std::size_t samples,
                                                         std::uint64_t seed) {
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  if (d.is_empty_language() || k == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t lo = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t hi = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (lo > hi) std::swap(lo, hi);
    // The word follows a random walk from a state of the interval so that the image is rarely empty.
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
    State cur = order.by_rank[std::uniform_int_distribution<std::size_t>(lo, hi)(rng)];
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Symbol> out;
      for (std::size_t a = 0; a < k; ++a)
        if (d.next(cur, static_cast<Symbol>(a)) != kNoState) out.push_back(static_cast<Symbol>(a));
      if (out.empty()) break;
      const Symbol a = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
      w.push_back(a);
      cur = d.next(cur, a);
    }
    if (!is_interval_image(d, order, lo, hi, w)) {
      std::vector<State> reached;
      for (std::size_t i = lo; i <= hi; ++i)
        if (State r = d.run(w, order.by_rank[i]); r != kNoState) reached.push_back(r);
      return PathCoherenceFailure{lo, hi, std::move(w), std::move(reached)};
    }
  }
  return std::nullopt;
}

}  // namespace wat
