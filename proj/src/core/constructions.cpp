#include "wat/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wat/error.hpp"

namespace wat {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size();
    for (State x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<char> forward_reach(const Nfa& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack(a.initials().begin(), a.initials().end());
  for (State q : stack) seen[q] = 1;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (const Transition& t : a.out(q))
      if (!seen[t.dst]) {
        seen[t.dst] = 1;
        stack.push_back(t.dst);
      }
  }
  return seen;
}

std::vector<char> backward_reach(const Nfa& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack(a.finals().begin(), a.finals().end());
  for (State q : stack) seen[q] = 1;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (const Transition& t : a.in(q))
      if (!seen[t.src]) {
        seen[t.src] = 1;
        stack.push_back(t.src);
      }
  }
  return seen;
}

// Keeps the states with keep[q] set, preserving their relative order.
Nfa restrict(const Nfa& a, const std::vector<char>& keep) {
  std::vector<State> id(a.num_states(), kNoState);
  State next = 0;
  for (State q = 0; q < a.num_states(); ++q)
    if (keep[q]) id[q] = next++;
  std::vector<State> init, fin;
  for (State q : a.initials())
    if (keep[q]) init.push_back(id[q]);
  for (State q : a.finals())
    if (keep[q]) fin.push_back(id[q]);
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions())
    if (keep[t.src] && keep[t.dst]) ts.push_back({id[t.src], t.sym, id[t.dst]});
  return Nfa(a.alphabet(), next, std::move(init), std::move(fin), std::move(ts));
}

}  // namespace

Nfa trim(const Nfa& a) {
  if (a.is_empty_language()) return a;
  const auto fwd = forward_reach(a);
  const auto bwd = backward_reach(a);
  std::vector<char> keep(a.num_states());
  bool any = false;
  for (State q = 0; q < a.num_states(); ++q) {
    keep[q] = fwd[q] && bwd[q];
    any = any || keep[q];
  }
  if (!any) return Nfa::empty(a.alphabet());
  if (std::all_of(keep.begin(), keep.end(), [](char c) { return c != 0; })) return a;
  return restrict(a, keep);
}

Dfa trim(const Dfa& d) {
  if (d.is_empty_language()) return d;
  const Nfa t = trim(d.to_nfa());
  return Dfa::from_nfa(t);
}

Dfa canonicalize(const Dfa& d) {
  if (d.is_empty_language()) return Dfa::empty(d.alphabet());
  const std::size_t k = d.alphabet().size();
  std::vector<State> id(d.num_states(), kNoState);
  std::vector<State> order{d.initial()};
  id[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      const State r = d.next(order[i], static_cast<Symbol>(a));
      if (r != kNoState && id[r] == kNoState) {
        id[r] = static_cast<State>(order.size());
        order.push_back(r);
      }
    }
  std::vector<State> table(order.size() * k, kNoState);
  std::vector<State> fin;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (d.is_final(order[i])) fin.push_back(static_cast<State>(i));
    for (std::size_t a = 0; a < k; ++a)
      if (State r = d.next(order[i], static_cast<Symbol>(a)); r != kNoState) table[i * k + a] = id[r];
  }
  return Dfa(d.alphabet(), order.size(), 0, std::move(fin), std::move(table));
}

Dfa permute(const Dfa& d, std::span<const State> new_id) {
  if (d.is_empty_language()) return d;
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  if (new_id.size() != n) throw PreconditionError("permutation has wrong size");
  std::vector<State> table(n * k, kNoState);
  std::vector<State> fin;
  for (State q = 0; q < n; ++q) {
    if (d.is_final(q)) fin.push_back(new_id[q]);
    for (std::size_t a = 0; a < k; ++a)
      if (State r = d.next(q, static_cast<Symbol>(a)); r != kNoState) table[new_id[q] * k + a] = new_id[r];
  }
  return Dfa(d.alphabet(), n, new_id[d.initial()], std::move(fin), std::move(table));
}

Nfa permute(const Nfa& a, std::span<const State> new_id) {
  if (a.is_empty_language()) return a;
  if (new_id.size() != a.num_states()) throw PreconditionError("permutation has wrong size");
  std::vector<State> init, fin;
  for (State q : a.initials()) init.push_back(new_id[q]);
  for (State q : a.finals()) fin.push_back(new_id[q]);
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions()) ts.push_back({new_id[t.src], t.sym, new_id[t.dst]});
  return Nfa(a.alphabet(), a.num_states(), std::move(init), std::move(fin), std::move(ts));
}

bool isomorphic(const Dfa& x, const Dfa& y) { return canonicalize(x) == canonicalize(y); }

InputConsistent make_input_consistent(const Nfa& a) {
  if (a.is_empty_language()) return {a, {0}, {kHash}};
  // Copies are keyed by (origin, label) and numbered in that order, so an
  // automaton that is already input-consistent comes back unchanged.
  std::vector<std::pair<State, Symbol>> copies;
  for (State q = 0; q < a.num_states(); ++q) {
    if (a.is_initial(q)) copies.emplace_back(q, kHash);
    Symbol last = kHash;
    for (const Transition& t : a.in(q))
      if (t.sym != last) {
        copies.emplace_back(q, t.sym);
        last = t.sym;
      }
  }
  std::map<std::pair<State, Symbol>, State> id;
  std::vector<std::vector<State>> copies_of(a.num_states());
  for (std::size_t i = 0; i < copies.size(); ++i) {
    id[copies[i]] = static_cast<State>(i);
    copies_of[copies[i].first].push_back(static_cast<State>(i));
  }
  std::vector<State> init, fin;
  std::vector<State> origin;
  std::vector<Symbol> label;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto [q, s] = copies[i];
    origin.push_back(q);
    label.push_back(s);
    if (s == kHash) init.push_back(static_cast<State>(i));
    if (a.is_final(q)) fin.push_back(static_cast<State>(i));
  }
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions()) {
    const State dst = id.at({t.dst, t.sym});
    for (State u : copies_of[t.src]) ts.push_back({u, t.sym, dst});
  }
  Nfa out(a.alphabet(), copies.size(), std::move(init), std::move(fin), std::move(ts));
  return {std::move(out), std::move(origin), std::move(label)};
}

std::optional<std::vector<Symbol>> label_function(const Nfa& a) {
  std::vector<Symbol> label(a.num_states(), kHash);
  for (State q = 0; q < a.num_states(); ++q) {
    const auto in = a.in(q);
    if (in.empty()) continue;
    if (a.is_initial(q)) return std::nullopt;
    if (in.front().sym != in.back().sym) return std::nullopt;
    label[q] = in.front().sym;
  }
  return label;
}

std::optional<std::vector<Symbol>> label_function(const Dfa& d) {
  std::vector<Symbol> label(d.num_states(), kHash);
  std::vector<char> has(d.num_states(), 0);
  const std::size_t k = d.alphabet().size();
  for (State p = 0; p < d.num_states(); ++p)
    for (std::size_t a = 0; a < k; ++a) {
      const State q = d.next(p, static_cast<Symbol>(a));
      if (q == kNoState) continue;
      if (q == d.initial()) return std::nullopt;
      if (has[q] && label[q] != static_cast<Symbol>(a)) return std::nullopt;
      has[q] = 1;
      label[q] = static_cast<Symbol>(a);
    }
  return label;
}

Determinized determinize(const Nfa& a, std::size_t cap) {
  if (a.is_empty_language()) return {Dfa::empty(a.alphabet()), {{}}};
  const std::size_t k = a.alphabet().size();
  std::unordered_map<std::vector<State>, State, VectorHash> id;
  std::vector<std::vector<State>> subsets;
  std::vector<State> table;
  std::vector<State> fin;
  std::vector<State> start(a.initials().begin(), a.initials().end());
  id.emplace(start, 0);
  subsets.push_back(std::move(start));
  std::vector<State> scratch;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    table.resize((i + 1) * k, kNoState);
    if (std::any_of(subsets[i].begin(), subsets[i].end(), [&](State q) { return a.is_final(q); }))
      fin.push_back(static_cast<State>(i));
    for (std::size_t s = 0; s < k; ++s) {
      scratch.clear();
      for (State q : subsets[i])
        for (const Transition& t : a.out(q))
          if (t.sym == static_cast<Symbol>(s)) scratch.push_back(t.dst);
      if (scratch.empty()) continue;
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
      auto [it, fresh] = id.emplace(scratch, static_cast<State>(subsets.size()));
      if (fresh) {
        if (subsets.size() >= cap)
          throw ResourceError("determinization exceeded the cap of " + std::to_string(cap) + " states");
        subsets.push_back(scratch);
      }
      table[i * k + s] = it->second;
    }
  }
  Dfa d(a.alphabet(), subsets.size(), 0, std::move(fin), std::move(table));
  return {std::move(d), std::move(subsets)};
}

Dfa minimize(const Dfa& input) {
  const Dfa d = trim(input);
  if (d.is_empty_language()) return Dfa::empty(d.alphabet());
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  std::vector<State> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = d.is_final(q) ? 1 : 0;
  std::size_t count = 0;
  // Moore refinement: a class is split by the classes of its successors.
  while (true) {
    std::map<std::vector<State>, State> sig_id;
    std::vector<State> next(n);
    std::vector<State> sig(k + 1);
    for (State q = 0; q < n; ++q) {
      sig[0] = cls[q];
      for (std::size_t a = 0; a < k; ++a) {
        const State r = d.next(q, static_cast<Symbol>(a));
        sig[a + 1] = r == kNoState ? kNoState : cls[r];
      }
      next[q] = sig_id.emplace(sig, static_cast<State>(sig_id.size())).first->second;
    }
    const std::size_t c = sig_id.size();
    cls.swap(next);
    if (c == count) break;
    count = c;
  }
  std::vector<State> table(count * k, kNoState);
  std::vector<State> fin;
  std::vector<char> is_fin(count, 0);
  for (State q = 0; q < n; ++q) {
    if (d.is_final(q)) is_fin[cls[q]] = 1;
    for (std::size_t a = 0; a < k; ++a)
      if (State r = d.next(q, static_cast<Symbol>(a)); r != kNoState) table[cls[q] * k + a] = cls[r];
  }
  for (State c = 0; c < count; ++c)
    if (is_fin[c]) fin.push_back(c);
  return canonicalize(Dfa(d.alphabet(), count, cls[d.initial()], std::move(fin), std::move(table)));
}

Dfa product_intersection(const Dfa& x, const Dfa& y) {
  if (!(x.alphabet() == y.alphabet())) throw PreconditionError("product of automata over different alphabets");
  if (x.is_empty_language() || y.is_empty_language()) return Dfa::empty(x.alphabet());
  const std::size_t k = x.alphabet().size();
  std::map<std::pair<State, State>, State> id;
  std::vector<std::pair<State, State>> pairs{{x.initial(), y.initial()}};
  id[pairs[0]] = 0;
  std::vector<State> table, fin;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    table.resize((i + 1) * k, kNoState);
    const auto [p, q] = pairs[i];
    if (x.is_final(p) && y.is_final(q)) fin.push_back(static_cast<State>(i));
    for (std::size_t a = 0; a < k; ++a) {
      const State p2 = x.next(p, static_cast<Symbol>(a)), q2 = y.next(q, static_cast<Symbol>(a));
      if (p2 == kNoState || q2 == kNoState) continue;
      auto [it, fresh] = id.emplace(std::make_pair(p2, q2), static_cast<State>(pairs.size()));
      if (fresh) pairs.emplace_back(p2, q2);
      table[i * k + a] = it->second;
    }
  }
  const Dfa prod(x.alphabet(), pairs.size(), 0, std::move(fin), std::move(table));
  return canonicalize(trim(prod));
}

bool same_language(const Dfa& x, const Dfa& y) {
  if (!(x.alphabet() == y.alphabet())) return false;
  return minimize(x) == minimize(y);
}

bool incoming_member(const Nfa& a, State q, std::span<const Symbol> w) {
  if (q >= a.num_states()) throw PreconditionError("state out of range");
  std::vector<char> cur(a.num_states(), 0), nxt(a.num_states(), 0);
  for (State s : a.initials()) cur[s] = 1;
  for (Symbol c : w) {
    if (!a.alphabet().valid(c)) throw PreconditionError("symbol outside the alphabet");
    std::fill(nxt.begin(), nxt.end(), 0);
    bool any = false;
    for (const Transition& t : a.transitions())
      if (t.sym == c && cur[t.src]) {
        nxt[t.dst] = 1;
        any = true;
      }
    if (!any) return false;
    cur.swap(nxt);
  }
  return cur[q] != 0;
}

bool same_incoming(const Nfa& a, State q, State p, std::size_t cap) {
  if (q >= a.num_states() || p >= a.num_states()) throw PreconditionError("state out of range");
  if (q == p) return true;
  const Determinized det = determinize(a, cap);
  for (const auto& s : det.subsets)
    if (std::binary_search(s.begin(), s.end(), q) != std::binary_search(s.begin(), s.end(), p)) return false;
  return true;
}

bool is_reduced(const Nfa& a, std::size_t cap) {
  if (a.is_empty_language()) return true;
  const Determinized det = determinize(a, cap);
  // I_q is determined by the set of reachable subsets that contain q.
  std::vector<std::vector<State>> member(a.num_states());
  for (std::size_t i = 0; i < det.subsets.size(); ++i)
    for (State q : det.subsets[i]) member[q].push_back(static_cast<State>(i));
  std::unordered_set<std::vector<State>, VectorHash> seen;
  for (State q = 0; q < a.num_states(); ++q)
    if (!seen.insert(member[q]).second) return false;
  return true;
}

Nfa normalize_initial(const Nfa& a) {
  if (a.is_empty_language()) return a;
  if (a.initials().size() == 1 && a.in(a.initials()[0]).empty()) return a;
  std::vector<Transition> ts;
  bool accept_eps = false;
  for (State s : a.initials()) {
    accept_eps = accept_eps || a.is_final(s);
    for (const Transition& t : a.out(s)) ts.push_back({0, t.sym, t.dst + 1});
  }
  for (const Transition& t : a.transitions()) ts.push_back({t.src + 1, t.sym, t.dst + 1});
  std::vector<State> fin;
  if (accept_eps) fin.push_back(0);
  for (State f : a.finals()) fin.push_back(f + 1);
  return trim(Nfa(a.alphabet(), a.num_states() + 1, {0}, std::move(fin), std::move(ts)));
}

Dfa normalize_initial(const Dfa& d) {
  if (d.is_empty_language() || !d.initial_has_in_edges()) return d;
  return Dfa::from_nfa(normalize_initial(d.to_nfa()));
}

std::size_t effective_alphabet_size(const Nfa& a) {
  std::vector<char> used(a.alphabet().size(), 0);
  for (const Transition& t : a.transitions()) used[static_cast<std::size_t>(t.sym)] = 1;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
}

std::size_t effective_alphabet_size(const Dfa& d) { return effective_alphabet_size(d.to_nfa()); }

}  // namespace wat
