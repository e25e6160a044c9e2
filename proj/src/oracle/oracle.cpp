#include "wat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "wat/error.hpp"

namespace wat::oracle {

namespace {

std::size_t sigma_of(const Nfa& a) { return a.alphabet().size(); }

std::vector<State> step(const Nfa& a, const std::vector<State>& from, Symbol x) {
  std::set<State> out;
  for (State q : from)
    for (const Transition& t : a.out(q))
      if (t.sym == x) out.insert(t.dst);
  return {out.begin(), out.end()};
}

std::vector<State> start_set(const Nfa& a) { return {a.initials().begin(), a.initials().end()}; }

struct Powerset {
  std::vector<std::vector<State>> subsets;
  std::vector<std::vector<State>> next;  // next[i][x], kNoState when empty
};

Powerset powerset(const Nfa& a, std::size_t cap) {
  Powerset ps;
  std::map<std::vector<State>, State> id;
  ps.subsets.push_back(start_set(a));
  id[ps.subsets[0]] = 0;
  for (std::size_t i = 0; i < ps.subsets.size(); ++i) {
    ps.next.emplace_back(sigma_of(a), kNoState);
    for (std::size_t x = 0; x < sigma_of(a); ++x) {
      auto s = step(a, ps.subsets[i], static_cast<Symbol>(x));
      if (s.empty()) continue;
      auto it = id.find(s);
      if (it == id.end()) {
        if (ps.subsets.size() >= cap) throw ResourceError("oracle powerset exceeded the cap");
        it = id.emplace(s, static_cast<State>(ps.subsets.size())).first;
        ps.subsets.push_back(s);
      }
      ps.next[i][x] = it->second;
    }
  }
  return ps;
}

Nfa powerset_nfa(const Nfa& a, const Powerset& ps) {
  std::vector<Transition> ts;
  std::vector<State> fin;
  for (std::size_t i = 0; i < ps.subsets.size(); ++i) {
    for (std::size_t x = 0; x < ps.next[i].size(); ++x)
      if (ps.next[i][x] != kNoState) ts.push_back({static_cast<State>(i), static_cast<Symbol>(x), ps.next[i][x]});
    for (State q : ps.subsets[i])
      if (a.is_final(q)) {
        fin.push_back(static_cast<State>(i));
        break;
      }
  }
  return Nfa(a.alphabet(), ps.subsets.size(), {0}, std::move(fin), std::move(ts));
}

std::vector<std::size_t> distances(const Nfa& a) {
  std::vector<std::size_t> dist(a.num_states(), SIZE_MAX);
  std::deque<State> queue;
  for (State q : a.initials()) {
    dist[q] = 0;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (const Transition& t : a.out(q))
      if (dist[t.dst] == SIZE_MAX) {
        dist[t.dst] = dist[q] + 1;
        queue.push_back(t.dst);
      }
  }
  return dist;
}

// Greedy construction of the reversed word: `want_max` prefers extending with
// the largest feasible symbol, otherwise stopping wins whenever it is allowed.
std::optional<Word> bounded_extreme(const Nfa& a, std::span<const State> targets, std::size_t len, bool want_max) {
  const auto dist = distances(a);
  std::vector<char> cur(a.num_states(), 0);
  bool feasible = false;
  for (State t : targets)
    if (dist[t] <= len) {
      cur[t] = 1;
      feasible = true;
    }
  if (!feasible) return std::nullopt;
  Word reversed;
  std::size_t r = len;
  const auto k = static_cast<Symbol>(sigma_of(a));
  while (true) {
    bool at_start = false;
    for (State q = 0; q < a.num_states(); ++q) at_start = at_start || (cur[q] && a.is_initial(q));
    if (!want_max && at_start) break;
    bool moved = false;
    if (r > 0) {
      for (Symbol i = 0; i < k && !moved; ++i) {
        const Symbol x = want_max ? k - 1 - i : i;
        std::vector<char> prev(a.num_states(), 0);
        bool any = false;
        for (State q = 0; q < a.num_states(); ++q) {
          if (!cur[q]) continue;
          for (const Transition& t : a.in(q))
            if (t.sym == x && dist[t.src] <= r - 1) {
              prev[t.src] = 1;
              any = true;
            }
        }
        if (any) {
          reversed.push_back(x);
          cur.swap(prev);
          --r;
          moved = true;
        }
      }
    }
    if (!moved) break;
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

}  // namespace

bool colex_less(std::span<const Symbol> x, std::span<const Symbol> y) {
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

std::vector<Word> all_words(std::size_t sigma, std::size_t len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t l = 1; l <= len; ++l) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t x = 0; x < sigma; ++x) {
        Word w = out[i];
        w.push_back(static_cast<Symbol>(x));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<State> reach(const Nfa& a, std::span<const Symbol> w) {
  std::vector<State> cur = start_set(a);
  for (Symbol x : w) cur = step(a, cur, x);
  return cur;
}

bool accepts(const Nfa& a, std::span<const Symbol> w) {
  const auto s = reach(a, w);
  return std::any_of(s.begin(), s.end(), [&](State q) { return a.is_final(q); });
}

bool accepts(const Dfa& d, std::span<const Symbol> w) {
  State q = d.initial();
  for (Symbol x : w) {
    q = d.next(q, x);
    if (q == kNoState) return false;
  }
  return d.is_final(q);
}

bool same_language_upto(const Nfa& x, const Nfa& y, std::size_t len) {
  if (!(x.alphabet() == y.alphabet())) return false;
  for (const Word& w : all_words(sigma_of(x), len))
    if (accepts(x, w) != accepts(y, w)) return false;
  return true;
}

std::vector<Word> incoming_words(const Nfa& a, State q, std::size_t len) {
  std::vector<Word> out;
  Word w;
  std::function<void(const std::vector<State>&)> dfs = [&](const std::vector<State>& cur) {
    if (std::binary_search(cur.begin(), cur.end(), q)) out.push_back(w);
    if (w.size() == len) return;
    for (std::size_t x = 0; x < sigma_of(a); ++x) {
      auto nxt = step(a, cur, static_cast<Symbol>(x));
      if (nxt.empty()) continue;
      w.push_back(static_cast<Symbol>(x));
      dfs(nxt);
      w.pop_back();
    }
  };
  auto s = start_set(a);
  std::sort(s.begin(), s.end());
  dfs(s);
  std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) { return colex_less(x, y); });
  return out;
}

BoundedPrefixSet enum_pref(const Dfa& d, std::size_t len, std::size_t cap) {
  if (len > cap) throw ResourceError("enumeration length " + std::to_string(len) + " exceeds the cap " + std::to_string(cap));
  BoundedPrefixSet out;
  out.length = len;
  if (d.is_empty_language()) return out;
  Word w;
  std::function<void(State)> dfs = [&](State q) {
    out.entries.push_back({w, q, w.empty() ? kHash : w.back()});
    if (out.entries.size() > (std::size_t{1} << 24)) throw ResourceError("enumeration produced too many words");
    if (w.size() == len) return;
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
      const State r = d.next(q, static_cast<Symbol>(x));
      if (r == kNoState) continue;
      w.push_back(static_cast<Symbol>(x));
      dfs(r);
      w.pop_back();
    }
  };
  dfs(d.initial());
  std::sort(out.entries.begin(), out.entries.end(),
            [](const PrefixEntry& x, const PrefixEntry& y) { return colex_less(x.word, y.word); });
  return out;
}

ClassBlocks equiv_c_classes_bounded(const Dfa& d, std::size_t len, std::size_t cap) {
  const BoundedPrefixSet set = enum_pref(d, len, cap);
  ClassBlocks out;
  std::size_t shorter_runs = 0;
  const PrefixEntry* last_short = nullptr;
  for (const PrefixEntry& e : set.entries) {
    if (out.blocks.empty() || out.blocks.back().state != e.state || out.blocks.back().end != e.end)
      out.blocks.push_back({e.word, e.state, e.end, 0});
    ++out.blocks.back().size;
    if (len > 0 && e.word.size() < len) {
      if (last_short == nullptr || last_short->state != e.state || last_short->end != e.end) ++shorter_runs;
      last_short = &e;
    }
  }
  out.bounded_only = len > 0 && shorter_runs != out.blocks.size();
  return out;
}

BlockCounter::BlockCounter(const Dfa& d) : d_(d) {}

BlockCounter::Summary BlockCounter::join(const Summary& x, const Summary& y) {
  if (x.runs == 0) return y;
  if (y.runs == 0) return x;
  Summary s;
  s.runs = x.runs + y.runs - (x.last == y.first ? 1 : 0);
  s.first = x.first;
  s.last = y.last;
  return s;
}

std::vector<State> BlockCounter::compose(const std::vector<State>& f, Symbol x) const {
  std::vector<State> g(f.size(), kNoState);
  for (State q = 0; q < f.size(); ++q)
    if (State r = d_.next(q, x); r != kNoState) g[q] = f[r];
  return g;
}

BlockCounter::Summary BlockCounter::summarize(const std::vector<State>& f, std::size_t r, Symbol end) {
  if (std::all_of(f.begin(), f.end(), [](State s) { return s == kNoState; })) return {};
  Key key{f, r, end};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Summary acc;
  if (State s = f[d_.initial()]; s != kNoState) acc = Summary{1, {s, end}, {s, end}};
  if (r > 0)
    for (std::size_t x = 0; x < d_.alphabet().size(); ++x) {
      const auto sx = static_cast<Symbol>(x);
      acc = join(acc, summarize(compose(f, sx), r - 1, end == kHash ? sx : end));
    }
  memo_.emplace(std::move(key), acc);
  return acc;
}

std::size_t BlockCounter::count(std::size_t len) {
  if (d_.is_empty_language()) return 0;
  std::vector<State> id(d_.num_states());
  for (State q = 0; q < id.size(); ++q) id[q] = q;
  return summarize(id, len, kHash).runs;
}

std::size_t BlockCounter::block_of(std::span<const Symbol> w, std::size_t len) {
  if (w.size() > len) throw PreconditionError("word longer than the budget");
  std::vector<State> f(d_.num_states());
  for (State q = 0; q < f.size(); ++q) f[q] = q;
  std::size_t r = len;
  Symbol end = kHash;
  Summary acc;
  std::size_t remaining = w.size();
  while (true) {
    const State s = f[d_.initial()];
    if (remaining == 0) {
      if (s == kNoState) throw PreconditionError("word is not readable");
      acc = join(acc, Summary{1, {s, end}, {s, end}});
      break;
    }
    if (s != kNoState) acc = join(acc, Summary{1, {s, end}, {s, end}});
    const Symbol x = w[remaining - 1];
    for (Symbol y = 0; y < x; ++y) acc = join(acc, summarize(compose(f, y), r - 1, end == kHash ? y : end));
    f = compose(f, x);
    end = end == kHash ? x : end;
    --r;
    --remaining;
  }
  return acc.runs - 1;
}

std::optional<std::vector<State>> exhaustive_wheeler_order(const Nfa& a, std::size_t cap) {
  const std::size_t n = a.num_states();
  if (n > cap) throw ResourceError("exhaustive order search limited to " + std::to_string(cap) + " states");
  if (a.initials().size() != 1) return std::nullopt;
  const State q0 = a.initials()[0];
  for (const Transition& t : a.transitions())
    if (t.dst == q0) return std::nullopt;
  std::vector<State> rest;
  for (State q = 0; q < n; ++q)
    if (q != q0) rest.push_back(q);
  const auto ts = a.transitions();
  std::vector<std::size_t> pos(n);
  do {
    pos[q0] = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = i + 1;
    bool ok = true;
    for (std::size_t i = 0; i < ts.size() && ok; ++i)
      for (std::size_t j = 0; j < ts.size() && ok; ++j) {
        const Transition &e = ts[i], &f = ts[j];
        if (e.sym < f.sym && !(pos[e.dst] < pos[f.dst])) ok = false;
        if (e.sym == f.sym && pos[e.src] < pos[f.src] && !(pos[e.dst] <= pos[f.dst])) ok = false;
      }
    if (ok) {
      std::vector<State> order{q0};
      order.insert(order.end(), rest.begin(), rest.end());
      return order;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

Universality bounded_universality(const Nfa& a, std::size_t len, std::size_t cap) {
  try {
    const Powerset ps = powerset(a, cap);
    for (std::size_t i = 0; i < ps.subsets.size(); ++i) {
      if (!std::any_of(ps.subsets[i].begin(), ps.subsets[i].end(), [&](State q) { return a.is_final(q); }))
        return {false, true};
      for (State nxt : ps.next[i])
        if (nxt == kNoState) return {false, true};
    }
    return {true, true};
  } catch (const ResourceError&) {
    for (const Word& w : all_words(sigma_of(a), len))
      if (!accepts(a, w)) return {false, false};
    return {true, false};
  }
}

std::optional<Word> bounded_colex_min(const Nfa& a, std::span<const State> targets, std::size_t len) {
  return bounded_extreme(a, targets, len, false);
}

std::optional<Word> bounded_colex_max(const Nfa& a, std::span<const State> targets, std::size_t len) {
  return bounded_extreme(a, targets, len, true);
}

bool dfa_state_less(const Dfa& d, State q, State p, std::size_t len) {
  if (q == p) return false;
  const std::size_t n = d.num_states();
  if (len == 0) len = n * n + n;
  const Nfa a = d.to_nfa();
  const State tq[] = {q}, tp[] = {p};
  const auto hi = bounded_colex_max(a, tq, len);
  const auto lo = bounded_colex_min(a, tp, len);
  if (!hi || !lo) return true;
  return colex_less(*hi, *lo);
}

bool nfa_state_less(const Nfa& a, State q, State p, std::size_t cap) {
  if (q == p) return false;
  const Powerset ps = powerset(a, cap);
  const Nfa pa = powerset_nfa(a, ps);
  const std::size_t dsz = ps.subsets.size();
  const std::size_t len = dsz * dsz + dsz;
  std::vector<State> q_only, p_only, with_q, with_p;
  for (std::size_t i = 0; i < dsz; ++i) {
    const auto& s = ps.subsets[i];
    const bool hq = std::binary_search(s.begin(), s.end(), q), hp = std::binary_search(s.begin(), s.end(), p);
    if (hq) with_q.push_back(static_cast<State>(i));
    if (hp) with_p.push_back(static_cast<State>(i));
    if (hq && !hp) q_only.push_back(static_cast<State>(i));
    if (hp && !hq) p_only.push_back(static_cast<State>(i));
  }
  if (q_only.empty() && p_only.empty()) return false;
  const auto beats = [&](const std::vector<State>& alpha_set, const std::vector<State>& beta_set) {
    const auto alpha = bounded_colex_max(pa, alpha_set, len);
    const auto beta = bounded_colex_min(pa, beta_set, len);
    return alpha && beta && colex_less(*beta, *alpha);
  };
  return !beats(q_only, with_p) && !beats(with_q, p_only);
}

std::size_t nerode_class_count(const Dfa& d, std::size_t word_len, std::size_t ctx_len) {
  if (d.is_empty_language()) return 0;
  const auto contexts = all_words(d.alphabet().size(), ctx_len);
  std::set<std::vector<char>> signatures;
  for (const Word& w : all_words(d.alphabet().size(), word_len)) {
    std::vector<char> sig;
    bool any = false;
    for (const Word& z : contexts) {
      Word wz = w;
      wz.insert(wz.end(), z.begin(), z.end());
      const bool in = accepts(d, wz);
      sig.push_back(in ? 1 : 0);
      any = any || in;
    }
    if (any) signatures.insert(std::move(sig));
  }
  return signatures.size();
}

namespace {

class WdfaSearch {
 public:
  WdfaSearch(const Dfa& d, std::size_t h, std::vector<Symbol> label)
      : d_(d), h_(h), k_(d.alphabet().size()), label_(std::move(label)), phi_(h, kNoState) {
    block_begin_.assign(k_, 0);
    block_end_.assign(k_, 0);
    for (std::size_t i = 1; i < h_; ++i) {
      const auto x = static_cast<std::size_t>(label_[i]);
      if (block_end_[x] == 0) block_begin_[x] = i;
      block_end_[x] = i + 1;
    }
    cand_.resize(k_);
    for (State p = 0; p < d.num_states(); ++p)
      for (std::size_t x = 0; x < k_; ++x)
        if (State q = d.next(p, static_cast<Symbol>(x)); q != kNoState) cand_[x].push_back(q);
    for (auto& c : cand_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
  }

  std::optional<Dfa> run() {
    phi_[0] = d_.initial();
    if (assign(1)) return result_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t i) {
    if (i == h_) return complete();
    for (State s : cand_[static_cast<std::size_t>(label_[i])]) {
      phi_[i] = s;
      if (assign(i + 1)) return true;
    }
    return false;
  }

  // Edges for symbol x: a nondecreasing map from the sources onto the x-block
  // whose targets carry the images prescribed by `d`.
  bool edges_for(std::size_t x, std::vector<State>& table) const {
    std::vector<std::size_t> src;
    std::vector<State> img;
    for (std::size_t i = 0; i < h_; ++i)
      if (State r = d_.next(phi_[i], static_cast<Symbol>(x)); r != kNoState) {
        src.push_back(i);
        img.push_back(r);
      }
    const std::size_t b = block_begin_[x], e = block_end_[x];
    if (src.empty() || e == 0) return src.empty() && e == 0;
    const std::size_t t = e - b;
    // ok[j][u]: sources 0..j placed with source j on target b+u.
    std::vector<std::vector<char>> ok(src.size(), std::vector<char>(t, 0));
    ok[0][0] = phi_[b] == img[0];
    for (std::size_t j = 1; j < src.size(); ++j)
      for (std::size_t u = 0; u < t; ++u) {
        if (phi_[b + u] != img[j]) continue;
        ok[j][u] = ok[j - 1][u] || (u > 0 && ok[j - 1][u - 1]);
      }
    if (!ok[src.size() - 1][t - 1]) return false;
    std::size_t u = t - 1;
    for (std::size_t j = src.size(); j-- > 0;) {
      table[src[j] * k_ + x] = static_cast<State>(b + u);
      if (j > 0 && !ok[j - 1][u]) --u;
    }
    return true;
  }

  bool complete() {
    std::vector<State> table(h_ * k_, kNoState);
    for (std::size_t x = 0; x < k_; ++x)
      if (!edges_for(x, table)) return false;
    std::vector<char> seen(h_, 0);
    std::vector<State> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const State q = stack.back();
      stack.pop_back();
      for (std::size_t x = 0; x < k_; ++x)
        if (State r = table[q * k_ + x]; r != kNoState && !seen[r]) {
          seen[r] = 1;
          stack.push_back(r);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(h_)) return false;
    std::vector<State> fin;
    for (std::size_t i = 0; i < h_; ++i)
      if (d_.is_final(phi_[i])) fin.push_back(static_cast<State>(i));
    result_ = Dfa(d_.alphabet(), h_, 0, std::move(fin), std::move(table));
    return true;
  }

  const Dfa& d_;
  std::size_t h_, k_;
  std::vector<Symbol> label_;
  std::vector<State> phi_;
  std::vector<std::size_t> block_begin_, block_end_;
  std::vector<std::vector<State>> cand_;
  std::optional<Dfa> result_;
};

void compositions(std::size_t total, const std::vector<std::size_t>& used, std::size_t i, std::vector<std::size_t>& parts,
                  const std::function<bool()>& visit, bool& stop) {
  if (stop) return;
  if (i == used.size()) {
    if (total == 0) stop = visit();
    return;
  }
  const std::size_t remaining = used.size() - i - 1;
  for (std::size_t c = 1; c + remaining <= total && !stop; ++c) {
    parts[used[i]] = c;
    compositions(total - c, used, i + 1, parts, visit, stop);
  }
  parts[used[i]] = 0;
}

}  // namespace

std::optional<Dfa> brute_force_min_wdfa(const Dfa& d, std::size_t max_states) {
  if (d.is_empty_language()) return d;
  const std::size_t k = d.alphabet().size();
  std::vector<std::size_t> used;
  for (std::size_t x = 0; x < k; ++x)
    for (State p = 0; p < d.num_states(); ++p)
      if (d.next(p, static_cast<Symbol>(x)) != kNoState) {
        used.push_back(x);
        break;
      }
  for (std::size_t h = used.size() + 1; h <= max_states; ++h) {
    std::optional<Dfa> found;
    std::vector<std::size_t> parts(k, 0);
    bool stop = false;
    compositions(h - 1, used, 0, parts, [&] {
      std::vector<Symbol> label{kHash};
      for (std::size_t x = 0; x < k; ++x) label.insert(label.end(), parts[x], static_cast<Symbol>(x));
      found = WdfaSearch(d, h, std::move(label)).run();
      return found.has_value();
    }, stop);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace wat::oracle
