#include "wat/wheeler_language.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "wat/colex.hpp"
#include "wat/constructions.hpp"
#include "wat/error.hpp"

namespace wat {

std::size_t witness_length_bound(std::size_t n) { return n * n * n + 2 * n * n + n + 2; }

bool validate_witness(const Dfa& m, const NonWheelerWitness& w, std::string* why) {
  const auto fail = [&](const char* reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  const std::size_t n = m.num_states();
  if (w.u >= n || w.v >= n) return fail("state out of range");
  if (w.u == w.v) return fail("u and v coincide");
  if (w.gamma.empty()) return fail("empty cycle word");
  if (m.run(w.mu) != w.u) return fail("mu does not reach u");
  if (m.run(w.nu) != w.v) return fail("nu does not reach v");
  if (m.run(w.gamma, w.u) != w.u) return fail("gamma is not a cycle at u");
  if (m.run(w.gamma, w.v) != w.v) return fail("gamma is not a cycle at v");
  if (is_suffix(w.gamma, w.mu) || is_suffix(w.gamma, w.nu)) return fail("gamma is a suffix of mu or nu");
  const bool below = colex_less(w.mu, w.gamma) && colex_less(w.nu, w.gamma);
  const bool above = colex_less(w.gamma, w.mu) && colex_less(w.gamma, w.nu);
  if (!below && !above) return fail("mu and nu lie on different sides of gamma");
  return true;
}

namespace {

enum Side { kBelow, kAbove };

class WitnessSearch {
 public:
  explicit WitnessSearch(const Dfa& m)
      : m_(m), rev_(m), n_(m.num_states()), k_(m.alphabet().size()), c_(n_ + 3), q0_(m.initial()) {
    pair_scc();
    shortest_paths();
  }

  std::optional<NonWheelerWitness> run() {
    std::optional<NonWheelerWitness> best;
    std::size_t limit = witness_length_bound(n_);
    for (State u = 0; u < n_; ++u)
      for (State v = u + 1; v < n_; ++v) {
        if (!cyclic_[u * n_ + v]) continue;
        auto found = search(u, v, limit);
        if (!found) continue;
        auto cand = complete(u, v, *found);
        if (!cand) continue;
        if (!best || better(*cand, *best)) {
          best = std::move(cand);
          limit = best->gamma.size();
        }
      }
    return best;
  }

 private:
  static bool better(const NonWheelerWitness& x, const NonWheelerWitness& y) {
    if (x.gamma.size() != y.gamma.size()) return x.gamma.size() < y.gamma.size();
    if (x.mu.size() != y.mu.size()) return x.mu.size() < y.mu.size();
    if (x.nu.size() != y.nu.size()) return x.nu.size() < y.nu.size();
    return false;
  }

  // Strongly connected components of the pair graph (a, b) -> (δ(a,x), δ(b,x)).
  void pair_scc() {
    const std::size_t np = n_ * n_;
    std::vector<std::vector<std::uint32_t>> fwd(np), bwd(np);
    for (State a = 0; a < n_; ++a)
      for (State b = 0; b < n_; ++b)
        for (std::size_t x = 0; x < k_; ++x) {
          const State a2 = m_.next(a, static_cast<Symbol>(x)), b2 = m_.next(b, static_cast<Symbol>(x));
          if (a2 == kNoState || b2 == kNoState) continue;
          fwd[a * n_ + b].push_back(a2 * n_ + b2);
          bwd[a2 * n_ + b2].push_back(a * n_ + b);
        }
    // Kosaraju with explicit stacks.
    std::vector<char> seen(np, 0);
    std::vector<std::uint32_t> finish;
    for (std::uint32_t s = 0; s < np; ++s) {
      if (seen[s]) continue;
      std::vector<std::pair<std::uint32_t, std::size_t>> stack{{s, 0}};
      seen[s] = 1;
      while (!stack.empty()) {
        auto& [x, i] = stack.back();
        if (i < fwd[x].size()) {
          const std::uint32_t y = fwd[x][i++];
          if (!seen[y]) {
            seen[y] = 1;
            stack.emplace_back(y, 0);
          }
        } else {
          finish.push_back(x);
          stack.pop_back();
        }
      }
    }
    scc_.assign(np, UINT32_MAX);
    std::uint32_t comp = 0;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
      if (scc_[*it] != UINT32_MAX) continue;
      std::vector<std::uint32_t> stack{*it};
      scc_[*it] = comp;
      while (!stack.empty()) {
        const std::uint32_t x = stack.back();
        stack.pop_back();
        for (std::uint32_t y : bwd[x])
          if (scc_[y] == UINT32_MAX) {
            scc_[y] = comp;
            stack.push_back(y);
          }
      }
      ++comp;
    }
    cyclic_.assign(np, 0);
    for (std::uint32_t x = 0; x < np; ++x)
      for (std::uint32_t y : fwd[x])
        if (scc_[y] == scc_[x]) cyclic_[x] = 1;
  }

  void shortest_paths() {
    path_.assign(n_, std::nullopt);
    path_[q0_] = Word{};
    std::deque<State> queue{q0_};
    while (!queue.empty()) {
      const State q = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < k_; ++x) {
        const State r = m_.next(q, static_cast<Symbol>(x));
        if (r == kNoState || path_[r]) continue;
        path_[r] = *path_[q];
        path_[r]->push_back(static_cast<Symbol>(x));
        queue.push_back(r);
      }
    }
  }

  bool decided(std::uint32_t c) const { return c >= n_; }
  Side side(std::uint32_t c) const { return c == n_ + 1 ? kAbove : kBelow; }

  // Successor comparison states of μ against γ when γ gains the symbol x in front.
  void options(std::uint32_t c, Symbol x, std::vector<std::uint32_t>& out) const {
    out.clear();
    if (decided(c)) {
      out.push_back(c);
      return;
    }
    const State mstate = c;
    for (State p : rev_.preds(mstate, x)) out.push_back(p);
    bool lower = false, higher = false;
    for (std::size_t y = 0; y < k_; ++y) {
      if (static_cast<Symbol>(y) == x || rev_.preds(mstate, static_cast<Symbol>(y)).empty()) continue;
      (static_cast<Symbol>(y) < x ? lower : higher) = true;
    }
    if (lower) out.push_back(static_cast<std::uint32_t>(n_));
    if (higher) out.push_back(static_cast<std::uint32_t>(n_ + 1));
    if (mstate == q0_) out.push_back(static_cast<std::uint32_t>(n_ + 2));
  }

  struct Found {
    Word gamma;
  };

  std::optional<Found> search(State u, State v, std::size_t limit) {
    const std::uint32_t comp = scc_[u * n_ + v];
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> local(n_ * n_, UINT32_MAX);
    for (std::uint32_t x = 0; x < n_ * n_; ++x)
      if (scc_[x] == comp) {
        local[x] = static_cast<std::uint32_t>(members.size());
        members.push_back(x);
      }
    const std::size_t cc = c_ * c_;
    const std::size_t total = members.size() * cc;
    if (parent_.size() < total) {
      parent_.resize(total);
      via_.resize(total);
      stamp_.resize(total, 0);
    }
    ++epoch_;
    const auto seen = [&](std::uint32_t x) { return stamp_[x] == epoch_; };
    const auto encode = [&](std::uint32_t pair, std::uint32_t cu, std::uint32_t cv) {
      return static_cast<std::uint32_t>(local[pair] * cc + cu * c_ + cv);
    };
    const std::uint32_t start = encode(u * n_ + v, u, v);
    parent_[start] = start;
    stamp_[start] = epoch_;
    std::vector<std::uint32_t> layer{start}, next_layer;
    std::vector<std::uint32_t> ou, ov;
    for (std::size_t depth = 0; depth < limit && !layer.empty(); ++depth) {
      next_layer.clear();
      for (std::uint32_t node : layer) {
        const std::uint32_t pair = members[node / cc];
        const std::uint32_t cu = static_cast<std::uint32_t>((node % cc) / c_), cv = static_cast<std::uint32_t>(node % c_);
        const State gu = pair / n_, gv = pair % n_;
        for (std::size_t xi = 0; xi < k_; ++xi) {
          const auto x = static_cast<Symbol>(xi);
          const auto pu = rev_.preds(gu, x), pv = rev_.preds(gv, x);
          if (pu.empty() || pv.empty()) continue;
          options(cu, x, ou);
          options(cv, x, ov);
          for (State a : pu)
            for (State b : pv) {
              const std::uint32_t p2 = a * n_ + b;
              if (scc_[p2] != comp) continue;
              for (std::uint32_t c1 : ou)
                for (std::uint32_t c2 : ov) {
                  const std::uint32_t nxt = encode(p2, c1, c2);
                  if (a == u && b == v && decided(c1) && decided(c2) && side(c1) == side(c2)) {
                    Word gamma{x};
                    for (std::uint32_t cur = node; cur != start; cur = parent_[cur]) gamma.push_back(via_[cur]);
                    return Found{std::move(gamma)};
                  }
                  if (seen(nxt)) continue;
                  stamp_[nxt] = epoch_;
                  parent_[nxt] = node;
                  via_[nxt] = x;
                  next_layer.push_back(nxt);
                }
            }
        }
      }
      layer.swap(next_layer);
    }
    return std::nullopt;
  }

  // Shortest μ ∈ I_u on the given side of γ with γ not a suffix of μ; ties go
  // to the co-lex smaller word.
  std::optional<Word> comparable(State u, const Word& gamma, Side s) const {
    std::optional<Word> best;
    const auto offer = [&](Word w) {
      if (!best || w.size() < best->size() || (w.size() == best->size() && colex_less(w, *best))) best = std::move(w);
    };
    const std::size_t g = gamma.size();
    for (std::size_t i = 0; i < g; ++i) {
      const std::span<const Symbol> tail(gamma.data() + (g - i), i);
      if (s == kBelow && m_.run(tail) == u) offer(Word(tail.begin(), tail.end()));
      const Symbol x = gamma[g - 1 - i];
      for (std::size_t yi = 0; yi < k_; ++yi) {
        const auto y = static_cast<Symbol>(yi);
        if (y == x || (s == kBelow) != (y < x)) continue;
        for (State p = 0; p < n_; ++p) {
          if (!path_[p]) continue;
          const State t = m_.next(p, y);
          if (t == kNoState || m_.run(tail, t) != u) continue;
          Word w = *path_[p];
          w.push_back(y);
          w.insert(w.end(), tail.begin(), tail.end());
          offer(std::move(w));
        }
      }
    }
    return best;
  }

  std::optional<NonWheelerWitness> complete(State u, State v, const Found& f) const {
    std::optional<NonWheelerWitness> best;
    for (Side s : {kBelow, kAbove}) {
      auto mu = comparable(u, f.gamma, s);
      auto nu = comparable(v, f.gamma, s);
      if (!mu || !nu) continue;
      NonWheelerWitness w{std::move(*mu), std::move(*nu), f.gamma, u, v};
      if (!best || better(w, *best)) best = std::move(w);
    }
    return best;
  }

  const Dfa& m_;
  ReverseIndex rev_;
  std::size_t n_, k_, c_;
  State q0_;
  std::vector<std::uint32_t> scc_;
  std::vector<char> cyclic_;
  std::vector<std::optional<Word>> path_;
  // Search buffers reused across pairs; a node is visited when its stamp equals the epoch.
  std::vector<std::uint32_t> parent_;
  std::vector<Symbol> via_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

LanguageVerdict is_wheeler_language_dfa(const Dfa& d) {
  LanguageVerdict out;
  out.minimal = minimize(d);
  if (out.minimal.is_empty_language()) return out;
  out.witness = WitnessSearch(out.minimal).run();
  if (out.witness) {
    std::string why;
    if (!validate_witness(out.minimal, *out.witness, &why))
      throw Error("internal: produced witness failed replay: " + why);
    out.wheeler = false;
  }
  return out;
}

LanguageVerdict is_wheeler_language_nfa(const Nfa& a, std::size_t det_cap) {
  return is_wheeler_language_dfa(determinize(trim(a), det_cap).dfa);
}

std::optional<NonWheelerWitness> bounded_witness_oracle(const Dfa& d, std::size_t max_len) {
  if (d.is_empty_language()) return std::nullopt;
  const std::size_t n = d.num_states(), k = d.alphabet().size();
  // Incoming words of each state, ordered by (length, co-lex).
  std::vector<std::vector<Word>> incoming(n);
  std::vector<Word> frontier{Word{}};
  incoming[d.initial()].push_back(Word{});
  std::vector<Word> all_gammas;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> grown;
    for (const Word& w : frontier)
      for (std::size_t x = 0; x < k; ++x) {
        Word z = w;
        z.push_back(static_cast<Symbol>(x));
        grown.push_back(std::move(z));
      }
    std::sort(grown.begin(), grown.end(), [](const Word& x, const Word& y) { return colex_less(x, y); });
    for (const Word& w : grown) {
      all_gammas.push_back(w);
      if (State q = d.run(w); q != kNoState) incoming[q].push_back(w);
    }
    frontier.swap(grown);
  }
  const auto least = [&](State u, const Word& gamma, bool below) -> std::optional<Word> {
    for (const Word& w : incoming[u]) {
      if (w.size() > gamma.size()) break;
      if (is_suffix(gamma, w)) continue;
      if (below ? colex_less(w, gamma) : colex_less(gamma, w)) return w;
    }
    return std::nullopt;
  };
  const auto key_less = [](const NonWheelerWitness& x, const NonWheelerWitness& y) {
    if (x.mu.size() != y.mu.size()) return x.mu.size() < y.mu.size();
    if (x.mu != y.mu) return colex_less(x.mu, y.mu);
    if (x.nu.size() != y.nu.size()) return x.nu.size() < y.nu.size();
    return colex_less(x.nu, y.nu);
  };
  for (const Word& gamma : all_gammas) {
    std::vector<State> cyc;
    for (State s = 0; s < n; ++s)
      if (d.run(gamma, s) == s) cyc.push_back(s);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      for (std::size_t j = i + 1; j < cyc.size(); ++j) {
        std::optional<NonWheelerWitness> best;
        for (bool below : {true, false}) {
          auto mu = least(cyc[i], gamma, below);
          auto nu = least(cyc[j], gamma, below);
          if (!mu || !nu) continue;
          NonWheelerWitness w{*mu, *nu, gamma, cyc[i], cyc[j]};
          if (!best || key_less(w, *best)) best = std::move(w);
        }
        if (best) return best;
      }
  }
  return std::nullopt;
}

StabilizationProbe monotone_stabilization_probe(const Dfa& d, std::size_t len) {
  StabilizationProbe out;
  if (d.is_empty_language()) return out;
  struct Entry {
    Word w;
    State q;
  };
  std::vector<Entry> words;
  Word cur;
  std::function<void(State)> walk = [&](State q) {
    words.push_back({cur, q});
    if (cur.size() == len) return;
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
      const State r = d.next(q, static_cast<Symbol>(x));
      if (r == kNoState) continue;
      cur.push_back(static_cast<Symbol>(x));
      walk(r);
      cur.pop_back();
    }
  };
  walk(d.initial());
  std::sort(words.begin(), words.end(), [](const Entry& x, const Entry& y) { return colex_less(x.w, y.w); });
  const auto boundaries = [&](std::size_t limit) {
    std::size_t count = 0;
    const Entry* prev = nullptr;
    for (const Entry& e : words) {
      if (e.w.size() > limit) continue;
      if (prev != nullptr && prev->q != e.q) ++count;
      prev = &e;
    }
    return count;
  };
  out.current = boundaries(len);
  out.previous = len == 0 ? out.current : boundaries(len - 1);
  out.grows = out.current > out.previous;
  return out;
}

}  // namespace wat
