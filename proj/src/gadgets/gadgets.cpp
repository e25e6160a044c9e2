#include "wat/gadgets.hpp"

#include <algorithm>

#include "wat/colex.hpp"
#include "wat/constructions.hpp"
#include "wat/error.hpp"

namespace wat {

namespace {

std::size_t used_symbols(const Dfa& x, const Dfa& y) {
  const std::size_t k = x.alphabet().size();
  std::size_t count = 0;
  for (std::size_t c = 0; c < k; ++c) {
    bool used = false;
    for (const Dfa* d : {&x, &y})
      for (State q = 0; q < d->num_states() && !used; ++q)
        used = d->next(q, static_cast<Symbol>(c)) != kNoState;
    count += used ? 1 : 0;
  }
  return count;
}

Dfa forbidden_run(std::size_t n, Symbol counted) {
  if (n == 0) throw PreconditionError("family parameter must be at least 1");
  const Alphabet sigma({"a", "b"});
  std::vector<State> table(2 * (n + 1), kNoState);
  std::vector<State> finals;
  for (State i = 0; i <= n; ++i) {
    finals.push_back(i);
    if (i < n) table[i * 2 + static_cast<std::size_t>(counted)] = i + 1;
    table[i * 2 + static_cast<std::size_t>(1 - counted)] = 0;
  }
  return minimize(Dfa(sigma, n + 1, 0, std::move(finals), std::move(table)));
}

std::string summary(const Nfa& a) {
  return std::to_string(a.num_states()) + " states, " + std::to_string(a.transitions().size()) + " transitions, " +
         std::to_string(a.alphabet().size()) + " symbols";
}

bool accepts_epsilon(const Nfa& a) {
  return std::any_of(a.initials().begin(), a.initials().end(), [&](State s) { return a.is_final(s); });
}

// Σ ⊆ L - ε by reachability: every symbol leads from an initial state to a final one.
bool symbols_accepted(const Nfa& a) {
  for (std::size_t c = 0; c < a.alphabet().size(); ++c) {
    bool hit = false;
    for (State s : a.initials())
      for (const Transition& t : a.out(s))
        hit = hit || (t.sym == static_cast<Symbol>(c) && a.is_final(t.dst));
    if (!hit) return false;
  }
  return true;
}

}  // namespace

IntersectionResult intersect_wdfa(const WheelerDfa& w1, const WheelerDfa& w2) {
  for (const WheelerDfa* w : {&w1, &w2})
    if (auto v = check_wheeler_conditions(w->dfa.to_nfa(), w->order))
      throw PreconditionError("input is not a WDFA: " + v->describe(w->dfa.alphabet()));
  if (!(w1.dfa.alphabet() == w2.dfa.alphabet())) throw PreconditionError("alphabets differ");
  const WheelerDfa m1 = min_wdfa(w1.dfa), m2 = min_wdfa(w2.dfa);
  IntersectionResult out;
  const Dfa product = product_intersection(m1.dfa, m2.dfa);
  if (product.is_empty_language()) {
    out.result = {product, WheelerOrder::identity(1)};
    out.empty = true;
    return out;
  }
  out.bound = m1.dfa.num_states() + m2.dfa.num_states() - used_symbols(m1.dfa, m2.dfa) - 1;
  out.result = min_wdfa(product);
  if (out.result.dfa.num_states() > out.bound)
    throw Error("intersection has " + std::to_string(out.result.dfa.num_states()) + " states, above the bound " +
                std::to_string(out.bound));
  return out;
}

Dfa family_A(std::size_t n) { return forbidden_run(n, 0); }
Dfa family_B(std::size_t m) { return forbidden_run(m, 1); }

Nfa gadget_reduced_universality(const Nfa& a) {
  if (a.initials().size() != 1) throw PreconditionError("gadget needs exactly one initial state");
  const State q0 = a.initials()[0];
  if (!a.in(q0).empty()) throw PreconditionError("initial state has incoming edges");
  if (trim(a).num_states() != a.num_states()) throw PreconditionError("gadget needs a trimmed automaton");
  const std::size_t n = a.num_states(), k = a.alphabet().size();
  const Alphabet sigma = a.alphabet().with_symbol(a.alphabet().fresh_name("d"), k);
  const auto d = static_cast<Symbol>(k);
  std::vector<State> qs;
  for (State q = 0; q < n; ++q)
    if (q != q0) qs.push_back(q);
  const std::size_t chain = qs.empty() ? 0 : qs.size() - 1;
  std::vector<Transition> ts(a.transitions().begin(), a.transitions().end());
  for (State q = 0; q < n; ++q) ts.push_back({q, d, q});
  const auto p = [&](std::size_t i) { return static_cast<State>(n + i - 1); };
  if (!qs.empty()) ts.push_back({q0, d, qs[0]});
  if (chain > 0) ts.push_back({q0, d, p(1)});
  for (std::size_t i = 1; i <= chain; ++i) {
    ts.push_back({p(i), d, qs[i]});
    if (i < chain) ts.push_back({p(i), d, p(i + 1)});
  }
  return Nfa(sigma, n + chain, {q0}, std::vector<State>(a.finals().begin(), a.finals().end()), std::move(ts));
}

OrderGadget gadget_order_hardness(const Nfa& a, bool with_z_edge) {
  const std::size_t k = a.alphabet().size(), n = a.num_states();
  if (k == 0) throw PreconditionError("gadget needs a nonempty alphabet");
  if (trim(a).num_states() != n) throw PreconditionError("gadget needs a trimmed automaton");
  Alphabet sigma = a.alphabet().with_symbol(a.alphabet().fresh_name("y"), k);
  sigma = sigma.with_symbol(sigma.fresh_name("z"), k + 1);
  const auto y = static_cast<Symbol>(k), z = static_cast<Symbol>(k + 1);
  const State qe = static_cast<State>(n + 1), qf = static_cast<State>(n + 2);
  std::vector<Transition> ts;
  for (State s : a.initials()) ts.push_back({0, 0, s + 1});
  for (const Transition& t : a.transitions()) {
    ts.push_back({t.src + 1, t.sym, t.dst + 1});
    if (a.is_final(t.dst)) ts.push_back({t.src + 1, t.sym, qe});
  }
  for (State q = 0; q < n; ++q)
    for (std::size_t c = 0; c < k; ++c) ts.push_back({q + 1, static_cast<Symbol>(c), qf});
  ts.push_back({0, y, qe});
  ts.push_back({0, y, qf});
  if (with_z_edge) ts.push_back({0, z, qf});
  std::vector<State> finals;
  for (State f : a.finals()) finals.push_back(f + 1);
  finals.push_back(qe);
  finals.push_back(qf);
  return {Nfa(sigma, n + 3, {0}, std::move(finals), std::move(ts)), qe, qf};
}

OrderGadget gadget_reducedness(const Nfa& a) {
  return gadget_order_hardness(gadget_reduced_universality(normalize_initial(trim(a))), false);
}

Nfa gadget_wheeler_language(const Nfa& a) {
  if (!accepts_epsilon(a)) throw InputError("the gadget needs an automaton accepting the empty word");
  const std::size_t k = a.alphabet().size(), n = a.num_states();
  Alphabet sigma = a.alphabet();
  for (std::size_t i = 0; i < 3; ++i) sigma = sigma.with_symbol(sigma.fresh_name(std::string(1, "abc"[i])), i);
  const Symbol sa = 0, sb = 1, sc = 2;
  const State sink = static_cast<State>(n + 1);
  std::vector<Transition> ts;
  for (State s : a.initials()) ts.push_back({0, sa, s + 1});
  ts.push_back({0, sb, sink});
  for (const Transition& t : a.transitions()) ts.push_back({t.src + 1, t.sym + 3, t.dst + 1});
  for (State f : a.finals())
    for (State s : a.initials()) ts.push_back({f + 1, sc, s + 1});
  ts.push_back({sink, sc, sink});
  for (std::size_t c = 0; c < k; ++c) ts.push_back({sink, static_cast<Symbol>(c + 3), sink});
  std::vector<State> finals;
  for (State f : a.finals()) finals.push_back(f + 1);
  finals.push_back(sink);
  return Nfa(sigma, n + 2, {0}, std::move(finals), std::move(ts));
}

bool is_universal(const Nfa& a, std::size_t det_cap) {
  const Dfa m = minimize(determinize(a, det_cap).dfa);
  if (m.is_empty_language() || m.num_states() != 1 || !m.is_final(0)) return false;
  for (std::size_t c = 0; c < m.alphabet().size(); ++c)
    if (m.next(0, static_cast<Symbol>(c)) == kNoState) return false;
  return true;
}

bool incoming_less(const Nfa& a, State q, State p, std::size_t det_cap) {
  if (q >= a.num_states() || p >= a.num_states()) throw PreconditionError("state out of range");
  if (same_incoming(a, q, p, det_cap)) return false;
  const InputConsistent ic = make_input_consistent(a);
  const Determinized det = determinize(ic.nfa, det_cap);
  const ColexRelation rel = colex_partial_order_dfa(det.dfa);
  const std::size_t d = det.subsets.size();
  std::vector<char> has_q(d, 0), has_p(d, 0);
  for (std::size_t s = 0; s < d; ++s)
    for (State x : det.subsets[s]) {
      has_q[s] |= ic.origin[x] == q;
      has_p[s] |= ic.origin[x] == p;
    }
  // Words of result state s lie in I_q iff has_q[s].
  for (State s = 0; s < d; ++s) {
    if (!has_q[s]) continue;
    for (State t = 0; t < d; ++t)
      if (has_p[t] && !(has_p[s] && has_q[t]) && !rel.less(s, t)) return false;
  }
  return true;
}

GadgetReport report_reduced_universality(const Nfa& a, std::size_t det_cap) {
  GadgetReport r{"reduced-univ", summary(a), gadget_reduced_universality(normalize_initial(trim(a))), "L(A) = Σ*",
                 "L(A') = (Σ+d)*"};
  r.left_holds = is_universal(a, det_cap);
  r.right_holds = is_universal(r.output, det_cap);
  return r;
}

GadgetReport report_order_hardness(const Nfa& a, std::size_t det_cap) {
  const OrderGadget g = gadget_order_hardness(trim(a));
  GadgetReport r{"order", summary(a), g.nfa, "L(A) = Σ*", "q_e <_A' q_f and Σ ⊆ L - ε and ε ∈ L"};
  r.left_holds = is_universal(a, det_cap);
  r.right_holds = accepts_epsilon(a) && symbols_accepted(a) && incoming_less(g.nfa, g.qe, g.qf, det_cap);
  return r;
}

GadgetReport report_reducedness(const Nfa& a, std::size_t det_cap) {
  const OrderGadget g = gadget_reducedness(a);
  GadgetReport r{"reducedness", summary(a), g.nfa, "L(A) = Σ*", "A'' is not reduced and ε ∈ L"};
  r.left_holds = is_universal(a, det_cap);
  r.right_holds = accepts_epsilon(a) && !is_reduced(g.nfa, det_cap);
  return r;
}

GadgetReport report_wheeler_language(const Nfa& a, std::size_t det_cap) {
  GadgetReport r{"wheeler-lang", summary(a), gadget_wheeler_language(a), "L(A) = Σ*", "L(A'') is Wheeler"};
  r.left_holds = is_universal(a, det_cap);
  r.right_holds = is_wheeler_language_nfa(r.output, det_cap).wheeler;
  return r;
}

}  // namespace wat
