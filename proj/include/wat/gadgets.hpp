#pragma once

#include <string>

#include "wat/automaton.hpp"
#include "wat/limits.hpp"
#include "wat/min_wdfa.hpp"

namespace wat {

struct IntersectionResult {
  /// Minimum WDFA of the intersection; the flagged empty automaton when it is empty.
  WheelerDfa result;
  /// |W1| + |W2| - |Σ_eff| - 1 over the minimum WDFAs of the inputs.
  std::size_t bound = 0;
  bool empty = false;
};

/// Intersection of two Wheeler languages given by WDFAs. Inputs are replaced by
/// their minimum WDFAs before the bound is taken; exceeding it throws Error.
IntersectionResult intersect_wdfa(const WheelerDfa& w1, const WheelerDfa& w2);

/// Minimum DFA over {a, b} of the words without a^{n+1} as a factor.
Dfa family_A(std::size_t n);
/// Minimum DFA over {a, b} of the words without b^{m+1} as a factor.
Dfa family_B(std::size_t m);

/// Adds a fresh last symbol d with self-loops everywhere and a d-chain that
/// gives every state a distinct incoming language. Needs a trimmed automaton with
/// one initial state and no edge into it. New chain states follow the old ones.
Nfa gadget_reduced_universality(const Nfa& a);

struct OrderGadget {
  Nfa nfa;
  State qe = 0;
  State qf = 0;
};

/// New initial state 0 (old states shift by one), fresh symbols y < z above Σ,
/// q_e gathering a1·(L - ε) + y and q_f gathering a1·Pref(L)·Σ + y (+ z).
OrderGadget gadget_order_hardness(const Nfa& a, bool with_z_edge = true);

/// The two previous gadgets chained, without the z edge. The input is first
/// brought to a single initial state without incoming edges.
OrderGadget gadget_reducedness(const Nfa& a);

/// Fresh symbols a < b < c placed before Σ, c back-edges from finals to the
/// initial states, a new initial state 0 and an accepting b-branch sink with
/// loops on Σ and c. Throws InputError when ε is not accepted.
Nfa gadget_wheeler_language(const Nfa& a);

/// True when L(a) is Σ*.
bool is_universal(const Nfa& a, std::size_t det_cap = Limits{}.det_cap);

/// q <_A p: I_q and I_p differ and every pair α ∈ I_q, β ∈ I_p outside the
/// common part has α ≺ β. Decided on the input-consistent determinization.
bool incoming_less(const Nfa& a, State q, State p, std::size_t det_cap = Limits{}.det_cap);

struct GadgetReport {
  std::string gadget;
  std::string input_summary;
  Nfa output;
  std::string left;
  std::string right;
  bool left_holds = false;
  bool right_holds = false;
  bool agree() const noexcept { return left_holds == right_holds; }
};

/// Report builders trim the input and, where the gadget needs it, give it a
/// single initial state without incoming edges first.
///
/// L(A) = Σ* against L(A') = (Σ+d)*.
GadgetReport report_reduced_universality(const Nfa& a, std::size_t det_cap = Limits{}.det_cap);
/// L(A) = Σ* against q_e <_A' q_f together with Σ ⊆ L - ε and ε ∈ L.
GadgetReport report_order_hardness(const Nfa& a, std::size_t det_cap = Limits{}.det_cap);
/// L(A) = Σ* against A'' not reduced together with ε ∈ L.
GadgetReport report_reducedness(const Nfa& a, std::size_t det_cap = Limits{}.det_cap);
/// L(A) = Σ* against L(A'') Wheeler.
GadgetReport report_wheeler_language(const Nfa& a, std::size_t det_cap = Limits{}.det_cap);

}  // namespace wat
