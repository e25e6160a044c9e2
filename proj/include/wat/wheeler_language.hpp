#pragma once

#include <optional>
#include <string>

#include "wat/automaton.hpp"
#include "wat/limits.hpp"

namespace wat {

/// Evidence that L is not Wheeler: μ reaches u, ν reaches v (u ≠ v in the
/// minimum DFA), γ labels a cycle at both, γ is a suffix of neither, and μ, ν lie
/// on the same side of γ in co-lex order.
struct NonWheelerWitness {
  Word mu;
  Word nu;
  Word gamma;
  State u = 0;
  State v = 0;
};

struct LanguageVerdict {
  bool wheeler = true;
  std::optional<NonWheelerWitness> witness;
  /// The minimum DFA the witness refers to.
  Dfa minimal;
};

/// Upper bound n^3 + 2n^2 + n + 2 on the witness length for an n-state minimum DFA.
std::size_t witness_length_bound(std::size_t n);

/// Replays a witness on a minimum DFA. On failure `why` receives the reason.
bool validate_witness(const Dfa& minimal, const NonWheelerWitness& w, std::string* why = nullptr);

/// Decides whether L(d) is Wheeler.
///
/// After minimization, every pair u < v lying on a common cycle is searched
/// backwards: a node holds the two cycle positions and, for μ and ν, either the
/// state reached while still equal to the read suffix of γ or the settled
/// comparison (suffix, smaller, greater). The witness has the shortest γ over
/// all pairs, then the shortest μ and ν for that γ.
LanguageVerdict is_wheeler_language_dfa(const Dfa& d);

/// Determinize, then decide on the minimum DFA.
LanguageVerdict is_wheeler_language_nfa(const Nfa& a, std::size_t det_cap = Limits{}.det_cap);

/// Exhaustive search over γ of length at most `max_len` and μ, ν with
/// |μ|, |ν| ≤ |γ|. Returns the witness least by (|γ|, γ, u, v, |μ|, μ, |ν|, ν) in
/// co-lex order, or nothing. `d` must be minimal.
std::optional<NonWheelerWitness> bounded_witness_oracle(const Dfa& d, std::size_t max_len);

struct StabilizationProbe {
  std::size_t previous = 0;  ///< boundaries at length len-1
  std::size_t current = 0;   ///< boundaries at length len
  bool grows = false;
};

/// Counts state changes between co-lex neighbours of Pref(L) ∩ Σ^{≤len}. A
/// diagnostic only: growth across lengths hints at a non-Wheeler language.
StabilizationProbe monotone_stabilization_probe(const Dfa& d, std::size_t len);

}  // namespace wat
