#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "wat/automaton.hpp"
#include "wat/colex.hpp"

namespace wat {

/// Contents of an automaton file.
///
/// ```
/// # comment
/// alphabet: a c d f      (declaration order is the symbol order)
/// states: 6
/// initial: 0
/// final: 1 2 5
/// trans:
/// 0 a 1
/// 0 d 4
/// order: 0 1 2 3 4 5     (optional claimed order, smallest first)
/// ```
struct AutomatonFile {
  Nfa nfa;
  std::optional<WheelerOrder> order;

  bool deterministic() const { return nfa.is_deterministic(); }
  /// Throws InputError when the automaton is not deterministic.
  Dfa dfa() const;
};

/// Throws InputError carrying the offending line number.
AutomatonFile parse_automaton(std::string_view text);
AutomatonFile read_automaton(const std::filesystem::path& path);

std::string serialize(const Nfa& a, const std::optional<WheelerOrder>& order = std::nullopt);
std::string serialize(const Dfa& d, const std::optional<WheelerOrder>& order = std::nullopt);

/// Graphviz text. Finals are double circles; with an order, nodes are listed
/// by rank and carry their rank as an external label.
std::string export_dot(const Nfa& a, const std::optional<WheelerOrder>& order = std::nullopt);

}  // namespace wat
