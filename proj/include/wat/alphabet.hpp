#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wat {

/// Index of a symbol in its alphabet; the declaration order is the symbol order.
using Symbol = std::int32_t;

/// The synthetic label of an initial state. Strictly below every real symbol.
inline constexpr Symbol kHash = -1;

/// A finite sequence of symbols, ε being the empty vector.
using Word = std::vector<Symbol>;

/// An ordered alphabet. Symbol `i` is the i-th declared name.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Name of a symbol; `kHash` prints as "#".
  const std::string& name(Symbol s) const;
  bool contains(std::string_view name) const;
  /// Throws InputError for undeclared names.
  Symbol index(std::string_view name) const;
  bool valid(Symbol s) const noexcept { return s >= 0 && static_cast<std::size_t>(s) < names_.size(); }

  /// A name not yet declared, derived from `base` by appending primes.
  std::string fresh_name(std::string_view base) const;
  /// Copy of this alphabet with `name` inserted at position `pos`.
  Alphabet with_symbol(std::string name, std::size_t pos) const;

  /// True when every name is a single character, so words print without separators.
  bool compact() const noexcept;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Renders a word; ε prints as "ε".
std::string format_word(const Alphabet& alphabet, std::span<const Symbol> word);

/// Parses a word. Compact alphabets accept "acc"; otherwise names are separated
/// by spaces or dots. "" and "ε" denote the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Last symbol of a word, `kHash` for ε.
inline Symbol end_symbol(std::span<const Symbol> word) { return word.empty() ? kHash : word.back(); }

/// True when `suffix` is a (not necessarily proper) suffix of `word`.
bool is_suffix(std::span<const Symbol> suffix, std::span<const Symbol> word);

}  // namespace wat
