#include "wat/alphabet.hpp"

#include <algorithm>

#include "wat/error.hpp"

namespace wat {

namespace {
const std::string kHashName = "#";
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) throw InputError("empty symbol name");
    if (n == kHashName) throw InputError("'#' is reserved and cannot be declared");
    if (n.find_first_of(" \t.") != std::string::npos) throw InputError("symbol name '" + n + "' contains a separator");
    if (!index_.emplace(n, static_cast<Symbol>(i)).second) throw InputError("duplicate symbol '" + n + "'");
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (s == kHash) return kHashName;
  if (!valid(s)) throw PreconditionError("symbol index out of range");
  return names_[static_cast<std::size_t>(s)];
}

bool Alphabet::contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

Symbol Alphabet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("undeclared symbol '" + std::string(name) + "'");
  return it->second;
}

std::string Alphabet::fresh_name(std::string_view base) const {
  std::string n(base);
  while (contains(n)) n += '\'';
  return n;
}

Alphabet Alphabet::with_symbol(std::string name, std::size_t pos) const {
  std::vector<std::string> names = names_;
  pos = std::min(pos, names.size());
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(pos), std::move(name));
  return Alphabet(std::move(names));
}

bool Alphabet::compact() const noexcept {
  return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

std::string format_word(const Alphabet& alphabet, std::span<const Symbol> word) {
  if (word.empty()) return "ε";
  std::string out;
  const bool tight = alphabet.compact();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !tight) out += '.';
    out += alphabet.name(word[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (text.empty() || text == "ε") return w;
  const bool has_sep = text.find_first_of(" .") != std::string_view::npos;
  if (alphabet.compact() && !has_sep) {
    for (char c : text) w.push_back(alphabet.index(std::string_view(&c, 1)));
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '.')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '.') ++j;
    if (j > i) w.push_back(alphabet.index(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

bool is_suffix(std::span<const Symbol> suffix, std::span<const Symbol> word) {
  if (suffix.size() > word.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), word.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

}  // namespace wat
