#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "wat/error.hpp"
#include "wat/io.hpp"

namespace wat {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

State parse_state(std::string_view tok, std::size_t n, int line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("expected a state id, got '" + std::string(tok) + "'", line);
  if (v >= n) throw InputError("state " + std::string(tok) + " out of range", line);
  return static_cast<State>(v);
}

bool is_epsilon_name(std::string_view tok) { return tok == "ε" || tok == "eps" || tok == "epsilon" || tok == "_"; }

}  // namespace

Dfa AutomatonFile::dfa() const {
  if (!nfa.is_deterministic()) throw InputError("automaton is not deterministic");
  return Dfa::from_nfa(nfa);
}

AutomatonFile parse_automaton(std::string_view text) {
  std::optional<Alphabet> sigma;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::string_view, int>> initial_toks, final_toks, order_toks;
  bool has_initial = false, has_final = false, has_order = false, in_trans = false, has_trans = false;
  std::vector<std::pair<std::vector<std::string_view>, int>> trans_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (!in_trans) throw InputError("expected 'key: value'", line_no);
      trans_lines.emplace_back(toks, line_no);
      continue;
    }
    const auto key_toks = split_ws(line.substr(0, colon));
    if (key_toks.size() != 1) throw InputError("malformed section header", line_no);
    const std::string_view key = key_toks[0];
    const auto values = split_ws(line.substr(colon + 1));
    in_trans = false;
    const auto once = [&](bool& seen) {
      if (seen) throw InputError("duplicate section '" + std::string(key) + "'", line_no);
      seen = true;
    };
    if (key == "alphabet") {
      if (sigma) throw InputError("duplicate section 'alphabet'", line_no);
      std::vector<std::string> names;
      for (auto v : values) {
        if (is_epsilon_name(v)) throw InputError("epsilon is not a symbol", line_no);
        names.emplace_back(v);
      }
      try {
        sigma = Alphabet(std::move(names));
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no);
      }
    } else if (key == "states") {
      if (n) throw InputError("duplicate section 'states'", line_no);
      if (values.size() != 1) throw InputError("expected one state count", line_no);
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(values[0].data(), values[0].data() + values[0].size(), v);
      if (ec != std::errc() || ptr != values[0].data() + values[0].size() || v == 0)
        throw InputError("state count must be a positive integer", line_no);
      n = v;
    } else if (key == "initial" || key == "final" || key == "order") {
      auto& seen = key == "initial" ? has_initial : key == "final" ? has_final : has_order;
      auto& dst = key == "initial" ? initial_toks : key == "final" ? final_toks : order_toks;
      once(seen);
      for (auto v : values) dst.emplace_back(v, line_no);
    } else if (key == "trans") {
      once(has_trans);
      in_trans = true;
      if (!values.empty()) trans_lines.emplace_back(values, line_no);
    } else {
      throw InputError("unknown section '" + std::string(key) + "'", line_no);
    }
  }
  if (!sigma) throw InputError("missing 'alphabet:' section");
  if (!n) throw InputError("missing 'states:' section");
  if (!has_initial || initial_toks.empty()) throw InputError("missing 'initial:' section");

  const auto states_of = [&](const std::vector<std::pair<std::string_view, int>>& toks) {
    std::vector<State> out;
    for (const auto& [tok, line] : toks) out.push_back(parse_state(tok, *n, line));
    return out;
  };
  std::vector<State> initials = states_of(initial_toks), finals = states_of(final_toks);
  std::vector<Transition> ts;
  std::set<Transition> seen;
  for (const auto& [toks, line] : trans_lines) {
    if (toks.size() != 3) throw InputError("transition needs 'src symbol dst'", line);
    if (is_epsilon_name(toks[1])) throw InputError("epsilon transitions are not supported", line);
    if (!sigma->contains(toks[1])) throw InputError("undeclared symbol '" + std::string(toks[1]) + "'", line);
    const Transition t{parse_state(toks[0], *n, line), sigma->index(toks[1]), parse_state(toks[2], *n, line)};
    if (!seen.insert(t).second) throw InputError("duplicate transition", line);
    ts.push_back(t);
  }
  AutomatonFile out{Nfa(*sigma, *n, std::move(initials), std::move(finals), std::move(ts)), std::nullopt};
  if (has_order) {
    const int line = order_toks.empty() ? 0 : order_toks.front().second;
    try {
      out.order = WheelerOrder::from_sequence(states_of(order_toks));
    } catch (const InputError& e) {
      throw InputError(e.what(), line);
    }
    if (out.order->size() != *n) throw InputError("order must list every state once", line);
  }
  return out;
}

AutomatonFile read_automaton(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

std::string serialize(const Nfa& a, const std::optional<WheelerOrder>& order) {
  std::ostringstream out;
  const Alphabet& sigma = a.alphabet();
  out << "alphabet:";
  for (const auto& name : sigma.names()) out << ' ' << name;
  out << "\nstates: " << a.num_states() << "\ninitial:";
  for (State q : a.initials()) out << ' ' << q;
  out << "\nfinal:";
  for (State q : a.finals()) out << ' ' << q;
  out << "\ntrans:\n";
  for (const Transition& t : a.transitions()) out << t.src << ' ' << sigma.name(t.sym) << ' ' << t.dst << '\n';
  if (order) {
    out << "order:";
    for (State q : order->by_rank) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

std::string serialize(const Dfa& d, const std::optional<WheelerOrder>& order) { return serialize(d.to_nfa(), order); }

std::string export_dot(const Nfa& a, const std::optional<WheelerOrder>& order) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  if (a.is_empty_language()) {
    out << "}\n";
    return out.str();
  }
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  const auto node = [&](State q, std::optional<std::size_t> rank) {
    out << "  q" << q << " [label=\"q" << q << "\"";
    if (a.is_final(q)) out << ", shape=doublecircle";
    if (rank) out << ", xlabel=\"" << *rank << "\"";
    out << "];\n";
  };
  if (order) {
    for (std::size_t r = 0; r < order->size(); ++r) node(order->by_rank[r], r);
  } else {
    for (State q = 0; q < a.num_states(); ++q) node(q, std::nullopt);
  }
  for (State q : a.initials()) out << "  start" << q << " [shape=point];\n  start" << q << " -> q" << q << ";\n";
  for (const Transition& t : a.transitions())
    out << "  q" << t.src << " -> q" << t.dst << " [label=\"" << a.alphabet().name(t.sym) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace wat
