#include "report.hpp"

namespace wat::cli {

json automaton_json(const Nfa& a, const std::optional<WheelerOrder>& order) {
  json ts = json::array();
  for (const Transition& t : a.transitions()) ts.push_back(transition_json(a.alphabet(), t));
  json out{
      {"alphabet", a.alphabet().names()},
      {"states", a.num_states()},
      {"initial", std::vector<State>(a.initials().begin(), a.initials().end())},
      {"final", std::vector<State>(a.finals().begin(), a.finals().end())},
      {"transitions", ts},
      {"empty", a.is_empty_language()},
      {"order", nullptr},
  };
  if (order) out["order"] = order->by_rank;
  return out;
}

json automaton_json(const Dfa& d, const std::optional<WheelerOrder>& order) {
  return automaton_json(d.to_nfa(), order);
}

json transition_json(const Alphabet& s, const Transition& t) { return json::array({t.src, s.name(t.sym), t.dst}); }

json violation_json(const Alphabet& s, const Violation& v) {
  json out{{"kind", to_string(v.kind)}, {"first", nullptr}, {"second", nullptr}};
  if (v.first) out["first"] = transition_json(s, *v.first);
  if (v.second) out["second"] = transition_json(s, *v.second);
  return out;
}

json witness_json(const Alphabet& s, const NonWheelerWitness& w) {
  return {{"mu", format_word(s, w.mu)}, {"nu", format_word(s, w.nu)}, {"gamma", format_word(s, w.gamma)},
          {"u", w.u},                   {"v", w.v}};
}

std::string order_text(const std::vector<State>& by_rank) {
  std::string s;
  for (State q : by_rank) s += (s.empty() ? "q" : "<q") + std::to_string(q);
  return s;
}

std::string witness_text(const Alphabet& s, const NonWheelerWitness& w) {
  return "mu=" + format_word(s, w.mu) + " (q" + std::to_string(w.u) + "), nu=" + format_word(s, w.nu) + " (q" +
         std::to_string(w.v) + "), gamma=" + format_word(s, w.gamma);
}

}  // namespace wat::cli
