#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "wat/automaton.hpp"
#include "wat/colex.hpp"
#include "wat/wheeler_language.hpp"

namespace wat::cli {

using nlohmann::json;

/// What a command hands back to the dispatcher.
struct Report {
  int code = 0;
  json data = json::object();
  std::string text;
};

json automaton_json(const Nfa& a, const std::optional<WheelerOrder>& order = std::nullopt);
json automaton_json(const Dfa& d, const std::optional<WheelerOrder>& order = std::nullopt);
json transition_json(const Alphabet& s, const Transition& t);
json violation_json(const Alphabet& s, const Violation& v);
json witness_json(const Alphabet& s, const NonWheelerWitness& w);

std::string order_text(const std::vector<State>& by_rank);
std::string witness_text(const Alphabet& s, const NonWheelerWitness& w);

}  // namespace wat::cli
