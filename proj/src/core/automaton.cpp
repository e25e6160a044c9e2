#include "wat/automaton.hpp"

#include <algorithm>
#include <tuple>

#include "wat/error.hpp"

namespace wat {

namespace {

void sort_unique(std::vector<State>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_ids(const std::vector<State>& ids, std::size_t n, const char* what) {
  for (State q : ids)
    if (q >= n) throw InputError(std::string(what) + " state " + std::to_string(q) + " out of range");
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::size_t num_states, std::vector<State> initials, std::vector<State> finals,
         std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initials_(std::move(initials)),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
  if (num_states_ == 0) throw InputError("an automaton needs at least one state");
  if (num_states_ >= kNoState) throw InputError("too many states");
  check_ids(initials_, num_states_, "initial");
  check_ids(finals_, num_states_, "final");
  if (initials_.empty()) throw InputError("no initial state");
  for (const Transition& t : transitions_) {
    if (t.src >= num_states_ || t.dst >= num_states_)
      throw InputError("transition endpoint out of range");
    if (!alphabet_.valid(t.sym)) throw InputError("transition symbol outside the alphabet");
  }
  sort_unique(initials_);
  sort_unique(finals_);
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  index();
}

void Nfa::index() {
  final_mask_.assign(num_states_, 0);
  for (State q : finals_) final_mask_[q] = 1;
  out_offset_.assign(num_states_ + 1, 0);
  in_offset_.assign(num_states_ + 1, 0);
  for (const Transition& t : transitions_) {
    ++out_offset_[t.src + 1];
    ++in_offset_[t.dst + 1];
  }
  for (std::size_t i = 0; i < num_states_; ++i) {
    out_offset_[i + 1] += out_offset_[i];
    in_offset_[i + 1] += in_offset_[i];
  }
  by_dst_ = transitions_;
  std::sort(by_dst_.begin(), by_dst_.end(), [](const Transition& x, const Transition& y) {
    return std::tie(x.dst, x.sym, x.src) < std::tie(y.dst, y.sym, y.src);
  });
}

Nfa Nfa::empty(Alphabet alphabet) {
  Nfa a(std::move(alphabet), 1, {0}, {}, {});
  a.empty_ = true;
  return a;
}

bool Nfa::is_initial(State q) const { return std::binary_search(initials_.begin(), initials_.end(), q); }

std::span<const Transition> Nfa::out(State q) const {
  return {transitions_.data() + out_offset_[q], transitions_.data() + out_offset_[q + 1]};
}

std::span<const Transition> Nfa::in(State q) const {
  return {by_dst_.data() + in_offset_[q], by_dst_.data() + in_offset_[q + 1]};
}

bool Nfa::is_deterministic() const {
  if (initials_.size() != 1) return false;
  for (std::size_t i = 1; i < transitions_.size(); ++i)
    if (transitions_[i].src == transitions_[i - 1].src && transitions_[i].sym == transitions_[i - 1].sym) return false;
  return true;
}

bool Nfa::operator==(const Nfa& other) const {
  return alphabet_ == other.alphabet_ && num_states_ == other.num_states_ && initials_ == other.initials_ &&
         finals_ == other.finals_ && transitions_ == other.transitions_ && empty_ == other.empty_;
}

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<State> finals,
         std::vector<State> table)
    : alphabet_(std::move(alphabet)), num_states_(num_states), initial_(initial), table_(std::move(table)) {
  if (num_states_ == 0) throw InputError("an automaton needs at least one state");
  if (num_states_ >= kNoState) throw InputError("too many states");
  if (initial_ >= num_states_) throw InputError("initial state out of range");
  if (table_.size() != num_states_ * alphabet_.size()) throw PreconditionError("transition table has wrong size");
  for (State q : table_)
    if (q != kNoState && q >= num_states_) throw InputError("transition target out of range");
  check_ids(finals, num_states_, "final");
  final_mask_.assign(num_states_, 0);
  for (State q : finals) final_mask_[q] = 1;
}

Dfa Dfa::empty(Alphabet alphabet) {
  const std::size_t k = alphabet.size();
  Dfa d(std::move(alphabet), 1, 0, {}, std::vector<State>(k, kNoState));
  d.empty_ = true;
  return d;
}

Dfa Dfa::from_nfa(const Nfa& nfa) {
  if (!nfa.is_deterministic()) throw PreconditionError("automaton is not deterministic");
  const std::size_t k = nfa.alphabet().size();
  std::vector<State> table(nfa.num_states() * k, kNoState);
  for (const Transition& t : nfa.transitions()) table[t.src * k + static_cast<std::size_t>(t.sym)] = t.dst;
  Dfa d(nfa.alphabet(), nfa.num_states(), nfa.initials()[0],
        std::vector<State>(nfa.finals().begin(), nfa.finals().end()), std::move(table));
  d.empty_ = nfa.is_empty_language();
  return d;
}

std::vector<State> Dfa::finals() const {
  std::vector<State> f;
  for (State q = 0; q < num_states_; ++q)
    if (final_mask_[q]) f.push_back(q);
  return f;
}

State Dfa::run(std::span<const Symbol> word, State from) const {
  State q = from;
  for (Symbol a : word) {
    if (q == kNoState) break;
    if (!alphabet_.valid(a)) throw PreconditionError("symbol outside the alphabet");
    q = next(q, a);
  }
  return q;
}

bool Dfa::accepts(std::span<const Symbol> word) const {
  const State q = run(word);
  return q != kNoState && is_final(q);
}

std::size_t Dfa::num_transitions() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](State q) { return q != kNoState; }));
}

bool Dfa::initial_has_in_edges() const { return std::find(table_.begin(), table_.end(), initial_) != table_.end(); }

Nfa Dfa::to_nfa() const {
  const std::size_t k = alphabet_.size();
  std::vector<Transition> ts;
  ts.reserve(num_transitions());
  for (State q = 0; q < num_states_; ++q)
    for (std::size_t a = 0; a < k; ++a)
      if (State r = table_[q * k + a]; r != kNoState) ts.push_back({q, static_cast<Symbol>(a), r});
  if (empty_) return Nfa::empty(alphabet_);
  return Nfa(alphabet_, num_states_, {initial_}, finals(), std::move(ts));
}

ReverseIndex::ReverseIndex(const Dfa& dfa) : sigma_(dfa.alphabet().size()) {
  const std::size_t n = dfa.num_states();
  offset_.assign(n * sigma_ + 1, 0);
  for (State p = 0; p < n; ++p)
    for (std::size_t a = 0; a < sigma_; ++a)
      if (State q = dfa.next(p, static_cast<Symbol>(a)); q != kNoState) ++offset_[q * sigma_ + a + 1];
  for (std::size_t i = 0; i < n * sigma_; ++i) offset_[i + 1] += offset_[i];
  lists_.assign(offset_.back(), 0);
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (State p = 0; p < n; ++p)
    for (std::size_t a = 0; a < sigma_; ++a)
      if (State q = dfa.next(p, static_cast<Symbol>(a)); q != kNoState) lists_[fill[q * sigma_ + a]++] = p;
}

}  // namespace wat
