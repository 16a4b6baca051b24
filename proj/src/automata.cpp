#include "nerode/automata.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nerode {

namespace {

void insert_sorted(StateSet &set, State q) {
  auto it = std::lower_bound(set.begin(), set.end(), q);
  if (it == set.end() || *it != q)
    set.insert(it, q);
}

bool contains_sorted(const StateSet &set, State q) {
  return std::binary_search(set.begin(), set.end(), q);
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto &s = symbols_[i];
    if (s.empty())
      throw InputError("alphabet symbol must not be empty");
    if (s == "eps")
      throw InputError("'eps' is reserved for the empty word");
    if (std::any_of(s.begin(), s.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; }))
      throw InputError("alphabet symbol '" + s + "' contains whitespace");
    if (s.find('#') != std::string::npos)
      throw InputError("alphabet symbol '" + s + "' contains '#'");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j] == s)
        throw InputError("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::letters(std::size_t count) {
  if (count == 0 || count > 26)
    throw InputError("letter alphabet size must be in 1..26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i)
    names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

Symbol Alphabet::index(std::string_view token) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == token)
      return static_cast<Symbol>(i);
  throw InputError("symbol '" + std::string(token) + "' not in alphabet");
}

bool Alphabet::contains(std::string_view token) const noexcept {
  return std::find(symbols_.begin(), symbols_.end(), token) != symbols_.end();
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string &s) { return s.size() == 1; });
}

std::string format_word(const Alphabet &alphabet, const Word &w) {
  if (w.empty())
    return "eps";
  std::string out;
  const bool compact = alphabet.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0)
      out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet &alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;)
    tokens.push_back(t);
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "eps"))
    return {};
  Word w;
  if (alphabet.single_char() && tokens.size() == 1) {
    for (char c : tokens[0])
      w.push_back(alphabet.index(std::string(1, c)));
    return w;
  }
  for (const auto &t : tokens)
    w.push_back(alphabet.index(t));
  return w;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)), state_count_(state_count),
      succ_(state_count * alphabet_.size()) {}

void Nfa::check_state(State q) const {
  if (q >= state_count_)
    throw InputError("state " + std::to_string(q) + " out of range (" +
                     std::to_string(state_count_) + " states)");
}

void Nfa::add_transition(State from, Symbol a, State to) {
  check_state(from);
  check_state(to);
  if (a >= alphabet_.size())
    throw InputError("symbol index " + std::to_string(a) + " out of range");
  insert_sorted(succ_[index(from, a)], to);
}

void Nfa::add_initial(State q) {
  check_state(q);
  insert_sorted(initial_, q);
}

void Nfa::add_final(State q) {
  check_state(q);
  insert_sorted(final_, q);
}

void Nfa::set_initial(StateSet states) {
  initial_.clear();
  for (State q : states)
    add_initial(q);
}

void Nfa::set_final(StateSet states) {
  final_.clear();
  for (State q : states)
    add_final(q);
}

bool Nfa::is_initial(State q) const { return contains_sorted(initial_, q); }
bool Nfa::is_final(State q) const { return contains_sorted(final_, q); }

std::size_t Nfa::transition_count() const noexcept {
  std::size_t total = 0;
  for (const auto &s : succ_)
    total += s.size();
  return total;
}

StateSet Nfa::post(const StateSet &from, Symbol a) const {
  std::vector<char> mark(state_count_, 0);
  for (State q : from)
    for (State t : successors(q, a))
      mark[t] = 1;
  StateSet out;
  for (State q = 0; q < state_count_; ++q)
    if (mark[q])
      out.push_back(q);
  return out;
}

StateSet Nfa::pre(const StateSet &to, Symbol a) const {
  StateSet out;
  for (State q = 0; q < state_count_; ++q) {
    const auto &s = successors(q, a);
    if (std::any_of(s.begin(), s.end(),
                    [&](State t) { return contains_sorted(to, t); }))
      out.push_back(q);
  }
  return out;
}

// Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State initial)
    : alphabet_(std::move(alphabet)), initial_(initial),
      delta_(state_count * alphabet_.size(), 0), final_(state_count, 0) {
  if (state_count == 0)
    throw InputError("a complete DFA needs at least one state");
  check_state(initial);
}

void Dfa::check_state(State q) const {
  if (q >= final_.size())
    throw InputError("state " + std::to_string(q) + " out of range (" +
                     std::to_string(final_.size()) + " states)");
}

void Dfa::set_initial(State q) {
  check_state(q);
  initial_ = q;
}

void Dfa::set_next(State q, Symbol a, State to) {
  check_state(q);
  check_state(to);
  if (a >= alphabet_.size())
    throw InputError("symbol index " + std::to_string(a) + " out of range");
  delta_[static_cast<std::size_t>(q) * alphabet_.size() + a] = to;
}

void Dfa::set_final(State q, bool accepting) {
  check_state(q);
  final_[q] = accepting ? 1 : 0;
}

StateSet Dfa::final_states() const {
  StateSet out;
  for (State q = 0; q < final_.size(); ++q)
    if (final_[q])
      out.push_back(q);
  return out;
}

State Dfa::run(State q, const Word &w) const {
  check_state(q);
  for (Symbol a : w) {
    if (a >= alphabet_.size())
      throw InputError("symbol index " + std::to_string(a) + " out of range");
    q = next(q, a);
  }
  return q;
}

void Dfa::set_subsets(std::vector<StateSet> subsets) {
  if (!subsets.empty() && subsets.size() != state_count())
    throw InputError("subset metadata size does not match state count");
  subsets_ = std::move(subsets);
}

bool Dfa::all_reachable() const {
  std::vector<char> seen(state_count(), 0);
  std::vector<State> stack{initial_};
  seen[initial_] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Symbol a = 0; a < symbol_count(); ++a) {
      State t = next(q, a);
      if (!seen[t]) {
        seen[t] = 1;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count == state_count();
}

Nfa Dfa::to_nfa() const {
  Nfa n(alphabet_, state_count());
  for (State q = 0; q < state_count(); ++q)
    for (Symbol a = 0; a < symbol_count(); ++a)
      n.add_transition(q, a, next(q, a));
  n.add_initial(initial_);
  n.set_final(final_states());
  return n;
}

bool Dfa::same_structure(const Dfa &other) const {
  return alphabet_ == other.alphabet_ && initial_ == other.initial_ &&
         delta_ == other.delta_ && final_ == other.final_;
}

Dfa as_dfa(const Nfa &n) {
  if (n.initial().size() != 1)
    throw InputError("not deterministic: " +
                     std::to_string(n.initial().size()) + " initial states");
  for (State q = 0; q < n.state_count(); ++q)
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      if (n.successors(q, a).size() > 1)
        throw InputError("not deterministic: state " + std::to_string(q) +
                         " has several successors on '" +
                         n.alphabet().name(a) + "'");
  for (State q = 0; q < n.state_count(); ++q)
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      if (n.successors(q, a).empty())
        throw InputError("not complete: state " + std::to_string(q) +
                         " has no successor on '" + n.alphabet().name(a) +
                         "'");
  Dfa d(n.alphabet(), n.state_count(), n.initial().front());
  for (State q = 0; q < n.state_count(); ++q)
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      d.set_next(q, a, n.successors(q, a).front());
  for (State q : n.final_states())
    d.set_final(q);
  return d;
}

} // namespace nerode
