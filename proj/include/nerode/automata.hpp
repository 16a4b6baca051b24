#pragma once

// Automaton data model: alphabets, words, NFAs and complete DFAs.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nerode {

using State = std::uint32_t;
using Symbol = std::uint32_t;

/// Sorted, duplicate-free set of states.
using StateSet = std::vector<State>;

/// A sequence of symbol indices into some Alphabet.
using Word = std::vector<Symbol>;

/// Thrown for malformed inputs: foreign symbols, bad indices, violated
/// structural preconditions, alphabet mismatches.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ordered, non-empty set of symbol tokens (no whitespace, no '#', not
/// "eps"). The declaration order is the total order used for enumeration
/// and canonical forms.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols);

  /// Single-character symbols "a", "b", ... (at most 26).
  static Alphabet letters(std::size_t count);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string &name(Symbol a) const { return symbols_.at(a); }
  const std::vector<std::string> &names() const noexcept { return symbols_; }

  /// Index of a symbol token; throws InputError when undeclared.
  Symbol index(std::string_view token) const;
  bool contains(std::string_view token) const noexcept;

  /// True when every token is one character long.
  bool single_char() const noexcept;

  friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
  std::vector<std::string> symbols_;
};

/// Renders a word: "eps" for the empty word, plain concatenation when all
/// symbols are single characters, otherwise space-separated tokens.
std::string format_word(const Alphabet &alphabet, const Word &w);

/// Inverse of format_word for a given alphabet.
Word parse_word(const Alphabet &alphabet, std::string_view text);

Word reversed(Word w);

/// Nondeterministic automaton over dense state indices 0..state_count-1.
/// Successor lists are kept sorted and duplicate-free, so structural
/// equality is componentwise equality.
class Nfa {
public:
  Nfa(Alphabet alphabet, std::size_t state_count);

  const Alphabet &alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }

  void add_transition(State from, Symbol a, State to);
  void add_initial(State q);
  void add_final(State q);
  void set_initial(StateSet states);
  void set_final(StateSet states);

  const StateSet &successors(State q, Symbol a) const {
    return succ_[index(q, a)];
  }
  const StateSet &initial() const noexcept { return initial_; }
  const StateSet &final_states() const noexcept { return final_; }
  bool is_initial(State q) const;
  bool is_final(State q) const;

  std::size_t transition_count() const noexcept;

  /// One-step image of a state set.
  StateSet post(const StateSet &from, Symbol a) const;
  /// One-step pre-image of a state set.
  StateSet pre(const StateSet &to, Symbol a) const;

  friend bool operator==(const Nfa &, const Nfa &) = default;

private:
  std::size_t index(State q, Symbol a) const {
    return static_cast<std::size_t>(q) * alphabet_.size() + a;
  }
  void check_state(State q) const;

  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<StateSet> succ_;
  StateSet initial_;
  StateSet final_;
};

/// Complete deterministic automaton with a single initial state.
/// Optionally carries, per state, the subset of some source automaton's
/// states it stands for (filled by determinize).
class Dfa {
public:
  /// All transitions initially point to state 0; callers overwrite them.
  Dfa(Alphabet alphabet, std::size_t state_count, State initial = 0);

  const Alphabet &alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return final_.size(); }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }

  State initial() const noexcept { return initial_; }
  void set_initial(State q);

  State next(State q, Symbol a) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
  }
  void set_next(State q, Symbol a, State to);

  bool is_final(State q) const { return final_.at(q) != 0; }
  void set_final(State q, bool accepting = true);
  StateSet final_states() const;

  /// State reached from q by reading w.
  State run(State q, const Word &w) const;

  const std::vector<StateSet> &subsets() const noexcept { return subsets_; }
  void set_subsets(std::vector<StateSet> subsets);

  /// Every state reachable from the initial one.
  bool all_reachable() const;

  /// The same automaton viewed as an Nfa.
  Nfa to_nfa() const;

  /// Structural equality, ignoring subset metadata.
  bool same_structure(const Dfa &other) const;

private:
  void check_state(State q) const;

  Alphabet alphabet_;
  State initial_;
  std::vector<State> delta_;
  std::vector<char> final_;
  std::vector<StateSet> subsets_;
};

/// Checks that an Nfa is deterministic, complete and has one initial state,
/// and converts it. Throws InputError naming the violated property.
Dfa as_dfa(const Nfa &n);

} // namespace nerode
