#pragma once

// Language operations shared by every construction: reversal, subset
// construction, Boolean products, emptiness, equivalence and isomorphism.

#include <optional>
#include <vector>

#include "nerode/automata.hpp"

namespace nerode {

/// Flips every edge and swaps initial and final sets.
Nfa reverse(const Nfa &n);
Nfa reverse(const Dfa &d);

/// Subset construction over the subsets reachable from the initial set.
/// The empty subset is kept when reachable; each result state records its
/// subset in Dfa::subsets().
Dfa determinize(const Nfa &n);
Dfa determinize(const Dfa &d);

bool accepts(const Nfa &n, const Word &w);
bool accepts(const Dfa &d, const Word &w);

/// All accepted words of length <= max_len, in length-lexicographic order.
std::vector<Word> enumerate_accepted(const Nfa &n, std::size_t max_len);
std::vector<Word> enumerate_accepted(const Dfa &d, std::size_t max_len);

Dfa complement(const Dfa &d);

enum class BoolOp { And, Or, Xor, Diff };

/// Reachable synchronous product; a pair is final iff op(final1, final2).
Dfa product(const Dfa &d1, const Dfa &d2, BoolOp op);

bool is_empty(const Nfa &n);
bool is_empty(const Dfa &d);

/// Length-lexicographically least accepted word, if any.
std::optional<Word> shortest_accepted(const Nfa &n);
std::optional<Word> shortest_accepted(const Dfa &d);

bool language_equal(const Nfa &n1, const Nfa &n2);
bool language_equal(const Dfa &d1, const Dfa &d2);

/// Shortest word in the symmetric difference of the two languages.
std::optional<Word> distinguishing_word(const Nfa &n1, const Nfa &n2);

/// Canonical renumbering obtained by BFS from the initial state, expanding
/// symbols in alphabet order. Throws InputError on unreachable states.
Dfa canonical_form(const Dfa &d);

bool dfa_isomorphic(const Dfa &d1, const Dfa &d2);

/// Isomorphism of co-deterministic automata, decided on their reverses.
/// Throws InputError when a reverse is not deterministic or not complete.
bool codfa_isomorphic(const Nfa &n1, const Nfa &n2);

/// True when reverse(n) is a complete DFA (one final state, no two
/// predecessors on the same symbol, every state with a predecessor on every
/// symbol).
bool is_codeterministic(const Nfa &n);

enum class Side { Left, Right };

/// Right: same automaton started in q (recognizes the right language of q).
/// Left: same automaton accepting only in q (the left language of q).
Nfa state_language(const Nfa &n, State q, Side side);
Dfa state_language(const Dfa &d, State q, Side side);

} // namespace nerode
