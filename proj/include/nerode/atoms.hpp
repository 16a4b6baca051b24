#pragma once

// Atoms of a regular language: the non-empty signed intersections of its
// left quotients, equivalently the classes of the left Nerode congruence.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "nerode/automata.hpp"

namespace nerode {

struct Atom {
  /// States of the minimal DFA (quotients) taken uncomplemented.
  StateSet positive_quotients;
  /// Minimal DFA of the atom: the intersection of the positive quotients
  /// and the complements of the others.
  Dfa language;
  /// Shortest member, ties broken lexicographically.
  Word sample;
};

struct AtomSet {
  std::vector<Atom> atoms;
  /// Minimal DFA of L; its state q stands for the quotient accepted from q.
  Dfa source_minimal_dfa;
};

/// Atoms are read off the subset construction applied to the reverse of
/// the minimal DFA: the subset reached by reverse(w) is exactly the set of
/// quotients containing w.
AtomSet compute_atoms(const Nfa &n);

/// The quotients as DFAs (minimal DFA restarted in each state).
std::vector<Dfa> quotient_languages(const Dfa &minimal);

/// Signed intersection of the quotients selected by positive.
Dfa signed_intersection(const std::vector<Dfa> &quotients,
                        const StateSet &positive);

/// Index of the unique atom containing w.
std::size_t atom_of(const AtomSet &atoms, const Word &w);

/// True iff every atom is either inside L(s) or disjoint from it.
bool is_union_of_atoms(const AtomSet &atoms, const Nfa &s);

/// Every state's right language is a union of atoms of L(n).
bool is_atomic(const Nfa &n);

/// The atomaton of L(n), built from the left Nerode congruence.
Nfa atomaton(const Nfa &n);

/// The partial atomaton of n, built from the pre-set congruence.
Nfa partial_atomaton(const Nfa &n);

/// Five conditions that each characterize "determinizing n yields the
/// minimal DFA", evaluated by independent procedures.
struct CorollaryReport {
  /// Subset construction is isomorphic to the minimal DFA.
  bool determinization_minimal = false;
  /// Post-set congruence equals the right Nerode congruence.
  bool congruences_equal = false;
  /// Distinct reachable subsets have distinct right languages.
  bool subsets_separated = false;
  /// Every left language of n is a union of right Nerode classes.
  bool left_languages_closed = false;
  /// reverse(n) is atomic.
  bool reverse_atomic = false;

  std::array<bool, 5> values() const {
    return {determinization_minimal, congruences_equal, subsets_separated,
            left_languages_closed, reverse_atomic};
  }
  bool agree() const;
};

CorollaryReport corollary_equivalences(const Nfa &n);

/// One line per atom: "atom k: pos={q...} sample=<word>".
std::string format_atoms(const AtomSet &atoms);

} // namespace nerode
