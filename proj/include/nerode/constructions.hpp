#pragma once

// Automata built from finite-index congruences on words.
//
// A right congruence is stored as its class-transition system: the class of
// u·a is a function of the class of u and a. A left congruence is stored as
// a right congruence over reversed words, so the class of u under the left
// congruence is the class of reverse(u) under the stored one.
//
// Four instantiations are provided:
//   f_r  right Nerode congruence of L(n)      -> minimal DFA
//   g_r  post-set congruence of n             -> subset construction
//   f_l  left Nerode congruence of L(n)       -> co-DFA (the atomaton)
//   g_l  pre-set congruence of n              -> co-DFA

#include <cstddef>
#include <vector>

#include "nerode/automata.hpp"

namespace nerode {

using ClassId = std::uint32_t;

struct RightCongruence {
  Alphabet alphabet;
  std::size_t class_count = 0;
  /// step[c * |alphabet| + a] is the class of u·a for any u in class c.
  std::vector<ClassId> step;
  ClassId epsilon_class = 0;
  /// Per-class descriptor: a post-set, a pre-set, or the subset naming a
  /// minimal-DFA state, depending on the congruence.
  std::vector<StateSet> metadata;
  /// Per-class shortest (length-lexicographically least) member word.
  std::vector<Word> representative;

  ClassId next(ClassId c, Symbol a) const {
    return step[static_cast<std::size_t>(c) * alphabet.size() + a];
  }
};

struct LeftCongruence {
  RightCongruence reversed_reading;
};

/// A word paired with its class.
struct ClassifiedWord {
  Word word;
  ClassId class_id;
};

ClassId classify(const RightCongruence &c, const Word &w);
ClassId classify(const LeftCongruence &c, const Word &w);

/// Classes containing a word of L(n). Requires the congruence to represent
/// L(n) precisely, so one member per class decides membership.
std::vector<ClassId> accepting_classes(const RightCongruence &c, const Nfa &n);
std::vector<ClassId> accepting_classes(const LeftCongruence &c, const Nfa &n);

/// One state per class; initial = class of eps; finals = accepting.
Dfa h_r(const RightCongruence &c, const std::vector<ClassId> &accepting);

/// One state per class; initial = accepting; final = class of eps;
/// class(v) is an a-successor of class(a·v). Co-deterministic, co-complete.
Nfa h_l(const LeftCongruence &c, const std::vector<ClassId> &accepting);

/// Classes are the reachable sets post_u(I).
RightCongruence right_congruence_of_nfa(const Nfa &n);

/// Classes are the residuals of L(n), identified with the states of the
/// double-reversal minimal DFA.
RightCongruence right_congruence_of_language(const Nfa &n);

/// Classes are the reachable sets pre_u(F), computed from pre-images in n.
LeftCongruence left_congruence_of_nfa(const Nfa &n);

/// Classes are the right quotients of L(n).
LeftCongruence left_congruence_of_language(const Nfa &n);

Dfa f_r(const Nfa &n);
Dfa g_r(const Nfa &n);
Nfa f_l(const Nfa &n);
Nfa g_l(const Nfa &n);

} // namespace nerode
