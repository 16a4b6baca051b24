#include "nerode/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "nerode/operations.hpp"

namespace nerode {

namespace {

void check_accepting(const RightCongruence &c,
                     const std::vector<ClassId> &accepting) {
  for (ClassId k : accepting)
    if (k >= c.class_count)
      throw InputError("accepting class " + std::to_string(k) +
                       " out of range (" + std::to_string(c.class_count) +
                       " classes)");
}

// Shortest member of each class, by BFS over the class graph.
std::vector<Word> representatives(const RightCongruence &c) {
  std::vector<Word> rep(c.class_count);
  std::vector<char> seen(c.class_count, 0);
  std::deque<ClassId> queue{c.epsilon_class};
  seen[c.epsilon_class] = 1;
  while (!queue.empty()) {
    ClassId k = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < c.alphabet.size(); ++a) {
      ClassId t = c.next(k, a);
      if (!seen[t]) {
        seen[t] = 1;
        rep[t] = rep[k];
        rep[t].push_back(a);
        queue.push_back(t);
      }
    }
  }
  return rep;
}

// The congruence whose classes are the states of a reachable DFA.
RightCongruence congruence_of_dfa(const Dfa &d) {
  RightCongruence c{d.alphabet(), d.state_count(), {}, d.initial(), {}, {}};
  c.step.resize(d.state_count() * d.symbol_count());
  for (State q = 0; q < d.state_count(); ++q)
    for (Symbol a = 0; a < d.symbol_count(); ++a)
      c.step[q * d.symbol_count() + a] = d.next(q, a);
  c.metadata = d.subsets();
  c.representative = representatives(c);
  return c;
}

} // namespace

ClassId classify(const RightCongruence &c, const Word &w) {
  ClassId k = c.epsilon_class;
  for (Symbol a : w) {
    if (a >= c.alphabet.size())
      throw InputError("symbol index " + std::to_string(a) +
                       " outside the alphabet");
    k = c.next(k, a);
  }
  return k;
}

ClassId classify(const LeftCongruence &c, const Word &w) {
  return classify(c.reversed_reading, reversed(w));
}

std::vector<ClassId> accepting_classes(const RightCongruence &c,
                                       const Nfa &n) {
  std::vector<ClassId> out;
  for (ClassId k = 0; k < c.class_count; ++k)
    if (accepts(n, c.representative[k]))
      out.push_back(k);
  return out;
}

std::vector<ClassId> accepting_classes(const LeftCongruence &c,
                                       const Nfa &n) {
  const auto &rc = c.reversed_reading;
  std::vector<ClassId> out;
  for (ClassId k = 0; k < rc.class_count; ++k)
    if (accepts(n, reversed(rc.representative[k])))
      out.push_back(k);
  return out;
}

Dfa h_r(const RightCongruence &c, const std::vector<ClassId> &accepting) {
  check_accepting(c, accepting);
  Dfa d(c.alphabet, c.class_count, c.epsilon_class);
  for (ClassId k = 0; k < c.class_count; ++k)
    for (Symbol a = 0; a < c.alphabet.size(); ++a)
      d.set_next(k, a, c.next(k, a));
  for (ClassId k : accepting)
    d.set_final(k);
  d.set_subsets(c.metadata);
  return d;
}

Nfa h_l(const LeftCongruence &c, const std::vector<ClassId> &accepting) {
  return reverse(h_r(c.reversed_reading, accepting));
}

RightCongruence right_congruence_of_nfa(const Nfa &n) {
  return congruence_of_dfa(determinize(n));
}

RightCongruence right_congruence_of_language(const Nfa &n) {
  return congruence_of_dfa(determinize(reverse(determinize(reverse(n)))));
}

LeftCongruence left_congruence_of_nfa(const Nfa &n) {
  // Classes are pre_u(F); reading u backwards, the class of a·u is
  // pre_a(pre_u(F)).
  std::map<StateSet, ClassId> index;
  std::vector<StateSet> sets;
  std::deque<ClassId> queue;
  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.emplace(s, static_cast<ClassId>(sets.size()));
    if (fresh) {
      sets.push_back(std::move(s));
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(n.final_states());
  std::vector<std::vector<ClassId>> step;
  while (!queue.empty()) {
    ClassId k = queue.front();
    queue.pop_front();
    if (step.size() <= k)
      step.resize(k + 1);
    step[k].resize(n.symbol_count());
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      step[k][a] = intern(n.pre(sets[k], a));
  }
  RightCongruence rc{n.alphabet(), sets.size(), {}, 0, {}, {}};
  rc.step.reserve(sets.size() * n.symbol_count());
  for (const auto &row : step)
    rc.step.insert(rc.step.end(), row.begin(), row.end());
  rc.metadata = std::move(sets);
  rc.representative = representatives(rc);
  return LeftCongruence{std::move(rc)};
}

LeftCongruence left_congruence_of_language(const Nfa &n) {
  return LeftCongruence{right_congruence_of_language(reverse(n))};
}

Dfa f_r(const Nfa &n) {
  auto c = right_congruence_of_language(n);
  return h_r(c, accepting_classes(c, n));
}

Dfa g_r(const Nfa &n) {
  auto c = right_congruence_of_nfa(n);
  return h_r(c, accepting_classes(c, n));
}

Nfa f_l(const Nfa &n) {
  auto c = left_congruence_of_language(n);
  return h_l(c, accepting_classes(c, n));
}

Nfa g_l(const Nfa &n) {
  auto c = left_congruence_of_nfa(n);
  return h_l(c, accepting_classes(c, n));
}

} // namespace nerode
