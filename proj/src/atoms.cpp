#include "nerode/atoms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nerode/constructions.hpp"
#include "nerode/operations.hpp"

namespace nerode {

std::vector<Dfa> quotient_languages(const Dfa &minimal) {
  std::vector<Dfa> out;
  out.reserve(minimal.state_count());
  for (State q = 0; q < minimal.state_count(); ++q)
    out.push_back(state_language(minimal, q, Side::Right));
  return out;
}

Dfa signed_intersection(const std::vector<Dfa> &quotients,
                        const StateSet &positive) {
  if (quotients.empty())
    throw InputError("no quotients to intersect");
  auto factor = [&](State i) {
    const bool pos = std::binary_search(positive.begin(), positive.end(), i);
    return pos ? quotients[i] : complement(quotients[i]);
  };
  Dfa acc = factor(0);
  for (State i = 1; i < quotients.size(); ++i)
    acc = product(acc, factor(i), BoolOp::And);
  return acc;
}

AtomSet compute_atoms(const Nfa &n) {
  Dfa minimal = f_r(n);
  const Dfa signatures = determinize(reverse(minimal));
  AtomSet result{{}, minimal};
  for (State s = 0; s < signatures.state_count(); ++s) {
    const StateSet &positive = signatures.subsets()[s];
    // w is in the atom iff reverse(w) reaches s, so the atom is the reverse
    // of the language that ends in s. Determinizing that co-DFA directly
    // avoids a k-fold product chain.
    Dfa ends_in_s = signatures;
    for (State t = 0; t < signatures.state_count(); ++t)
      ends_in_s.set_final(t, t == s);
    Dfa language = determinize(reverse(ends_in_s));
    auto sample = shortest_accepted(language);
    if (!sample)
      throw std::logic_error("atom with quotient signature of size " +
                             std::to_string(positive.size()) + " is empty");
    result.atoms.push_back(Atom{positive, std::move(language), *sample});
  }
  return result;
}

std::size_t atom_of(const AtomSet &atoms, const Word &w) {
  std::size_t found = atoms.atoms.size();
  for (std::size_t i = 0; i < atoms.atoms.size(); ++i)
    if (accepts(atoms.atoms[i].language, w)) {
      if (found != atoms.atoms.size())
        throw std::logic_error("atoms overlap on a word");
      found = i;
    }
  if (found == atoms.atoms.size())
    throw std::logic_error("atoms do not cover a word");
  return found;
}

bool is_union_of_atoms(const AtomSet &atoms, const Nfa &s) {
  if (!(s.alphabet() == atoms.source_minimal_dfa.alphabet()))
    throw InputError("alphabet mismatch");
  const Dfa target = determinize(s);
  for (const auto &atom : atoms.atoms) {
    if (is_empty(product(atom.language, target, BoolOp::And)))
      continue;
    if (!is_empty(product(atom.language, target, BoolOp::Diff)))
      return false;
  }
  return true;
}

bool is_atomic(const Nfa &n) {
  const AtomSet atoms = compute_atoms(n);
  for (State q = 0; q < n.state_count(); ++q)
    if (!is_union_of_atoms(atoms, state_language(n, q, Side::Right)))
      return false;
  return true;
}

Nfa atomaton(const Nfa &n) { return f_l(n); }

Nfa partial_atomaton(const Nfa &n) { return g_l(n); }

bool CorollaryReport::agree() const {
  const auto v = values();
  for (bool b : v)
    if (b != v[0])
      return false;
  return true;
}

namespace {

// Each post-set class lies in one Nerode class (always true); the two
// congruences coincide iff this map is also injective.
bool post_congruence_is_nerode(const Dfa &subsets, const Dfa &minimal) {
  const State unset = static_cast<State>(minimal.state_count());
  std::vector<State> image(subsets.state_count(), unset);
  std::deque<State> queue{subsets.initial()};
  image[subsets.initial()] = minimal.initial();
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < subsets.symbol_count(); ++a) {
      State t = subsets.next(p, a);
      State m = minimal.next(image[p], a);
      if (image[t] == unset) {
        image[t] = m;
        queue.push_back(t);
      } else if (image[t] != m) {
        return false;
      }
    }
  }
  return subsets.state_count() == minimal.state_count();
}

bool right_languages_distinct(const Dfa &d) {
  for (State p = 0; p < d.state_count(); ++p)
    for (State q = p + 1; q < d.state_count(); ++q)
      if (language_equal(state_language(d, p, Side::Right),
                         state_language(d, q, Side::Right)))
        return false;
  return true;
}

bool left_languages_are_class_unions(const Nfa &n, const Dfa &minimal) {
  std::vector<Dfa> classes;
  for (State s = 0; s < minimal.state_count(); ++s)
    classes.push_back(state_language(minimal, s, Side::Left));
  for (State q = 0; q < n.state_count(); ++q) {
    const Dfa left = determinize(state_language(n, q, Side::Left));
    for (const auto &c : classes)
      if (!is_empty(product(c, left, BoolOp::And)) &&
          !is_empty(product(c, left, BoolOp::Diff)))
        return false;
  }
  return true;
}

} // namespace

CorollaryReport corollary_equivalences(const Nfa &n) {
  const Dfa minimal = f_r(n);
  const Dfa subsets = determinize(n);
  CorollaryReport r;
  r.determinization_minimal = dfa_isomorphic(g_r(n), minimal);
  r.congruences_equal = post_congruence_is_nerode(subsets, minimal);
  r.subsets_separated = right_languages_distinct(subsets);
  r.left_languages_closed = left_languages_are_class_unions(n, minimal);
  r.reverse_atomic = is_atomic(reverse(n));
  return r;
}

std::string format_atoms(const AtomSet &atoms) {
  std::ostringstream out;
  const Alphabet &alphabet = atoms.source_minimal_dfa.alphabet();
  for (std::size_t k = 0; k < atoms.atoms.size(); ++k) {
    const auto &atom = atoms.atoms[k];
    out << "atom " << k << ": pos={";
    for (std::size_t i = 0; i < atom.positive_quotients.size(); ++i)
      out << (i ? "," : "") << atom.positive_quotients[i];
    out << "} sample=" << format_word(alphabet, atom.sample) << '\n';
  }
  return out.str();
}

} // namespace nerode
