#include "nerode/operations.hpp"

#include <deque>
#include <map>
#include <utility>

namespace nerode {

namespace {

void require_same_alphabet(const Alphabet &a, const Alphabet &b) {
  if (!(a == b))
    throw InputError("alphabet mismatch");
}

bool intersects(const StateSet &a, const StateSet &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j)
      return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool combine(BoolOp op, bool x, bool y) {
  switch (op) {
  case BoolOp::And:
    return x && y;
  case BoolOp::Or:
    return x || y;
  case BoolOp::Xor:
    return x != y;
  case BoolOp::Diff:
    return x && !y;
  }
  return false;
}

// Length-lexicographic enumeration: for each length, a depth-first walk
// over symbols in order visits words of that length in lexicographic order.
template <class Config, class Step, class Accepting>
std::vector<Word> enumerate_by_length(const Config &start, std::size_t symbols,
                                      std::size_t max_len, Step step,
                                      Accepting accepting) {
  std::vector<Word> out;
  Word w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto visit = [&](auto &self, const Config &c) -> void {
      if (w.size() == len) {
        if (accepting(c))
          out.push_back(w);
        return;
      }
      for (Symbol a = 0; a < symbols; ++a) {
        w.push_back(a);
        self(self, step(c, a));
        w.pop_back();
      }
    };
    visit(visit, start);
  }
  return out;
}

} // namespace

Nfa reverse(const Nfa &n) {
  Nfa r(n.alphabet(), n.state_count());
  for (State q = 0; q < n.state_count(); ++q)
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      for (State t : n.successors(q, a))
        r.add_transition(t, a, q);
  r.set_initial(n.final_states());
  r.set_final(n.initial());
  return r;
}

Nfa reverse(const Dfa &d) { return reverse(d.to_nfa()); }

Dfa determinize(const Nfa &n) {
  std::map<StateSet, State> index;
  std::vector<StateSet> subsets;
  std::vector<std::vector<State>> edges;
  std::deque<State> queue;

  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.emplace(s, static_cast<State>(subsets.size()));
    if (fresh) {
      subsets.push_back(std::move(s));
      edges.emplace_back(n.symbol_count(), 0);
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(n.initial());
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < n.symbol_count(); ++a) {
      StateSet target = n.post(subsets[q], a);
      State t = intern(std::move(target));
      edges[q][a] = t;
    }
  }

  Dfa d(n.alphabet(), subsets.size(), 0);
  for (State q = 0; q < subsets.size(); ++q) {
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      d.set_next(q, a, edges[q][a]);
    d.set_final(q, intersects(subsets[q], n.final_states()));
  }
  d.set_subsets(std::move(subsets));
  return d;
}

Dfa determinize(const Dfa &d) { return determinize(d.to_nfa()); }

bool accepts(const Nfa &n, const Word &w) {
  StateSet current = n.initial();
  for (Symbol a : w) {
    if (a >= n.symbol_count())
      throw InputError("symbol index " + std::to_string(a) +
                       " outside the alphabet");
    current = n.post(current, a);
  }
  return intersects(current, n.final_states());
}

bool accepts(const Dfa &d, const Word &w) {
  return d.is_final(d.run(d.initial(), w));
}

std::vector<Word> enumerate_accepted(const Nfa &n, std::size_t max_len) {
  return enumerate_by_length(
      n.initial(), n.symbol_count(), max_len,
      [&](const StateSet &s, Symbol a) { return n.post(s, a); },
      [&](const StateSet &s) { return intersects(s, n.final_states()); });
}

std::vector<Word> enumerate_accepted(const Dfa &d, std::size_t max_len) {
  return enumerate_by_length(
      d.initial(), d.symbol_count(), max_len,
      [&](State q, Symbol a) { return d.next(q, a); },
      [&](State q) { return d.is_final(q); });
}

Dfa complement(const Dfa &d) {
  Dfa c = d;
  for (State q = 0; q < d.state_count(); ++q)
    c.set_final(q, !d.is_final(q));
  return c;
}

Dfa product(const Dfa &d1, const Dfa &d2, BoolOp op) {
  require_same_alphabet(d1.alphabet(), d2.alphabet());
  using Pair = std::pair<State, State>;
  std::map<Pair, State> index;
  std::vector<Pair> pairs;
  std::deque<State> queue;
  auto intern = [&](Pair p) {
    auto [it, fresh] = index.emplace(p, static_cast<State>(pairs.size()));
    if (fresh) {
      pairs.push_back(p);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern({d1.initial(), d2.initial()});
  std::vector<std::vector<State>> edges;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (edges.size() <= q)
      edges.resize(q + 1);
    edges[q].resize(d1.symbol_count());
    for (Symbol a = 0; a < d1.symbol_count(); ++a) {
      auto [p1, p2] = pairs[q];
      edges[q][a] = intern({d1.next(p1, a), d2.next(p2, a)});
    }
  }
  Dfa out(d1.alphabet(), pairs.size(), 0);
  for (State q = 0; q < pairs.size(); ++q) {
    for (Symbol a = 0; a < d1.symbol_count(); ++a)
      out.set_next(q, a, edges[q][a]);
    out.set_final(q, combine(op, d1.is_final(pairs[q].first),
                             d2.is_final(pairs[q].second)));
  }
  return out;
}

bool is_empty(const Nfa &n) {
  std::vector<char> seen(n.state_count(), 0);
  std::vector<State> stack(n.initial().begin(), n.initial().end());
  for (State q : stack)
    seen[q] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    if (n.is_final(q))
      return false;
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      for (State t : n.successors(q, a))
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
  }
  return true;
}

bool is_empty(const Dfa &d) { return !shortest_accepted(d).has_value(); }

std::optional<Word> shortest_accepted(const Dfa &d) {
  const std::size_t none = d.state_count();
  std::vector<std::size_t> parent(d.state_count(), none);
  std::vector<Symbol> via(d.state_count(), 0);
  std::vector<char> seen(d.state_count(), 0);
  std::deque<State> queue{d.initial()};
  seen[d.initial()] = 1;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (d.is_final(q)) {
      Word w;
      for (State s = q; parent[s] != none; s = static_cast<State>(parent[s]))
        w.push_back(via[s]);
      return reversed(std::move(w));
    }
    for (Symbol a = 0; a < d.symbol_count(); ++a) {
      State t = d.next(q, a);
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = q;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::optional<Word> shortest_accepted(const Nfa &n) {
  return shortest_accepted(determinize(n));
}

bool language_equal(const Dfa &d1, const Dfa &d2) {
  return is_empty(product(d1, d2, BoolOp::Xor));
}

bool language_equal(const Nfa &n1, const Nfa &n2) {
  require_same_alphabet(n1.alphabet(), n2.alphabet());
  return language_equal(determinize(n1), determinize(n2));
}

std::optional<Word> distinguishing_word(const Nfa &n1, const Nfa &n2) {
  require_same_alphabet(n1.alphabet(), n2.alphabet());
  return shortest_accepted(
      product(determinize(n1), determinize(n2), BoolOp::Xor));
}

Dfa canonical_form(const Dfa &d) {
  const State unseen = static_cast<State>(d.state_count());
  std::vector<State> number(d.state_count(), unseen);
  std::vector<State> order{d.initial()};
  number[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol a = 0; a < d.symbol_count(); ++a) {
      State t = d.next(order[i], a);
      if (number[t] == unseen) {
        number[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  if (order.size() != d.state_count())
    throw InputError("DFA has " + std::to_string(d.state_count() - order.size()) +
                     " unreachable state(s); canonical form is undefined");
  Dfa c(d.alphabet(), d.state_count(), 0);
  for (State i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < d.symbol_count(); ++a)
      c.set_next(i, a, number[d.next(order[i], a)]);
    c.set_final(i, d.is_final(order[i]));
  }
  return c;
}

bool dfa_isomorphic(const Dfa &d1, const Dfa &d2) {
  Dfa c1 = canonical_form(d1);
  Dfa c2 = canonical_form(d2);
  return c1.same_structure(c2);
}

namespace {

Dfa reverse_as_dfa(const Nfa &n, const char *which) {
  Nfa r = reverse(n);
  if (r.initial().size() != 1)
    throw InputError(std::string(which) + " automaton is not co-deterministic: " +
                     std::to_string(n.final_states().size()) + " final states");
  for (State q = 0; q < r.state_count(); ++q)
    for (Symbol a = 0; a < r.symbol_count(); ++a)
      if (r.successors(q, a).size() > 1)
        throw InputError(std::string(which) +
                         " automaton is not co-deterministic: state " +
                         std::to_string(q) + " has several predecessors on '" +
                         r.alphabet().name(a) + "'");
  for (State q = 0; q < r.state_count(); ++q)
    for (Symbol a = 0; a < r.symbol_count(); ++a)
      if (r.successors(q, a).empty())
        throw InputError(std::string(which) +
                         " automaton is not co-complete: state " +
                         std::to_string(q) + " has no predecessor on '" +
                         r.alphabet().name(a) + "'");
  return as_dfa(r);
}

} // namespace

bool codfa_isomorphic(const Nfa &n1, const Nfa &n2) {
  Dfa r1 = reverse_as_dfa(n1, "first");
  Dfa r2 = reverse_as_dfa(n2, "second");
  return dfa_isomorphic(r1, r2);
}

bool is_codeterministic(const Nfa &n) {
  try {
    reverse_as_dfa(n, "input");
    return true;
  } catch (const InputError &) {
    return false;
  }
}

Nfa state_language(const Nfa &n, State q, Side side) {
  if (q >= n.state_count())
    throw InputError("state " + std::to_string(q) + " out of range");
  Nfa out = n;
  if (side == Side::Right)
    out.set_initial({q});
  else
    out.set_final({q});
  return out;
}

Dfa state_language(const Dfa &d, State q, Side side) {
  if (q >= d.state_count())
    throw InputError("state " + std::to_string(q) + " out of range");
  Dfa out = d;
  if (side == Side::Right) {
    out.set_initial(q);
  } else {
    for (State s = 0; s < d.state_count(); ++s)
      out.set_final(s, s == q);
  }
  return out;
}

} // namespace nerode
