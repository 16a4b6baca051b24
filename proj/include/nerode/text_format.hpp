#pragma once

// Plain-text automaton files and Graphviz export.
//
//   # comment
//   alphabet: a b
//   states: 2
//   initial: 0
//   final: 1
//   trans: 0 a 0
//   trans: 0 a 1
//   trans: 1 b 1
//
// Header lines may appear in any order; trans lines may appear anywhere and
// may repeat. Serialization is canonical: headers in the order above, then
// trans lines sorted by (source, symbol order, target).

#include <string>
#include <string_view>

#include "nerode/automata.hpp"

namespace nerode {

/// Parse failure carrying the 1-based line number (0 when the problem is
/// a missing header rather than a specific line).
class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string &message);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

Nfa parse_automaton(std::string_view text);
std::string serialize(const Nfa &n);
std::string serialize(const Dfa &d);

/// Graphviz digraph: double circles for final states, an entry arrow per
/// initial state, one edge per (source, target) pair labeled with its
/// symbols comma-joined in alphabet order.
std::string to_dot(const Nfa &n);

} // namespace nerode
