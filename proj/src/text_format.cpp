#include "nerode/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace nerode {

ParseError::ParseError(std::size_t line, const std::string &message)
    : InputError(line ? "line " + std::to_string(line) + ": " + message
                      : message),
      line_(line) {}

namespace {

struct RawLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;)
    out.push_back(std::move(t));
  return out;
}

std::size_t parse_count(const std::string &token, std::size_t line) {
  std::size_t value = 0;
  const char *end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, "expected a natural number, got '" + token + "'");
  return value;
}

State parse_state(const std::string &token, std::size_t states,
                  std::size_t line) {
  std::size_t q = parse_count(token, line);
  if (q >= states)
    throw ParseError(line, "state " + token + " out of range (" +
                               std::to_string(states) + " states)");
  return static_cast<State>(q);
}

std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

Nfa parse_automaton(std::string_view text) {
  std::map<std::string, RawLine> headers;
  std::vector<RawLine> transitions;

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto colon = line.find(':');
    if (split(line).empty())
      continue;
    if (colon == std::string_view::npos)
      throw ParseError(number, "expected '<directive>: ...'");
    auto key = split(line.substr(0, colon));
    if (key.size() != 1)
      throw ParseError(number, "malformed directive");
    RawLine raw{number, split(line.substr(colon + 1))};
    const std::string &name = key.front();
    if (name == "trans") {
      if (raw.tokens.size() != 3)
        throw ParseError(number, "expected 'trans: <q> <symbol> <q'>'");
      transitions.push_back(std::move(raw));
    } else if (name == "alphabet" || name == "states" || name == "initial" ||
               name == "final") {
      if (!headers.emplace(name, std::move(raw)).second)
        throw ParseError(number, "duplicate '" + name + ":' line");
    } else {
      throw ParseError(number, "unknown directive '" + name + "'");
    }
  }

  for (const char *required : {"alphabet", "states"})
    if (!headers.count(required))
      throw ParseError(0, std::string("missing '") + required + ":' line");

  const RawLine &alpha_line = headers.at("alphabet");
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(alpha_line.tokens);
  } catch (const InputError &e) {
    throw ParseError(alpha_line.number, e.what());
  }

  const RawLine &states_line = headers.at("states");
  if (states_line.tokens.size() != 1)
    throw ParseError(states_line.number, "expected 'states: <count>'");
  const std::size_t states = parse_count(states_line.tokens[0],
                                         states_line.number);

  Nfa n(*alphabet, states);
  for (const char *name : {"initial", "final"}) {
    auto it = headers.find(name);
    if (it == headers.end())
      continue;
    for (const auto &t : it->second.tokens) {
      State q = parse_state(t, states, it->second.number);
      if (std::string_view(name) == "initial")
        n.add_initial(q);
      else
        n.add_final(q);
    }
  }
  for (const auto &raw : transitions) {
    State from = parse_state(raw.tokens[0], states, raw.number);
    if (!alphabet->contains(raw.tokens[1]))
      throw ParseError(raw.number,
                       "undeclared symbol '" + raw.tokens[1] + "'");
    Symbol a = alphabet->index(raw.tokens[1]);
    State to = parse_state(raw.tokens[2], states, raw.number);
    n.add_transition(from, a, to);
  }
  return n;
}

std::string serialize(const Nfa &n) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto &s : n.alphabet().names())
    out << ' ' << s;
  out << "\nstates: " << n.state_count() << "\ninitial:";
  for (State q : n.initial())
    out << ' ' << q;
  out << "\nfinal:";
  for (State q : n.final_states())
    out << ' ' << q;
  out << '\n';
  for (State q = 0; q < n.state_count(); ++q)
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      for (State t : n.successors(q, a))
        out << "trans: " << q << ' ' << n.alphabet().name(a) << ' ' << t
            << '\n';
  return out.str();
}

std::string serialize(const Dfa &d) { return serialize(d.to_nfa()); }

std::string to_dot(const Nfa &n) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  for (State q : n.initial())
    out << "  __init" << q << " [shape=point];\n";
  for (State q = 0; q < n.state_count(); ++q)
    out << "  " << q << " [shape="
        << (n.is_final(q) ? "doublecircle" : "circle") << "];\n";
  for (State q : n.initial())
    out << "  __init" << q << " -> " << q << ";\n";
  for (State q = 0; q < n.state_count(); ++q) {
    std::map<State, std::string> labels;
    for (Symbol a = 0; a < n.symbol_count(); ++a)
      for (State t : n.successors(q, a)) {
        auto &label = labels[t];
        if (!label.empty())
          label += ',';
        label += dot_escape(n.alphabet().name(a));
      }
    for (const auto &[t, label] : labels)
      out << "  " << q << " -> " << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace nerode
