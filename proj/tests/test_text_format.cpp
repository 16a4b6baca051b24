#include <doctest.h>

#include <filesystem>

#include "nerode/diagram.hpp"
#include "nerode/text_format.hpp"
#include "oracles.hpp"

using namespace nerode;
using namespace fixtures;

namespace {

const char *kN1 = "alphabet: a b\n"
                  "states: 2\n"
                  "initial: 0\n"
                  "final: 1\n"
                  "trans: 0 a 0\n"
                  "trans: 0 a 1\n"
                  "trans: 1 b 1\n";

std::size_t error_line(const std::string &text) {
  try {
    parse_automaton(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  FAIL("parse succeeded");
  return 0;
}

} // namespace

TEST_CASE("N1 file") {
  CHECK(serialize(n1()) == kN1);
  CHECK(parse_automaton(kN1) == n1());
  std::size_t trans_lines = 0;
  for (std::size_t p = 0; (p = std::string(kN1).find("trans:", p)) !=
                          std::string::npos;
       ++p)
    ++trans_lines;
  CHECK(trans_lines == 3);
}

TEST_CASE("parse") {
  SUBCASE("empty trans section") {
    const Nfa n = parse_automaton("alphabet: a\nstates: 3\ninitial: 0\n"
                                  "final:\n");
    CHECK(n.transition_count() == 0);
    CHECK(n.state_count() == 3);
    CHECK(n.final_states().empty());
  }
  SUBCASE("optional initial and final lines") {
    const Nfa n = parse_automaton("states: 1\nalphabet: a\n");
    CHECK(n.initial().empty());
    CHECK(n.final_states().empty());
  }
  SUBCASE("comments, order, duplicates") {
    const Nfa n = parse_automaton("# header\n"
                                  "trans: 1 b 1   # loop\n"
                                  "final: 1\n"
                                  "trans: 0 a 1\n"
                                  "\n"
                                  "states: 2\n"
                                  "trans: 0 a 0\n"
                                  "alphabet: a b\n"
                                  "trans: 0 a 1\n"
                                  "initial: 0\n");
    CHECK(n == n1());
  }
  SUBCASE("multi-character symbols") {
    const Nfa n = parse_automaton("alphabet: go stop\nstates: 1\n"
                                  "initial: 0\nfinal: 0\ntrans: 0 stop 0\n");
    CHECK(n.successors(0, 1) == StateSet{0});
    CHECK(serialize(n) == "alphabet: go stop\nstates: 1\ninitial: 0\n"
                          "final: 0\ntrans: 0 stop 0\n");
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("alphabet: a\nstates: 1\nbogus: 1\n") == 3);
  CHECK(error_line("alphabet: a\nstates: 2\ntrans: 0 a 2\n") == 3);
  CHECK(error_line("alphabet: a\nstates: 2\n\ntrans: 0 b 1\n") == 4);
  CHECK(error_line("alphabet: a\nstates: 2\ninitial: 5\n") == 3);
  CHECK(error_line("alphabet: a\nalphabet: b\nstates: 1\n") == 2);
  CHECK(error_line("alphabet: a\nstates: two\n") == 2);
  CHECK(error_line("alphabet: a\nstates: 1\ntrans: 0 a\n") == 3);
  CHECK(error_line("alphabet: a a\nstates: 1\n") == 1);
  CHECK(error_line("alphabet: a\nstates: 1\njunk\n") == 3);
  CHECK(error_line("alphabet: a\n") == 0);
  CHECK(error_line("states: 1\n") == 0);
  try {
    parse_automaton("alphabet: a\nstates: 1\ntrans: 0 z 0\n");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()) == "line 3: undeclared symbol 'z'");
  }
}

TEST_CASE("round trip on 100 files") {
  namespace fs = std::filesystem;
  std::size_t count = 0;
  for (int i = 0; i < 100; ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "%03d", i);
    const std::string base = data_path(std::string("roundtrip/") + name);
    REQUIRE(fs::exists(base + ".txt"));
    const std::string text = read_file(base + ".txt");
    const std::string expected = read_file(base + ".expected");
    const Nfa n = parse_automaton(text);
    const std::string canon = serialize(n);
    CHECK_MESSAGE(canon == expected, name);
    CHECK(parse_automaton(canon) == n);
    CHECK(serialize(parse_automaton(canon)) == canon);
    if (i < 40)
      CHECK(canon == text);
    ++count;
  }
  CHECK(count == 100);
}

TEST_CASE("round trip on generated automata") {
  for (const auto &p : standard_corpus(90)) {
    const Nfa n = random_nfa(p);
    CHECK(parse_automaton(serialize(n)) == n);
    const Dfa d = determinize(n);
    CHECK(as_dfa(parse_automaton(serialize(d))).same_structure(d));
  }
}

TEST_CASE("to_dot") {
  SUBCASE("one state, no transitions") {
    const Nfa n(Alphabet({"a"}), 1);
    CHECK(to_dot(n) == "digraph automaton {\n"
                       "  rankdir=LR;\n"
                       "  0 [shape=circle];\n"
                       "}\n");
  }
  SUBCASE("N1") {
    CHECK(to_dot(n1()) == "digraph automaton {\n"
                          "  rankdir=LR;\n"
                          "  __init0 [shape=point];\n"
                          "  0 [shape=circle];\n"
                          "  1 [shape=doublecircle];\n"
                          "  __init0 -> 0;\n"
                          "  0 -> 0 [label=\"a\"];\n"
                          "  0 -> 1 [label=\"a\"];\n"
                          "  1 -> 1 [label=\"b\"];\n"
                          "}\n");
  }
  SUBCASE("merged labels follow alphabet order") {
    Nfa n(Alphabet({"b", "a"}), 2);
    n.add_transition(0, 1, 1);
    n.add_transition(0, 0, 1);
    const std::string dot = to_dot(n);
    CHECK(dot.find("  0 -> 1 [label=\"b,a\"];\n") != std::string::npos);
  }
  SUBCASE("quotes and backslashes are escaped") {
    Nfa n(Alphabet({"q\"", "s\\"}), 1);
    n.add_transition(0, 0, 0);
    n.add_transition(0, 1, 0);
    CHECK(to_dot(n).find("[label=\"q\\\",s\\\\\"]") != std::string::npos);
  }
  SUBCASE("byte-stable") {
    for (const auto &p : standard_corpus(30)) {
      const Nfa n = random_nfa(p);
      CHECK(to_dot(n) == to_dot(parse_automaton(serialize(n))));
    }
  }
}
