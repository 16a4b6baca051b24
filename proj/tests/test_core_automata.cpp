#include <doctest.h>

#include "nerode/diagram.hpp"
#include "oracles.hpp"

using namespace nerode;
using namespace fixtures;

namespace {

std::vector<Word> words(const Nfa &n, std::initializer_list<const char *> ts) {
  std::vector<Word> out;
  for (const char *t : ts)
    out.push_back(w(n, t));
  return out;
}

std::vector<Nfa> small_corpus(std::size_t count, std::uint64_t base = 1) {
  std::vector<Nfa> out;
  for (const auto &p : standard_corpus(count, base))
    out.push_back(random_nfa(p));
  return out;
}

} // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({}), InputError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
  CHECK_THROWS_AS(Alphabet({"a b"}), InputError);
  CHECK_THROWS_AS(Alphabet({"eps"}), InputError);
  CHECK_THROWS_AS(Alphabet({"a#"}), InputError);
  const Alphabet ab({"x", "y"});
  CHECK(ab.index("y") == 1);
  CHECK(ab.contains("x"));
  CHECK_FALSE(ab.contains("z"));
}

TEST_CASE("word formatting") {
  const Alphabet ab({"a", "b"});
  CHECK(format_word(ab, {}) == "eps");
  CHECK(format_word(ab, {0, 1, 1}) == "abb");
  CHECK(parse_word(ab, "abb") == Word{0, 1, 1});
  CHECK(parse_word(ab, "eps").empty());
  const Alphabet multi({"go", "stop"});
  CHECK(format_word(multi, {1, 0}) == "stop go");
  CHECK(parse_word(multi, "stop go") == Word{1, 0});
  CHECK_THROWS_AS(parse_word(ab, "abc"), InputError);
  CHECK(reversed(reversed(Word{0, 1, 1})) == Word{0, 1, 1});
}

TEST_CASE("reverse") {
  SUBCASE("single-state universal automaton is its own reverse") {
    const Nfa n = sigma_star(1).to_nfa();
    CHECK(reverse(n) == n);
  }
  SUBCASE("N1 reversed accepts b*a+") {
    const Nfa n = n1();
    const Nfa r = reverse(n);
    CHECK(enumerate_accepted(r, 6) == reversed_sorted(naive_language(n, 6)));
    CHECK(enumerate_accepted(r, 2) == words(n, {"a", "aa", "ba"}));
  }
  SUBCASE("empty final set gives empty initial set") {
    Nfa n = n1();
    n.set_final({});
    const Nfa r = reverse(n);
    CHECK(r.initial().empty());
    CHECK(is_empty(r));
  }
  SUBCASE("involution on the corpus") {
    for (const Nfa &n : small_corpus(60))
      CHECK(reverse(reverse(n)) == n);
  }
}

TEST_CASE("determinize") {
  SUBCASE("N1 has four subset states") {
    const Dfa d = determinize(n1());
    REQUIRE(d.state_count() == 4);
    std::vector<StateSet> subsets = d.subsets();
    std::sort(subsets.begin(), subsets.end());
    CHECK(subsets == std::vector<StateSet>{{}, {0}, {0, 1}, {1}});
    for (State q : d.final_states())
      CHECK(std::binary_search(d.subsets()[q].begin(), d.subsets()[q].end(),
                               State{1}));
    CHECK(d.final_states().size() == 2);
    CHECK(d.subsets()[d.initial()] == StateSet{0});
    CHECK(enumerate_accepted(d, 6) == naive_language(n1(), 6));
  }
  SUBCASE("idempotent on DFAs") {
    const Dfa d = determinize(n1());
    CHECK(dfa_isomorphic(determinize(d), d));
  }
  SUBCASE("empty initial set gives the sink") {
    Nfa n = n1();
    n.set_initial({});
    const Dfa d = determinize(n);
    REQUIRE(d.state_count() == 1);
    CHECK(d.subsets()[0].empty());
    CHECK_FALSE(d.is_final(0));
    CHECK(d.next(0, 0) == 0);
    CHECK(d.next(0, 1) == 0);
  }
  SUBCASE("structure on the corpus") {
    for (const Nfa &n : small_corpus(120)) {
      const Dfa d = determinize(n);
      CHECK(d.all_reachable());
      CHECK(d.subsets()[d.initial()] == n.initial());
      CHECK(as_dfa(d.to_nfa()).same_structure(d));
      CHECK(language_equal(d.to_nfa(), n));
    }
  }
}

TEST_CASE("accepts") {
  const Nfa n = n1();
  for (const Word &x : all_words(2, 4))
    CHECK(accepts(sigma_star(2), x));
  CHECK(accepts(n, w(n, "aab")));
  CHECK_FALSE(accepts(n, w(n, "ba")));
  Nfa no_final = n1();
  no_final.set_final({});
  CHECK_FALSE(accepts(no_final, {}));
  CHECK_THROWS_AS(accepts(n, Word{2}), InputError);
  CHECK_THROWS_AS(accepts(determinize(n), Word{7}), InputError);
}

TEST_CASE("enumerate_accepted") {
  const Nfa n = n1();
  CHECK(enumerate_accepted(n, 2) == words(n, {"a", "aa", "ab"}));
  CHECK(enumerate_accepted(empty_language(2), 5).empty());
  CHECK(enumerate_accepted(sigma_star(1), 2) ==
        std::vector<Word>{{}, {0}, {0, 0}});
  for (const Nfa &m : small_corpus(90))
    CHECK(enumerate_accepted(m, 5) == naive_language(m, 5));
}

TEST_CASE("complement") {
  const Dfa d = determinize(n1());
  CHECK(complement(complement(d)).same_structure(d));
  CHECK(is_empty(complement(sigma_star(2))));
  const Dfa c = complement(d);
  CHECK(accepts(c, {}));
  CHECK(accepts(c, {1}));
  CHECK_FALSE(accepts(c, {0}));
  for (const Word &x : all_words(2, 3))
    CHECK(accepts(c, x) != naive_accepts(n1(), x));
}

TEST_CASE("product") {
  const Dfa d = determinize(n1());
  CHECK(is_empty(product(d, d, BoolOp::Xor)));

  // a*b*
  Dfa star(Alphabet({"a", "b"}), 3, 0);
  star.set_next(0, 0, 0);
  star.set_next(0, 1, 1);
  star.set_next(1, 0, 2);
  star.set_next(1, 1, 1);
  star.set_next(2, 0, 2);
  star.set_next(2, 1, 2);
  star.set_final(0);
  star.set_final(1);
  CHECK(enumerate_accepted(product(d, star, BoolOp::And), 5) ==
        naive_language(n1(), 5));
  CHECK(is_empty(product(d, empty_language(2), BoolOp::And)));
  CHECK_THROWS_AS(product(d, sigma_star(3), BoolOp::And), InputError);

  for (const Word &x : all_words(2, 5)) {
    const bool p = accepts(d, x), q = accepts(star, x);
    CHECK(accepts(product(d, star, BoolOp::Or), x) == (p || q));
    CHECK(accepts(product(d, star, BoolOp::Xor), x) == (p != q));
    CHECK(accepts(product(d, star, BoolOp::Diff), x) == (p && !q));
  }
}

TEST_CASE("is_empty") {
  Nfa no_final = n1();
  no_final.set_final({});
  CHECK(is_empty(no_final));
  CHECK_FALSE(is_empty(n1()));
  Nfa no_initial = n1();
  no_initial.set_initial({});
  CHECK(is_empty(no_initial));
  for (const Nfa &n : small_corpus(90))
    CHECK(is_empty(n) == naive_language(n, n.state_count()).empty());
}

TEST_CASE("shortest_accepted") {
  CHECK(shortest_accepted(n1()) == Word{0});
  CHECK_FALSE(shortest_accepted(empty_language(2)).has_value());
  for (const Nfa &n : small_corpus(60)) {
    const auto lang = naive_language(n, n.state_count());
    const auto s = shortest_accepted(n);
    CHECK(s.has_value() == !lang.empty());
    if (s && !lang.empty())
      CHECK(*s == lang.front());
  }
}

TEST_CASE("language_equal") {
  const Nfa n = n1();
  CHECK(language_equal(n, n));
  CHECK(language_equal(n, reverse(reverse(n))));
  CHECK(language_equal(n, determinize(n).to_nfa()));
  CHECK(enumerate_accepted(determinize(n), 6) == enumerate_accepted(n, 6));
  CHECK_FALSE(language_equal(n, reverse(n)));
  CHECK(distinguishing_word(n, reverse(n)) == Word{0, 1});
  CHECK_THROWS_AS(language_equal(n, sigma_star(3).to_nfa()), InputError);

  // Exact check against bounded enumeration over nearby corpus pairs
  // sharing an alphabet; the product verdict is ground truth.
  const auto corpus = small_corpus(72);
  for (std::size_t i = 0; i < corpus.size(); i += 3) {
    const Nfa &x = corpus[i];
    for (std::size_t j = i; j < std::min(corpus.size(), i + 6); ++j) {
      const Nfa &z = corpus[j];
      if (!(x.alphabet() == z.alphabet()))
        continue;
      const bool exact = language_equal(x, z);
      if (exact)
        CHECK(naive_language(x, 10) == naive_language(z, 10));
      else
        CHECK(distinguishing_word(x, z).has_value());
    }
  }
}

TEST_CASE("dfa_isomorphic") {
  const Dfa d = determinize(n1());
  SUBCASE("renamed states") {
    const std::vector<State> perm = {2, 0, 3, 1};
    Dfa renamed(d.alphabet(), 4, perm[d.initial()]);
    for (State q = 0; q < 4; ++q) {
      renamed.set_final(perm[q], d.is_final(q));
      for (Symbol a = 0; a < 2; ++a)
        renamed.set_next(perm[q], a, perm[d.next(q, a)]);
    }
    CHECK(dfa_isomorphic(d, renamed));
  }
  SUBCASE("a(a|b)* versus (a|b)*a") {
    Dfa first_a(Alphabet({"a", "b"}), 3, 0);
    first_a.set_next(0, 0, 1);
    first_a.set_next(0, 1, 2);
    for (Symbol a = 0; a < 2; ++a) {
      first_a.set_next(1, a, 1);
      first_a.set_next(2, a, 2);
    }
    first_a.set_final(1);
    Dfa last_a(Alphabet({"a", "b"}), 2, 0);
    last_a.set_next(0, 0, 1);
    last_a.set_next(0, 1, 0);
    last_a.set_next(1, 0, 1);
    last_a.set_next(1, 1, 0);
    last_a.set_final(1);
    CHECK_FALSE(dfa_isomorphic(first_a, last_a));
  }
  SUBCASE("determinization is idempotent up to isomorphism") {
    CHECK(dfa_isomorphic(d, determinize(d)));
  }
  SUBCASE("unreachable states are rejected") {
    Dfa u(Alphabet({"a"}), 2, 0);
    CHECK_THROWS_AS(dfa_isomorphic(u, u), InputError);
  }
  SUBCASE("isomorphism implies language equality on the corpus") {
    for (const Nfa &n : small_corpus(60)) {
      const Dfa x = determinize(n);
      CHECK(dfa_isomorphic(x, x));
      CHECK(dfa_isomorphic(canonical_form(x), x));
    }
  }
}

TEST_CASE("codfa_isomorphic") {
  const Nfa co = reverse(determinize(n1()));
  CHECK(codfa_isomorphic(co, co));
  CHECK(is_codeterministic(co));

  // Co-DFAs for {a} and {b}: reverses of the minimal DFAs.
  auto single = [](Symbol s) {
    Dfa d(Alphabet({"a", "b"}), 3, 0);
    d.set_next(0, s, 1);
    d.set_next(0, 1 - s, 2);
    for (Symbol a = 0; a < 2; ++a) {
      d.set_next(1, a, 2);
      d.set_next(2, a, 2);
    }
    d.set_final(1);
    return reverse(d);
  };
  CHECK_FALSE(codfa_isomorphic(single(0), single(1)));

  SUBCASE("precondition messages") {
    try {
      codfa_isomorphic(duplicated_states(), co);
      FAIL("expected an input error");
    } catch (const InputError &e) {
      CHECK(std::string(e.what()).find("not co-deterministic") !=
            std::string::npos);
    }
    try {
      codfa_isomorphic(n1(), n1());
      FAIL("expected an input error");
    } catch (const InputError &e) {
      CHECK(std::string(e.what()).find("not co-complete") !=
            std::string::npos);
    }
  }
}

TEST_CASE("state_language") {
  const Nfa n = n1();
  for (State q : n.final_states())
    CHECK(accepts(state_language(n, q, Side::Right), {}));
  const Nfa right1 = state_language(n, 1, Side::Right);
  CHECK(enumerate_accepted(right1, 4) == words(n, {"eps", "b", "bb", "bbb",
                                                   "bbbb"}));
  const Nfa left0 = state_language(n, 0, Side::Left);
  CHECK(enumerate_accepted(left0, 4) == words(n, {"eps", "a", "aa", "aaa",
                                                  "aaaa"}));
  CHECK_THROWS_AS(state_language(n, 2, Side::Right), InputError);
  CHECK_THROWS_AS(state_language(determinize(n), 9, Side::Left), InputError);
}

TEST_CASE("as_dfa") {
  CHECK_THROWS_WITH_AS(as_dfa(n1()), doctest::Contains("not deterministic"),
                       InputError);
  Nfa partial(Alphabet({"a"}), 1);
  partial.add_initial(0);
  CHECK_THROWS_WITH_AS(as_dfa(partial), doctest::Contains("not complete"),
                       InputError);
  const Dfa d = determinize(n1());
  CHECK(as_dfa(d.to_nfa()).same_structure(d));
}
