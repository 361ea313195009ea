#include "regexp.hpp"

#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "support/generators.hpp"

using namespace gnfakit;
using testsupport::all_words;
using testsupport::random_regexp;

namespace {

Regexp branching_regexp() {  // ab* U ba*
  return Regexp::union_of(
      Regexp::concat(Regexp::singleton('a'), Regexp::star(Regexp::singleton('b'))),
      Regexp::concat(Regexp::singleton('b'), Regexp::star(Regexp::singleton('a'))));
}

}  // namespace

TEST_CASE("parse: union of concatenations") {
  Regexp r = parse_regexp("a b* U b a*", "ab");
  CHECK(r == branching_regexp());
}

TEST_CASE("parse: empty-word token") {
  CHECK(parse_regexp("!", "ab").kind() == RegexpKind::Empty);
}

TEST_CASE("parse: null token inside a group") {
  Regexp r = parse_regexp("(m(a U ~))*", "ma");
  Regexp expected = Regexp::star(Regexp::concat(
      Regexp::singleton('m'),
      Regexp::union_of(Regexp::singleton('a'), Regexp::null())));
  CHECK(r == expected);
}

TEST_CASE("parse: pipe works as the union token") {
  CHECK(parse_regexp("a|b", "ab") == parse_regexp("a U b", "ab"));
}

TEST_CASE("parse: stacked stars and associativity") {
  Regexp r = parse_regexp("a**", "a");
  CHECK(r == Regexp::star(Regexp::star(Regexp::singleton('a'))));
  // Left-associative union and concatenation.
  CHECK(parse_regexp("a U b U c", "abc") ==
        Regexp::union_of(Regexp::union_of(Regexp::singleton('a'), Regexp::singleton('b')),
                         Regexp::singleton('c')));
  CHECK(parse_regexp("abc", "abc") ==
        Regexp::concat(Regexp::concat(Regexp::singleton('a'), Regexp::singleton('b')),
                       Regexp::singleton('c')));
}

TEST_CASE("parse: errors carry a position") {
  CHECK_THROWS_AS(parse_regexp("", "ab"), ParseError);
  CHECK_THROWS_AS(parse_regexp("a U", "ab"), ParseError);
  CHECK_THROWS_AS(parse_regexp("(a", "ab"), ParseError);
  CHECK_THROWS_AS(parse_regexp("a)", "ab"), ParseError);
  try {
    parse_regexp("ac", "ab");
    FAIL("expected a symbol error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::SymbolNotInAlphabet);
    CHECK(e.position() == 1);
  }
}

TEST_CASE("parse: rejects a reserved or duplicated alphabet") {
  CHECK_THROWS_AS(parse_regexp("a", "aU"), Error);
  CHECK_THROWS_AS(parse_regexp("a", "aa"), Error);
}

TEST_CASE("render: minimal parentheses") {
  CHECK(render_regexp(branching_regexp()) == "ab* U ba*");
  CHECK(render_regexp(Regexp::empty()) == "!");
  CHECK(render_regexp(Regexp::null()) == "~");
  CHECK(render_regexp(Regexp::star(Regexp::concat(Regexp::singleton('m'),
                                                  Regexp::singleton('a')))) ==
        "(ma)*");
  CHECK(render_regexp(Regexp::concat(
            Regexp::union_of(Regexp::singleton('a'), Regexp::singleton('b')),
            Regexp::singleton('c'))) == "(a U b)c");
}

TEST_CASE("render/parse round-trip on random regexps") {
  std::mt19937 rng(20240831);
  for (int i = 0; i < 400; ++i) {
    Regexp r = random_regexp(rng, 5, "abc");
    CAPTURE(render_regexp(r));
    CHECK(parse_regexp(render_regexp(r), "abc") == r);
  }
}

TEST_CASE("simplify: removes the null branch of the walkthrough regexp") {
  Regexp before = parse_regexp("(m(a U ~))*", "ma");
  CHECK(simplify(before) == parse_regexp("(ma)*", "ma"));
}

TEST_CASE("simplify: already-simple values are untouched") {
  Regexp a = Regexp::singleton('a');
  CHECK(simplify(a) == a);
}

TEST_CASE("simplify: concatenation with a null factor collapses to null") {
  Regexp r = Regexp::concat(Regexp::null(), Regexp::star(Regexp::singleton('b')));
  // Both sides denote the empty language on every word up to length 4.
  for (const auto& w : all_words("b", 4)) {
    CHECK_FALSE(matches(r, w));
  }
  CHECK(enumerate_regexp_language(r, 4, "b").empty());
  CHECK(simplify(r).kind() == RegexpKind::Null);
}

TEST_CASE("simplify: each rewrite rule") {
  Regexp a = Regexp::singleton('a');
  CHECK(simplify(Regexp::union_of(a, Regexp::null())) == a);
  CHECK(simplify(Regexp::union_of(Regexp::null(), a)) == a);
  CHECK(simplify(Regexp::concat(a, Regexp::null())).kind() == RegexpKind::Null);
  CHECK(simplify(Regexp::concat(Regexp::null(), a)).kind() == RegexpKind::Null);
  CHECK(simplify(Regexp::concat(a, Regexp::empty())) == a);
  CHECK(simplify(Regexp::concat(Regexp::empty(), a)) == a);
  CHECK(simplify(Regexp::star(Regexp::null())).kind() == RegexpKind::Empty);
  CHECK(simplify(Regexp::star(Regexp::empty())).kind() == RegexpKind::Empty);
  CHECK(simplify(Regexp::star(Regexp::star(a))) == Regexp::star(a));
}

TEST_CASE("simplify: sound and idempotent on random regexps") {
  std::mt19937 rng(7);
  auto words = all_words("abc", 5);
  for (int i = 0; i < 150; ++i) {
    Regexp r = random_regexp(rng, 5, "abc");
    Regexp s = simplify(r);
    CHECK(simplify(s) == s);
    bool null_free_or_null = s.kind() == RegexpKind::Null || !is_empty_language(s);
    CHECK(null_free_or_null);
    for (const auto& w : words) {
      if (matches(r, w) != matches(s, w)) {
        CAPTURE(render_regexp(r));
        CAPTURE(render_regexp(s));
        CAPTURE(w);
        FAIL("simplification changed the language");
      }
    }
  }
}

TEST_CASE("matches: membership oracle") {
  CHECK(matches(branching_regexp(), "abb"));
  CHECK(matches(Regexp::empty(), ""));
  CHECK_FALSE(matches(Regexp::null(), ""));
  CHECK_FALSE(matches(branching_regexp(), "bb"));
  // Symbols outside the regexp's alphabet never match.
  CHECK_FALSE(matches(branching_regexp(), "xyz"));
}

TEST_CASE("enumerate: basic languages") {
  CHECK(enumerate_regexp_language(Regexp::null(), 3, "ab").empty());
  std::set<Word> a_star = {"", "a", "aa"};
  CHECK(enumerate_regexp_language(Regexp::star(Regexp::singleton('a')), 2, "ab") ==
        a_star);
}

TEST_CASE("enumerate: branching regexp up to length 2") {
  // Checked against matches over all 7 candidate words.
  std::set<Word> expected;
  for (const auto& w : all_words("ab", 2)) {
    if (matches(branching_regexp(), w)) expected.insert(w);
  }
  CHECK(expected == std::set<Word>{"a", "b", "ab", "ba"});
  CHECK(enumerate_regexp_language(branching_regexp(), 2, "ab") == expected);
}

TEST_CASE("enumerate: grows monotonically with the bound") {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    Regexp r = random_regexp(rng, 4, "ab");
    auto smaller = enumerate_regexp_language(r, 3, "ab");
    auto larger = enumerate_regexp_language(r, 4, "ab");
    for (const auto& w : smaller) {
      CHECK(larger.count(w) == 1);
    }
  }
}

TEST_CASE("gen_word: singleton always yields its symbol") {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    CHECK(gen_word(Regexp::singleton('a'), seed, 5) == "a");
  }
}

TEST_CASE("gen_word: generated words are in the language") {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    Word w = gen_word(branching_regexp(), seed, 4);
    CHECK(matches(branching_regexp(), w));
  }
}

TEST_CASE("gen_word: star repetitions stay within the bound") {
  Regexp b_star = Regexp::star(Regexp::singleton('b'));
  std::set<Word> allowed = {"", "b", "bb", "bbb"};
  for (std::uint32_t seed = 0; seed < 60; ++seed) {
    CHECK(allowed.count(gen_word(b_star, seed, 3)) == 1);
  }
}

TEST_CASE("gen_word: deterministic in the seed") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 30; ++i) {
    Regexp r = random_regexp(rng, 4, "abc");
    if (is_empty_language(r)) continue;
    CHECK(gen_word(r, 42, 6) == gen_word(r, 42, 6));
  }
}

TEST_CASE("gen_word: avoids an empty-language union branch") {
  Regexp r = Regexp::union_of(Regexp::concat(Regexp::null(), Regexp::singleton('a')),
                              Regexp::singleton('b'));
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    CHECK(gen_word(r, seed, 3) == "b");
  }
}

TEST_CASE("gen_word: empty language is an error") {
  CHECK_THROWS_AS(gen_word(Regexp::null(), 1, 3), Error);
  CHECK_THROWS_AS(gen_word(parse_regexp("~a", "a"), 1, 3), Error);
}

TEST_CASE("gen_word: soundness on random nonempty regexps") {
  std::mt19937 rng(2024);
  int generated = 0;
  for (int i = 0; i < 120; ++i) {
    Regexp r = random_regexp(rng, 5, "abc");
    if (is_empty_language(r)) continue;
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
      Word w = gen_word(r, seed, 3);
      CAPTURE(render_regexp(r));
      CAPTURE(w);
      CHECK(matches(r, w));
      ++generated;
    }
  }
  CHECK(generated > 100);
}

TEST_CASE("is_empty_language agrees with simplify") {
  std::mt19937 rng(5150);
  for (int i = 0; i < 200; ++i) {
    Regexp r = random_regexp(rng, 5, "ab");
    CHECK(is_empty_language(r) == (simplify(r).kind() == RegexpKind::Null));
  }
}

TEST_CASE("regexp_alphabet: first-occurrence order") {
  CHECK(regexp_alphabet(parse_regexp("(m(a U ~))*", "ma")) == "ma");
  CHECK(regexp_alphabet(Regexp::null()).empty());
  CHECK(regexp_alphabet(parse_regexp("ba U ab", "ab")) == "ba");
}
