#include "nfa.hpp"

#include "doctest.h"
#include "errors.hpp"
#include "regexp.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace gnfakit;
using testsupport::branching_machine;

TEST_CASE("validate: accepts the branching machine") {
  Nfa m = branching_machine();
  CHECK(validate_nfa(m) == m);
}

TEST_CASE("validate: machine with zero finals is valid") {
  Nfa m = branching_machine();
  m.finals.clear();
  CHECK_NOTHROW(validate_nfa(m));
}

TEST_CASE("validate: unknown state in a rule") {
  Nfa m = branching_machine();
  m.rules.push_back({"S", 'a', "Q"});
  try {
    validate_nfa(m);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues().size() == 1);
    CHECK(e.issues()[0].find("unknown state 'Q'") != std::string::npos);
  }
}

TEST_CASE("validate: every violation is listed at once") {
  Nfa m;
  m.states = {"S", "S", "A"};
  m.sigma = "aa";
  m.start = "X";
  m.finals = {"Y"};
  m.rules = {{"S", 'z', "A"}, {"Q", 'a', "S"}};
  try {
    validate_nfa(m);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues().size() == 6);
    std::string all = e.what();
    CHECK(all.find("duplicate state 'S'") != std::string::npos);
    CHECK(all.find("duplicate symbol 'a'") != std::string::npos);
    CHECK(all.find("start state 'X'") != std::string::npos);
    CHECK(all.find("final state 'Y'") != std::string::npos);
    CHECK(all.find("unknown symbol 'z'") != std::string::npos);
    CHECK(all.find("unknown state 'Q'") != std::string::npos);
  }
}

TEST_CASE("epsilon_closure: start state of the branching machine") {
  Nfa m = branching_machine();
  std::set<std::string> expected = {"S", "A", "D"};
  CHECK(epsilon_closure(m, {"S"}) == expected);
}

TEST_CASE("epsilon_closure: empty set and no-empty-rule machines") {
  Nfa m = branching_machine();
  CHECK(epsilon_closure(m, {}).empty());
  Nfa plain = m;
  plain.rules = {{"A", 'a', "B"}};
  std::set<std::string> just_b = {"B"};
  CHECK(epsilon_closure(plain, {"B"}) == just_b);
}

TEST_CASE("epsilon_closure: chained empty rules, monotone, idempotent") {
  Nfa m;
  m.states = {"P", "Q", "R"};
  m.sigma = "a";
  m.start = "P";
  m.finals = {"R"};
  m.rules = {{"P", std::nullopt, "Q"}, {"Q", std::nullopt, "R"}};
  std::set<std::string> all = {"P", "Q", "R"};
  CHECK(epsilon_closure(m, {"P"}) == all);

  auto small = epsilon_closure(m, {"Q"});
  for (const auto& s : small) {
    CHECK(epsilon_closure(m, {"P", "Q"}).count(s) == 1);
  }
  CHECK(epsilon_closure(m, small) == small);
}

TEST_CASE("nfa_apply: branching machine verdicts") {
  Nfa m = branching_machine();
  CHECK_FALSE(nfa_apply(m, "bb"));
  CHECK_FALSE(nfa_apply(m, "aab"));
  CHECK(nfa_apply(m, "a"));
  CHECK(nfa_apply(m, "b"));
  CHECK(nfa_apply(m, "abb"));
  CHECK(nfa_apply(m, "ba"));
}

TEST_CASE("nfa_apply: rejects symbols outside the alphabet") {
  CHECK_THROWS_AS(nfa_apply(branching_machine(), "ax"), Error);
}

TEST_CASE("enumerate: branching machine up to length 2") {
  std::set<Word> expected = {"a", "b", "ab", "ba"};
  CHECK(enumerate_nfa_language(branching_machine(), 2) == expected);
}

TEST_CASE("enumerate: degenerate machines") {
  Nfa no_finals = branching_machine();
  no_finals.finals.clear();
  CHECK(enumerate_nfa_language(no_finals, 3).empty());

  Nfa start_final = branching_machine();
  start_final.finals = {"S"};
  std::set<Word> just_empty = {""};
  CHECK(enumerate_nfa_language(start_final, 0) == just_empty);
}

TEST_CASE("enumerate agrees with nfa_apply") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 30; ++i) {
    Nfa m = testsupport::random_nfa(rng);
    auto language = enumerate_nfa_language(m, 3);
    for (const auto& w : testsupport::all_words(m.sigma, 3)) {
      CHECK(nfa_apply(m, w) == (language.count(w) == 1));
    }
  }
}

TEST_CASE("branching machine and regexp agree up to length 5") {
  Regexp r = parse_regexp("ab* U ba*", "ab");
  CHECK(enumerate_nfa_language(branching_machine(), 5) ==
        enumerate_regexp_language(r, 5, "ab"));
}
