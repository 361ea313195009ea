#pragma once

#include "nfa.hpp"

namespace gnfakit::testsupport {

// Machine for L = ab* U ba*: states S A B D E, start S, finals B and E,
// empty transitions from S into each branch.
inline Nfa branching_machine() {
  Nfa m;
  m.states = {"S", "A", "B", "D", "E"};
  m.sigma = "ab";
  m.start = "S";
  m.finals = {"B", "E"};
  m.rules = {
      {"S", std::nullopt, "A"}, {"S", std::nullopt, "D"},
      {"A", 'a', "B"},          {"B", 'b', "B"},
      {"D", 'b', "E"},          {"E", 'a', "E"},
  };
  return m;
}

// Machine for L = aa* with a useless state F reachable only by an empty
// transition from the start.
inline Nfa useless_state_machine() {
  Nfa m;
  m.states = {"S", "A", "B", "F"};
  m.sigma = "a";
  m.start = "S";
  m.finals = {"B"};
  m.rules = {
      {"S", std::nullopt, "F"},
      {"S", 'a', "A"},
      {"A", 'a', "A"},
      {"A", std::nullopt, "B"},
  };
  return m;
}

// Machine for L = { w : w is missing at least one of {a, b, c} }.
inline Nfa missing_symbol_machine() {
  Nfa m;
  m.states = {"S", "P", "Q", "R"};
  m.sigma = "abc";
  m.start = "S";
  m.finals = {"P", "Q", "R"};
  m.rules = {
      {"S", std::nullopt, "P"}, {"S", std::nullopt, "Q"}, {"S", std::nullopt, "R"},
      {"P", 'b', "P"},          {"P", 'c', "P"},
      {"Q", 'a', "Q"},          {"Q", 'c', "Q"},
      {"R", 'a', "R"},          {"R", 'b', "R"},
  };
  return m;
}

}  // namespace gnfakit::testsupport
