#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regexp.hpp"

namespace gnfakit {

// One transition rule. A rule with no symbol reads nothing (the empty-word
// transition, "eps" on the wire).
struct NfaRule {
  std::string from;
  std::optional<char> symbol;
  std::string to;

  bool operator==(const NfaRule&) const = default;
};

struct Nfa {
  std::vector<std::string> states;
  std::string sigma;  // ordered, unique symbols
  std::string start;
  std::vector<std::string> finals;
  std::vector<NfaRule> rules;  // declaration order is significant downstream

  bool operator==(const Nfa&) const = default;
};

// Returns the machine unchanged when every invariant holds; otherwise throws
// ValidationError listing every violation (duplicate states or symbols,
// unknown start/final/rule states, unknown rule symbols).
Nfa validate_nfa(const Nfa& raw);

// Smallest superset of the given states closed under empty-word rules.
std::set<std::string> epsilon_closure(const Nfa& m, const std::set<std::string>& states);

// Frontier simulation: closure, step on each symbol, closure. True = accept.
// Throws Error(SymbolNotInAlphabet) when w uses a symbol outside m.sigma.
bool nfa_apply(const Nfa& m, const Word& w);

// Exactly { w : |w| <= maxlen and nfa_apply(m, w) } over m.sigma.
std::set<Word> enumerate_nfa_language(const Nfa& m, std::size_t maxlen);

}  // namespace gnfakit
