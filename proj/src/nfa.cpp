#include "nfa.hpp"

#include <algorithm>
#include <deque>

#include "errors.hpp"

namespace gnfakit {

namespace {

bool has_state(const Nfa& m, const std::string& name) {
  return std::find(m.states.begin(), m.states.end(), name) != m.states.end();
}

}  // namespace

Nfa validate_nfa(const Nfa& raw) {
  std::vector<std::string> issues;

  for (std::size_t i = 0; i < raw.states.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.states.size(); ++j) {
      if (raw.states[i] == raw.states[j]) {
        issues.push_back("duplicate state '" + raw.states[i] + "'");
      }
    }
  }
  for (std::size_t i = 0; i < raw.sigma.size(); ++i) {
    if (raw.sigma.find(raw.sigma[i], i + 1) != std::string::npos) {
      issues.push_back(std::string("duplicate symbol '") + raw.sigma[i] + "'");
    }
  }
  if (!has_state(raw, raw.start)) {
    issues.push_back("start state '" + raw.start + "' is not a state");
  }
  for (const auto& f : raw.finals) {
    if (!has_state(raw, f)) {
      issues.push_back("final state '" + f + "' is not a state");
    }
  }
  for (const auto& rule : raw.rules) {
    std::string shown = rule.symbol ? std::string(1, *rule.symbol) : "eps";
    std::string where = "(" + rule.from + " " + shown + " " + rule.to + ")";
    if (!has_state(raw, rule.from)) {
      issues.push_back("unknown state '" + rule.from + "' in rule " + where);
    }
    if (!has_state(raw, rule.to)) {
      issues.push_back("unknown state '" + rule.to + "' in rule " + where);
    }
    if (rule.symbol && raw.sigma.find(*rule.symbol) == std::string::npos) {
      issues.push_back(std::string("unknown symbol '") + *rule.symbol +
                       "' in rule " + where);
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
  return raw;
}

std::set<std::string> epsilon_closure(const Nfa& m, const std::set<std::string>& states) {
  for (const auto& s : states) {
    if (!has_state(m, s)) {
      throw Error(ErrorCode::UnknownState, "unknown state '" + s + "'");
    }
  }
  std::set<std::string> closure = states;
  std::deque<std::string> pending(states.begin(), states.end());
  while (!pending.empty()) {
    std::string q = std::move(pending.front());
    pending.pop_front();
    for (const auto& rule : m.rules) {
      if (!rule.symbol && rule.from == q && closure.insert(rule.to).second) {
        pending.push_back(rule.to);
      }
    }
  }
  return closure;
}

bool nfa_apply(const Nfa& m, const Word& w) {
  for (char c : w) {
    if (m.sigma.find(c) == std::string::npos) {
      throw Error(ErrorCode::SymbolNotInAlphabet,
                  std::string("symbol '") + c + "' is not in the alphabet");
    }
  }
  std::set<std::string> frontier = epsilon_closure(m, {m.start});
  for (char c : w) {
    std::set<std::string> stepped;
    for (const auto& rule : m.rules) {
      if (rule.symbol && *rule.symbol == c && frontier.count(rule.from)) {
        stepped.insert(rule.to);
      }
    }
    frontier = epsilon_closure(m, stepped);
    if (frontier.empty()) break;
  }
  return std::any_of(m.finals.begin(), m.finals.end(),
                     [&](const std::string& f) { return frontier.count(f) > 0; });
}

namespace {

void enumerate_nfa_rec(const Nfa& m, Word& prefix, std::size_t maxlen,
                       std::set<Word>& out) {
  if (nfa_apply(m, prefix)) out.insert(prefix);
  if (prefix.size() == maxlen) return;
  for (char c : m.sigma) {
    prefix.push_back(c);
    enumerate_nfa_rec(m, prefix, maxlen, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> enumerate_nfa_language(const Nfa& m, std::size_t maxlen) {
  std::set<Word> out;
  Word prefix;
  enumerate_nfa_rec(m, prefix, maxlen, out);
  return out;
}

}  // namespace gnfakit
