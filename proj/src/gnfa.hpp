#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nfa.hpp"
#include "regexp.hpp"

namespace gnfakit {

struct GnfaEdge {
  std::string from;
  Regexp label;
  std::string to;
};

// Generalized NFA: at most one regexp-labeled edge per ordered state pair,
// no null-labeled edges, an isolated start (no incoming edges) and an
// isolated final (no outgoing edges), start != final.
struct Gnfa {
  std::vector<std::string> states;
  std::string sigma;
  std::string start;
  std::string final;
  std::vector<GnfaEdge> edges;
};

// Shortest unused name: single letters A..Z in order, then A0, A1, ...
std::string fresh_state_name(const std::set<std::string>& used);

// Two states S and F with the single edge (S, r, F); a null label is
// suppressed, leaving an edge-less graph.
Gnfa gnfa_from_regexp(const Regexp& r);

// Fresh start and final states wired with empty transitions; NFA rules become
// singleton/empty labels, parallel rules merged left-to-right into unions.
Gnfa gnfa_from_nfa(const Nfa& m);

// Removes q, reconnecting every predecessor to every successor with
// concatenation labels (starred self-loop in the middle when present) and
// consolidating into existing edges by union. Throws on start/final/unknown q.
Gnfa rip_state(const Gnfa& g, const std::string& q);

// True iff some start-to-final path matches a split of w into consecutive
// segments. Memoized over (state, position) pairs.
bool gnfa_accepts(const Gnfa& g, const Word& w);
bool gnfa_accepts(const Gnfa& g, const Word& w, MatchCache& cache);

// Requires every label to be Singleton or Empty; otherwise throws
// Error(NonAtomicLabel) naming the offending edge.
Nfa gnfa_to_nfa(const Gnfa& g);

// Throws Error(Validation) listing every violated structural invariant.
void validate_gnfa(const Gnfa& g);

// The label on (from, to), or nullptr when absent.
const Regexp* find_edge_label(const Gnfa& g, const std::string& from,
                              const std::string& to);

// Appends (from, label, to), unioning into an existing parallel edge
// (existing label first) and suppressing null labels.
void add_edge(Gnfa& g, const std::string& from, Regexp label, const std::string& to);

// { w : |w| <= maxlen and gnfa_accepts(g, w) } over g.sigma.
std::set<Word> gnfa_bounded_language(const Gnfa& g, std::size_t maxlen,
                                     MatchCache& cache);

}  // namespace gnfakit
