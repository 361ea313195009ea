#pragma once

#include <optional>

#include "trace.hpp"

namespace gnfakit {

// Index of the first edge whose label is a union, concatenation, or Kleene
// star; absent when every label is singleton or empty.
std::optional<std::size_t> select_decomposable_edge(const Gnfa& g);

struct Expansion {
  Gnfa graph;
  std::set<std::string> highlights;  // head and tail of the replaced edge
  std::string message;
};

// Replaces the chosen edge by the closure construction for its label:
// union -> four fresh states on two empty-reachable branches,
// concatenation -> two fresh states joined by an empty transition,
// Kleene star -> two fresh states with the body on a self-loop.
Expansion expand_edge(const Gnfa& g, std::size_t edge_index);

struct R2nResult {
  Nfa nfa;
  Trace trace;
};

// Full regexp-to-NFA transformation: the starting two-state GNFA, one
// simplification frame when it changes the regexp, then one frame per edge
// expansion until all labels are atomic.
R2nResult regexp_to_ndfa(const Regexp& r);

}  // namespace gnfakit
