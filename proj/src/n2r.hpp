#pragma once

#include "trace.hpp"

namespace gnfakit {

// States to rip, in declaration order. The fresh GNFA endpoints are not
// included: every original state gets ripped.
std::vector<std::string> rip_order(const Nfa& m);

struct N2rResult {
  Regexp regexp;  // raw label of the remaining (start, final) edge
  Trace trace;
};

// Full NFA-to-regexp transformation by state ripping: the constructed GNFA,
// then one frame per ripped state. The result is Null when no edge connects
// the fresh endpoints at the end.
N2rResult ndfa_to_regexp(const Nfa& m);

// Independent route: the recursive equations over numbered states, with the
// start state first. The result is simplified.
Regexp r_equations(const Nfa& m);

// One entry of the recursion: words driving the machine from the i-th to the
// j-th state using only intermediate states numbered <= level. 1-based i, j;
// states ordered with the start moved to the front. Simplified.
Regexp r_equations_entry(const Nfa& m, std::size_t i, std::size_t j,
                         std::size_t level);

}  // namespace gnfakit
