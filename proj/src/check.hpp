#pragma once

#include "n2r.hpp"
#include "r2n.hpp"

namespace gnfakit {

struct CheckReport {
  bool equivalent = true;
  Word counterexample;  // shortest disagreement word, set when !equivalent
  std::string detail;   // which routes disagreed
};

// Differential suite for a machine: the machine's bounded language versus the
// ripping result and the recursive-equations result.
CheckReport check_machine(const Nfa& m, std::size_t maxlen);

// Differential suite for a regexp: the regexp's bounded language versus its
// expansion NFA and the regexp recovered by ripping that NFA.
CheckReport check_regexp(const Regexp& r, std::string_view sigma, std::size_t maxlen);

// Per-step preservation: every pair of consecutive frames must accept exactly
// the same words up to maxlen.
CheckReport check_trace(const Trace& t, std::size_t maxlen);

}  // namespace gnfakit
