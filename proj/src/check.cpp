#include "check.hpp"

#include <algorithm>

namespace gnfakit {

namespace {

// Shortest-then-lexicographic order matches std::set<Word> only per length,
// so pick explicitly.
Word shortest_difference(const std::set<Word>& a, const std::set<Word>& b) {
  std::vector<Word> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  auto it = std::min_element(diff.begin(), diff.end(),
                             [](const Word& x, const Word& y) {
                               if (x.size() != y.size()) return x.size() < y.size();
                               return x < y;
                             });
  return it == diff.end() ? Word{} : *it;
}

CheckReport disagreement(const std::set<Word>& a, const std::set<Word>& b,
                         const std::string& detail) {
  CheckReport report;
  report.equivalent = false;
  report.counterexample = shortest_difference(a, b);
  report.detail = detail;
  return report;
}

}  // namespace

CheckReport check_machine(const Nfa& m, std::size_t maxlen) {
  std::set<Word> direct = enumerate_nfa_language(m, maxlen);

  N2rResult ripped = ndfa_to_regexp(m);
  std::set<Word> via_ripping =
      enumerate_regexp_language(simplify(ripped.regexp), maxlen, m.sigma);
  if (via_ripping != direct) {
    return disagreement(direct, via_ripping,
                        "state ripping disagrees with the machine");
  }

  std::set<Word> via_equations =
      enumerate_regexp_language(r_equations(m), maxlen, m.sigma);
  if (via_equations != direct) {
    return disagreement(direct, via_equations,
                        "recursive equations disagree with the machine");
  }
  return CheckReport{};
}

CheckReport check_regexp(const Regexp& r, std::string_view sigma, std::size_t maxlen) {
  std::set<Word> direct = enumerate_regexp_language(r, maxlen, sigma);

  R2nResult expanded = regexp_to_ndfa(r);
  std::set<Word> via_nfa = enumerate_nfa_language(expanded.nfa, maxlen);
  if (via_nfa != direct) {
    return disagreement(direct, via_nfa,
                        "the expansion NFA disagrees with the regexp");
  }

  N2rResult back = ndfa_to_regexp(expanded.nfa);
  std::set<Word> round_trip =
      enumerate_regexp_language(simplify(back.regexp), maxlen, sigma);
  if (round_trip != direct) {
    return disagreement(direct, round_trip,
                        "the round-tripped regexp disagrees with the original");
  }
  return CheckReport{};
}

CheckReport check_trace(const Trace& t, std::size_t maxlen) {
  MatchCache cache;
  for (std::size_t i = 0; i + 1 < t.frames.size(); ++i) {
    std::set<Word> before = gnfa_bounded_language(t.frames[i].graph, maxlen, cache);
    std::set<Word> after = gnfa_bounded_language(t.frames[i + 1].graph, maxlen, cache);
    if (before != after) {
      return disagreement(before, after,
                          "frames " + std::to_string(i) + " and " +
                              std::to_string(i + 1) + " disagree");
    }
  }
  return CheckReport{};
}

}  // namespace gnfakit
