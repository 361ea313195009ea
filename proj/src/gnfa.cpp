#include "gnfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "errors.hpp"

namespace gnfakit {

std::string fresh_state_name(const std::set<std::string>& used) {
  for (char c = 'A'; c <= 'Z'; ++c) {
    std::string name(1, c);
    if (!used.count(name)) return name;
  }
  for (unsigned n = 0;; ++n) {
    std::string name = "A" + std::to_string(n);
    if (!used.count(name)) return name;
  }
}

const Regexp* find_edge_label(const Gnfa& g, const std::string& from,
                              const std::string& to) {
  for (const auto& e : g.edges) {
    if (e.from == from && e.to == to) return &e.label;
  }
  return nullptr;
}

void add_edge(Gnfa& g, const std::string& from, Regexp label, const std::string& to) {
  if (label.kind() == RegexpKind::Null) return;
  for (auto& e : g.edges) {
    if (e.from == from && e.to == to) {
      e.label = Regexp::union_of(e.label, std::move(label));
      return;
    }
  }
  g.edges.push_back(GnfaEdge{from, std::move(label), to});
}

Gnfa gnfa_from_regexp(const Regexp& r) {
  Gnfa g;
  g.states = {"S", "F"};
  g.sigma = regexp_alphabet(r);
  g.start = "S";
  g.final = "F";
  add_edge(g, "S", r, "F");
  return g;
}

Gnfa gnfa_from_nfa(const Nfa& m) {
  std::set<std::string> used(m.states.begin(), m.states.end());
  std::string new_start = fresh_state_name(used);
  used.insert(new_start);
  std::string new_final = fresh_state_name(used);

  Gnfa g;
  g.states = m.states;
  g.states.push_back(new_start);
  g.states.push_back(new_final);
  g.sigma = m.sigma;
  g.start = new_start;
  g.final = new_final;

  add_edge(g, new_start, Regexp::empty(), m.start);
  for (const auto& f : m.finals) {
    add_edge(g, f, Regexp::empty(), new_final);
  }
  for (const auto& rule : m.rules) {
    Regexp label = rule.symbol ? Regexp::singleton(*rule.symbol) : Regexp::empty();
    add_edge(g, rule.from, std::move(label), rule.to);
  }
  return g;
}

Gnfa rip_state(const Gnfa& g, const std::string& q) {
  if (q == g.start || q == g.final) {
    throw Error(ErrorCode::RipEndpoint,
                "cannot rip the start or final state '" + q + "'");
  }
  if (std::find(g.states.begin(), g.states.end(), q) == g.states.end()) {
    throw Error(ErrorCode::UnknownState, "unknown state '" + q + "'");
  }

  std::vector<const GnfaEdge*> in_edges;
  std::vector<const GnfaEdge*> out_edges;
  std::optional<Regexp> loop;
  for (const auto& e : g.edges) {
    if (e.from == q && e.to == q) {
      loop = e.label;
    } else if (e.to == q) {
      in_edges.push_back(&e);
    } else if (e.from == q) {
      out_edges.push_back(&e);
    }
  }

  Gnfa out;
  out.sigma = g.sigma;
  out.start = g.start;
  out.final = g.final;
  for (const auto& s : g.states) {
    if (s != q) out.states.push_back(s);
  }
  for (const auto& e : g.edges) {
    if (e.from != q && e.to != q) out.edges.push_back(e);
  }

  for (const GnfaEdge* in : in_edges) {
    for (const GnfaEdge* out_edge : out_edges) {
      Regexp label =
          loop ? Regexp::concat(in->label,
                                Regexp::concat(Regexp::star(*loop), out_edge->label))
               : Regexp::concat(in->label, out_edge->label);
      add_edge(out, in->from, std::move(label), out_edge->to);
    }
  }
  return out;
}

namespace {

std::size_t state_index(const Gnfa& g, const std::string& name) {
  auto it = std::find(g.states.begin(), g.states.end(), name);
  return static_cast<std::size_t>(it - g.states.begin());
}

}  // namespace

bool gnfa_accepts(const Gnfa& g, const Word& w, MatchCache& cache) {
  const std::size_t n = w.size();
  const std::size_t start = state_index(g, g.start);
  const std::size_t final = state_index(g, g.final);
  if (start >= g.states.size() || final >= g.states.size()) return false;

  // Per-state outgoing edges, in edge-list order.
  std::vector<std::vector<const GnfaEdge*>> out(g.states.size());
  for (const auto& e : g.edges) {
    out[state_index(g, e.from)].push_back(&e);
  }

  // Forward reachability over (state, position) pairs; each pair is expanded
  // at most once.
  std::vector<std::vector<char>> seen(g.states.size(),
                                      std::vector<char>(n + 1, 0));
  std::deque<std::pair<std::size_t, std::size_t>> pending;
  seen[start][0] = 1;
  pending.emplace_back(start, 0);
  while (!pending.empty()) {
    auto [q, i] = pending.front();
    pending.pop_front();
    if (q == final && i == n) return true;
    for (const GnfaEdge* e : out[q]) {
      std::size_t dest = state_index(g, e->to);
      for (std::size_t j = i; j <= n; ++j) {
        if (seen[dest][j]) continue;
        if (cache.matches(e->label, w.substr(i, j - i))) {
          seen[dest][j] = 1;
          pending.emplace_back(dest, j);
        }
      }
    }
  }
  return false;
}

bool gnfa_accepts(const Gnfa& g, const Word& w) {
  MatchCache cache;
  return gnfa_accepts(g, w, cache);
}

Nfa gnfa_to_nfa(const Gnfa& g) {
  Nfa m;
  m.states = g.states;
  m.sigma = g.sigma;
  m.start = g.start;
  m.finals = {g.final};
  for (const auto& e : g.edges) {
    switch (e.label.kind()) {
      case RegexpKind::Singleton:
        m.rules.push_back(NfaRule{e.from, e.label.symbol(), e.to});
        break;
      case RegexpKind::Empty:
        m.rules.push_back(NfaRule{e.from, std::nullopt, e.to});
        break;
      default:
        throw Error(ErrorCode::NonAtomicLabel,
                    "edge (" + e.from + ", " + render_regexp(e.label) + ", " +
                        e.to + ") is not singleton or empty");
    }
  }
  return validate_nfa(m);
}

void validate_gnfa(const Gnfa& g) {
  std::vector<std::string> issues;
  auto has_state = [&](const std::string& s) {
    return std::find(g.states.begin(), g.states.end(), s) != g.states.end();
  };

  for (std::size_t i = 0; i < g.states.size(); ++i) {
    for (std::size_t j = i + 1; j < g.states.size(); ++j) {
      if (g.states[i] == g.states[j]) {
        issues.push_back("duplicate state '" + g.states[i] + "'");
      }
    }
  }
  if (!has_state(g.start)) issues.push_back("start state '" + g.start + "' is not a state");
  if (!has_state(g.final)) issues.push_back("final state '" + g.final + "' is not a state");
  if (g.start == g.final) issues.push_back("start and final must be distinct");

  std::map<std::pair<std::string, std::string>, int> pair_count;
  for (const auto& e : g.edges) {
    std::string where = "(" + e.from + ", " + render_regexp(e.label) + ", " + e.to + ")";
    if (!has_state(e.from)) issues.push_back("unknown state '" + e.from + "' in edge " + where);
    if (!has_state(e.to)) issues.push_back("unknown state '" + e.to + "' in edge " + where);
    if (e.label.kind() == RegexpKind::Null) {
      issues.push_back("null label on edge " + where);
    }
    if (e.to == g.start) issues.push_back("incoming edge on the start state: " + where);
    if (e.from == g.final) issues.push_back("outgoing edge on the final state: " + where);
    if (++pair_count[{e.from, e.to}] == 2) {
      issues.push_back("parallel edges from '" + e.from + "' to '" + e.to + "'");
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
}

namespace {

void gnfa_words_rec(const Gnfa& g, Word& prefix, std::size_t maxlen,
                    MatchCache& cache, std::set<Word>& out) {
  if (gnfa_accepts(g, prefix, cache)) out.insert(prefix);
  if (prefix.size() == maxlen) return;
  for (char c : g.sigma) {
    prefix.push_back(c);
    gnfa_words_rec(g, prefix, maxlen, cache, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> gnfa_bounded_language(const Gnfa& g, std::size_t maxlen,
                                     MatchCache& cache) {
  std::set<Word> out;
  Word prefix;
  gnfa_words_rec(g, prefix, maxlen, cache, out);
  return out;
}

}  // namespace gnfakit
