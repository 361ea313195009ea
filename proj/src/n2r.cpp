#include "n2r.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "errors.hpp"

namespace gnfakit {

std::vector<std::string> rip_order(const Nfa& m) { return m.states; }

N2rResult ndfa_to_regexp(const Nfa& m) {
  Trace trace;
  Gnfa g = gnfa_from_nfa(m);
  append_frame(trace, g,
               "Constructed GNFA with new start " + g.start + " and new final " +
                   g.final + ".",
               {g.start, g.final});

  for (const auto& q : rip_order(m)) {
    // The reconnected neighbors carry the change; the ripped state itself is
    // gone from the snapshot.
    std::set<std::string> preds, succs;
    for (const auto& e : g.edges) {
      if (e.to == q && e.from != q) preds.insert(e.from);
      if (e.from == q && e.to != q) succs.insert(e.to);
    }
    std::set<std::string> highlights;
    if (!preds.empty() && !succs.empty()) {
      highlights.insert(preds.begin(), preds.end());
      highlights.insert(succs.begin(), succs.end());
    }
    g = rip_state(g, q);
    append_frame(trace, g, "Ripped out state " + q + ".", std::move(highlights));
  }

  const Regexp* label = find_edge_label(g, g.start, g.final);
  Regexp result = label ? *label : Regexp::null();
  return N2rResult{std::move(result), std::move(trace)};
}

namespace {

// State order for the equations: start first, the rest in declaration order.
std::vector<std::string> numbered_states(const Nfa& m) {
  std::vector<std::string> order;
  order.push_back(m.start);
  for (const auto& s : m.states) {
    if (s != m.start) order.push_back(s);
  }
  return order;
}

struct EquationSolver {
  const Nfa& m;
  std::vector<std::string> order;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Regexp> memo;

  explicit EquationSolver(const Nfa& machine)
      : m(machine), order(numbered_states(machine)) {}

  // R(i, j, level), 1-based states; intermediate results are kept simplified,
  // which leaves the final tree identical to simplifying once at the end.
  Regexp entry(std::size_t i, std::size_t j, std::size_t level) {
    auto key = std::make_tuple(i, j, level);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Regexp out = Regexp::null();
    if (level == 0) {
      std::optional<Regexp> acc;
      if (i == j) acc = Regexp::empty();
      for (const auto& rule : m.rules) {
        if (rule.from != order[i - 1] || rule.to != order[j - 1]) continue;
        Regexp piece = rule.symbol ? Regexp::singleton(*rule.symbol) : Regexp::empty();
        acc = acc ? Regexp::union_of(std::move(*acc), std::move(piece))
                  : std::move(piece);
      }
      if (acc) out = std::move(*acc);
    } else {
      Regexp direct = entry(i, j, level - 1);
      Regexp into = entry(i, level, level - 1);
      Regexp around = entry(level, level, level - 1);
      Regexp onward = entry(level, j, level - 1);
      out = Regexp::union_of(
          std::move(direct),
          Regexp::concat(std::move(into),
                         Regexp::concat(Regexp::star(std::move(around)),
                                        std::move(onward))));
    }
    out = simplify(out);
    memo.emplace(key, out);
    return out;
  }
};

}  // namespace

Regexp r_equations_entry(const Nfa& m, std::size_t i, std::size_t j,
                         std::size_t level) {
  EquationSolver solver(m);
  return solver.entry(i, j, level);
}

Regexp r_equations(const Nfa& m) {
  if (m.states.empty()) return Regexp::null();
  EquationSolver solver(m);
  const std::size_t n = m.states.size();

  std::optional<Regexp> acc;
  for (const auto& f : m.finals) {
    auto it = std::find(solver.order.begin(), solver.order.end(), f);
    std::size_t j = static_cast<std::size_t>(it - solver.order.begin()) + 1;
    Regexp piece = solver.entry(1, j, n);
    acc = acc ? Regexp::union_of(std::move(*acc), std::move(piece))
              : std::move(piece);
  }
  return acc ? simplify(*acc) : Regexp::null();
}

}  // namespace gnfakit
