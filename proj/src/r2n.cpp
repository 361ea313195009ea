#include "r2n.hpp"

#include "errors.hpp"

namespace gnfakit {

std::optional<std::size_t> select_decomposable_edge(const Gnfa& g) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    switch (g.edges[i].label.kind()) {
      case RegexpKind::Union:
      case RegexpKind::Concat:
      case RegexpKind::Star:
        return i;
      default:
        break;
    }
  }
  return std::nullopt;
}

Expansion expand_edge(const Gnfa& g, std::size_t edge_index) {
  if (edge_index >= g.edges.size()) {
    throw Error(ErrorCode::UnknownState, "edge index out of range");
  }
  const GnfaEdge edge = g.edges[edge_index];
  const Regexp label = edge.label;
  const std::string src = edge.from;
  const std::string dst = edge.to;

  Gnfa out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge_index));

  std::set<std::string> used(out.states.begin(), out.states.end());
  auto mint = [&]() {
    std::string name = fresh_state_name(used);
    used.insert(name);
    out.states.push_back(name);
    return name;
  };

  switch (label.kind()) {
    case RegexpKind::Union: {
      std::string a = mint(), b = mint(), c = mint(), d = mint();
      add_edge(out, src, Regexp::empty(), a);
      add_edge(out, src, Regexp::empty(), b);
      add_edge(out, a, label.r1(), c);
      add_edge(out, b, label.r2(), d);
      add_edge(out, c, Regexp::empty(), dst);
      add_edge(out, d, Regexp::empty(), dst);
      break;
    }
    case RegexpKind::Concat: {
      std::string a = mint(), b = mint();
      add_edge(out, src, label.r1(), a);
      add_edge(out, a, Regexp::empty(), b);
      add_edge(out, b, label.r2(), dst);
      break;
    }
    case RegexpKind::Star: {
      std::string a = mint(), b = mint();
      add_edge(out, src, Regexp::empty(), a);
      add_edge(out, a, Regexp::empty(), b);
      add_edge(out, a, Regexp::empty(), dst);
      add_edge(out, b, Regexp::empty(), dst);
      add_edge(out, b, label.r1(), b);
      break;
    }
    default:
      throw Error(ErrorCode::NonAtomicLabel,
                  "edge label " + render_regexp(label) + " is not decomposable");
  }

  Expansion result;
  result.graph = std::move(out);
  result.highlights = {src, dst};
  result.message = "Expanded " + render_regexp(label) + " on the edge from " +
                   src + " to " + dst + ".";
  return result;
}

R2nResult regexp_to_ndfa(const Regexp& r) {
  Trace trace;
  Gnfa g = gnfa_from_regexp(r);
  append_frame(trace, g, "Starting ndfa.", {});

  Regexp simplified = simplify(r);
  if (simplified != r) {
    g = gnfa_from_regexp(simplified);
    g.sigma = regexp_alphabet(r);  // keep symbols the simplification dropped
    append_frame(trace, g,
                 "Simplified the regular expression to " +
                     render_regexp(simplified) + ".",
                 {});
  }

  while (auto edge_index = select_decomposable_edge(g)) {
    Expansion step = expand_edge(g, *edge_index);
    g = std::move(step.graph);
    append_frame(trace, g, std::move(step.message), std::move(step.highlights));
  }

  return R2nResult{gnfa_to_nfa(g), std::move(trace)};
}

}  // namespace gnfakit
