#include "json_io.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gnfakit {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::Json, what);
}

std::string require_string(const ordered_json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

char require_symbol(const ordered_json& j, const char* what) {
  std::string s = require_string(j, what);
  if (s.size() != 1) bad(std::string(what) + " must be a single character, got '" + s + "'");
  return s[0];
}

const ordered_json& require_field(const ordered_json& j, const char* name) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

ordered_json regexp_to_json(const Regexp& r) {
  ordered_json j;
  switch (r.kind()) {
    case RegexpKind::Null:
      j["tag"] = "null";
      break;
    case RegexpKind::Empty:
      j["tag"] = "empty";
      break;
    case RegexpKind::Singleton:
      j["tag"] = "singleton";
      j["symbol"] = std::string(1, r.symbol());
      break;
    case RegexpKind::Union:
      j["tag"] = "union";
      j["r1"] = regexp_to_json(r.r1());
      j["r2"] = regexp_to_json(r.r2());
      break;
    case RegexpKind::Concat:
      j["tag"] = "concat";
      j["r1"] = regexp_to_json(r.r1());
      j["r2"] = regexp_to_json(r.r2());
      break;
    case RegexpKind::Star:
      j["tag"] = "star";
      j["r1"] = regexp_to_json(r.r1());
      break;
  }
  return j;
}

Regexp regexp_from_json(const ordered_json& j) {
  std::string tag = require_string(require_field(j, "tag"), "regexp tag");
  if (tag == "null") return Regexp::null();
  if (tag == "empty") return Regexp::empty();
  if (tag == "singleton") {
    return Regexp::singleton(require_symbol(require_field(j, "symbol"), "symbol"));
  }
  if (tag == "union") {
    return Regexp::union_of(regexp_from_json(require_field(j, "r1")),
                            regexp_from_json(require_field(j, "r2")));
  }
  if (tag == "concat") {
    return Regexp::concat(regexp_from_json(require_field(j, "r1")),
                          regexp_from_json(require_field(j, "r2")));
  }
  if (tag == "star") {
    return Regexp::star(regexp_from_json(require_field(j, "r1")));
  }
  bad("unknown regexp tag \"" + tag + "\"");
}

namespace {

ordered_json sigma_to_json(const std::string& sigma) {
  ordered_json arr = ordered_json::array();
  for (char c : sigma) arr.push_back(std::string(1, c));
  return arr;
}

std::string sigma_from_json(const ordered_json& j) {
  if (!j.is_array()) bad("\"sigma\" must be an array");
  std::string sigma;
  for (const auto& item : j) sigma.push_back(require_symbol(item, "sigma entry"));
  return sigma;
}

std::vector<std::string> strings_from_json(const ordered_json& j, const char* what) {
  if (!j.is_array()) bad(std::string("\"") + what + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(require_string(item, what));
  return out;
}

}  // namespace

ordered_json nfa_to_json(const Nfa& m) {
  ordered_json j;
  j["states"] = m.states;
  j["sigma"] = sigma_to_json(m.sigma);
  j["start"] = m.start;
  j["finals"] = m.finals;
  ordered_json rules = ordered_json::array();
  for (const auto& rule : m.rules) {
    std::string label = rule.symbol ? std::string(1, *rule.symbol) : "eps";
    rules.push_back(ordered_json::array({rule.from, label, rule.to}));
  }
  j["rules"] = rules;
  return j;
}

Nfa nfa_from_json(const ordered_json& j) {
  Nfa m;
  m.states = strings_from_json(require_field(j, "states"), "states");
  m.sigma = sigma_from_json(require_field(j, "sigma"));
  m.start = require_string(require_field(j, "start"), "start");
  m.finals = strings_from_json(require_field(j, "finals"), "finals");
  const auto& rules = require_field(j, "rules");
  if (!rules.is_array()) bad("\"rules\" must be an array");
  for (const auto& rule : rules) {
    if (!rule.is_array() || rule.size() != 3) {
      bad("each rule must be a [source, symbol, destination] triple");
    }
    NfaRule out;
    out.from = require_string(rule[0], "rule source");
    std::string label = require_string(rule[1], "rule symbol");
    if (label == "eps") {
      out.symbol = std::nullopt;
    } else if (label.size() == 1) {
      out.symbol = label[0];
    } else {
      bad("rule symbol must be a single character or \"eps\", got '" + label + "'");
    }
    out.to = require_string(rule[2], "rule destination");
    m.rules.push_back(std::move(out));
  }
  return validate_nfa(m);
}

ordered_json gnfa_to_json(const Gnfa& g) {
  ordered_json j;
  j["states"] = g.states;
  j["sigma"] = sigma_to_json(g.sigma);
  j["start"] = g.start;
  j["final"] = g.final;
  ordered_json rules = ordered_json::array();
  for (const auto& e : g.edges) {
    rules.push_back(ordered_json::array({e.from, regexp_to_json(e.label), e.to}));
  }
  j["rules"] = rules;
  return j;
}

Gnfa gnfa_from_json(const ordered_json& j) {
  Gnfa g;
  g.states = strings_from_json(require_field(j, "states"), "states");
  g.sigma = sigma_from_json(require_field(j, "sigma"));
  g.start = require_string(require_field(j, "start"), "start");
  g.final = require_string(require_field(j, "final"), "final");
  const auto& rules = require_field(j, "rules");
  if (!rules.is_array()) bad("\"rules\" must be an array");
  for (const auto& rule : rules) {
    if (!rule.is_array() || rule.size() != 3) {
      bad("each edge must be a [source, regexp, destination] triple");
    }
    GnfaEdge e;
    e.from = require_string(rule[0], "edge source");
    e.label = regexp_from_json(rule[1]);
    e.to = require_string(rule[2], "edge destination");
    g.edges.push_back(std::move(e));
  }
  validate_gnfa(g);
  return g;
}

ordered_json trace_to_json(const Trace& t) {
  ordered_json frames = ordered_json::array();
  for (const auto& f : t.frames) {
    ordered_json frame;
    frame["index"] = f.index;
    frame["message"] = f.message;
    frame["highlights"] =
        std::vector<std::string>(f.highlights.begin(), f.highlights.end());
    frame["graph"] = gnfa_to_json(f.graph);
    frames.push_back(std::move(frame));
  }
  ordered_json j;
  j["frames"] = std::move(frames);
  return j;
}

Trace trace_from_json(const ordered_json& j) {
  const auto& frames = require_field(j, "frames");
  if (!frames.is_array() || frames.empty()) {
    bad("\"frames\" must be a nonempty array");
  }
  Trace t;
  for (const auto& fj : frames) {
    Frame f;
    const auto& index = require_field(fj, "index");
    if (!index.is_number_unsigned()) bad("\"index\" must be a nonnegative integer");
    f.index = index.get<std::size_t>();
    if (f.index != t.frames.size()) bad("frame indices must be contiguous from 0");
    f.message = require_string(require_field(fj, "message"), "message");
    for (const auto& h : strings_from_json(require_field(fj, "highlights"), "highlights")) {
      f.highlights.insert(h);
    }
    f.graph = gnfa_from_json(require_field(fj, "graph"));
    for (const auto& h : f.highlights) {
      if (std::find(f.graph.states.begin(), f.graph.states.end(), h) ==
          f.graph.states.end()) {
        bad("highlight '" + h + "' is not a state of the frame's graph");
      }
    }
    t.frames.push_back(std::move(f));
  }
  return t;
}

ordered_json parse_json(std::string_view text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace gnfakit
