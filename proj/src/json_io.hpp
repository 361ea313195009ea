#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "n2r.hpp"
#include "nfa.hpp"
#include "r2n.hpp"
#include "trace.hpp"

namespace gnfakit {

// ordered_json keeps insertion order, so emitted documents are byte-stable
// with the documented field order.
using ordered_json = nlohmann::ordered_json;

// Regexp wire form: nested tagged objects,
// {"tag": "null" | "empty" | "singleton" | "union" | "concat" | "star", ...}
// with "symbol" on singletons and "r1"/"r2" children.
ordered_json regexp_to_json(const Regexp& r);
Regexp regexp_from_json(const ordered_json& j);

// Machine wire form:
// {"states": [...], "sigma": [...], "start": "S", "finals": [...],
//  "rules": [["S", "eps", "A"], ["A", "a", "B"], ...]}
// Deserialization validates the machine.
ordered_json nfa_to_json(const Nfa& m);
Nfa nfa_from_json(const ordered_json& j);

// GNFA wire form mirrors the machine form with a single "final" and rule
// labels as Regexp JSON. Deserialization validates the invariants.
ordered_json gnfa_to_json(const Gnfa& g);
Gnfa gnfa_from_json(const ordered_json& j);

// Trace wire form:
// {"frames": [{"index": 0, "message": "...", "highlights": [...],
//              "graph": <GNFA JSON>}, ...]}
ordered_json trace_to_json(const Trace& t);
Trace trace_from_json(const ordered_json& j);

// Parses text, mapping parse failures to Error(Json).
ordered_json parse_json(std::string_view text);

// 2-space indent plus a trailing newline.
std::string dump_json(const ordered_json& j);

}  // namespace gnfakit
