#include "gnfakit/gnfakit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "check.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "n2r.hpp"
#include "r2n.hpp"
#include "trace.hpp"

struct gk_regexp {
  gnfakit::Regexp value;
};

struct gk_nfa {
  gnfakit::Nfa value;
};

struct gk_trace {
  std::shared_ptr<const gnfakit::Trace> value;
};

struct gk_cursor {
  gnfakit::VizCursor value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

gk_status status_for(const gnfakit::Error& e) {
  using gnfakit::ErrorCode;
  switch (e.code()) {
    case ErrorCode::Parse:
      return GK_ERR_PARSE;
    case ErrorCode::SymbolNotInAlphabet:
      return GK_ERR_SYMBOL;
    case ErrorCode::Validation:
      return GK_ERR_VALIDATION;
    case ErrorCode::EmptyLanguage:
      return GK_ERR_EMPTY_LANGUAGE;
    case ErrorCode::NonAtomicLabel:
      return GK_ERR_NON_ATOMIC_LABEL;
    case ErrorCode::UnknownState:
      return GK_ERR_UNKNOWN_STATE;
    case ErrorCode::RipEndpoint:
      return GK_ERR_RIP_ENDPOINT;
    case ErrorCode::EmptyTrace:
      return GK_ERR_EMPTY_TRACE;
    case ErrorCode::Json:
    case ErrorCode::Io:
      return GK_ERR_JSON;
  }
  return GK_ERR_INTERNAL;
}

template <typename Fn>
gk_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const gnfakit::Error& e) {
    set_error(e.what());
    return status_for(e);
  } catch (const std::exception& e) {
    set_error(e.what());
    return GK_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return GK_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gk_status require(bool ok, const char* what) {
  if (ok) return GK_OK;
  set_error(what);
  return GK_ERR_BAD_ARGUMENT;
}

gnfakit::ordered_json words_to_json(const std::set<gnfakit::Word>& words) {
  gnfakit::ordered_json arr = gnfakit::ordered_json::array();
  for (const auto& w : words) arr.push_back(w);
  return arr;
}

gk_status run_check(const gnfakit::CheckReport& report, char** counterexample_out) {
  if (report.equivalent) {
    if (counterexample_out != nullptr) *counterexample_out = nullptr;
    return GK_OK;
  }
  set_error(report.detail);
  if (counterexample_out != nullptr) {
    *counterexample_out = copy_string(report.counterexample);
  }
  return GK_ERR_CHECK_FAILED;
}

}  // namespace

extern "C" {

const char* gk_version(void) { return "0.1.0"; }

const char* gk_last_error(void) { return g_last_error.c_str(); }

void gk_string_free(char* s) { std::free(s); }

gk_status gk_regexp_parse(const char* text, const char* sigma, gk_regexp** out) {
  if (auto st = require(text && sigma && out, "text, sigma and out must be non-NULL"))
    return st;
  return guarded([&] {
    *out = new gk_regexp{gnfakit::parse_regexp(text, sigma)};
    return GK_OK;
  });
}

gk_status gk_regexp_from_json(const char* json_text, gk_regexp** out) {
  if (auto st = require(json_text && out, "json_text and out must be non-NULL"))
    return st;
  return guarded([&] {
    *out = new gk_regexp{gnfakit::regexp_from_json(gnfakit::parse_json(json_text))};
    return GK_OK;
  });
}

char* gk_regexp_render(const gk_regexp* r) {
  if (r == nullptr) return nullptr;
  return copy_string(gnfakit::render_regexp(r->value));
}

char* gk_regexp_to_json(const gk_regexp* r) {
  if (r == nullptr) return nullptr;
  return copy_string(gnfakit::dump_json(gnfakit::regexp_to_json(r->value)));
}

gk_status gk_regexp_simplify(const gk_regexp* r, gk_regexp** out) {
  if (auto st = require(r && out, "r and out must be non-NULL")) return st;
  return guarded([&] {
    *out = new gk_regexp{gnfakit::simplify(r->value)};
    return GK_OK;
  });
}

int gk_regexp_matches(const gk_regexp* r, const char* word) {
  if (r == nullptr || word == nullptr) return 0;
  return gnfakit::matches(r->value, word) ? 1 : 0;
}

char* gk_regexp_enumerate(const gk_regexp* r, int maxlen, const char* sigma) {
  if (r == nullptr || sigma == nullptr || maxlen < 0) return nullptr;
  auto words = gnfakit::enumerate_regexp_language(
      r->value, static_cast<std::size_t>(maxlen), sigma);
  return copy_string(words_to_json(words).dump());
}

gk_status gk_regexp_gen_word(const gk_regexp* r, unsigned seed, int max_star_reps,
                             char** word_out) {
  if (auto st = require(r && word_out && max_star_reps >= 0,
                        "r and word_out must be non-NULL, max_star_reps >= 0"))
    return st;
  return guarded([&] {
    *word_out = copy_string(
        gnfakit::gen_word(r->value, seed, static_cast<unsigned>(max_star_reps)));
    return GK_OK;
  });
}

void gk_regexp_free(gk_regexp* r) { delete r; }

gk_status gk_nfa_from_json(const char* json_text, gk_nfa** out) {
  if (auto st = require(json_text && out, "json_text and out must be non-NULL"))
    return st;
  return guarded([&] {
    *out = new gk_nfa{gnfakit::nfa_from_json(gnfakit::parse_json(json_text))};
    return GK_OK;
  });
}

char* gk_nfa_to_json(const gk_nfa* m) {
  if (m == nullptr) return nullptr;
  return copy_string(gnfakit::dump_json(gnfakit::nfa_to_json(m->value)));
}

gk_status gk_nfa_apply(const gk_nfa* m, const char* word, int* accept_out) {
  if (auto st = require(m && word && accept_out,
                        "m, word and accept_out must be non-NULL"))
    return st;
  return guarded([&] {
    *accept_out = gnfakit::nfa_apply(m->value, word) ? 1 : 0;
    return GK_OK;
  });
}

char* gk_nfa_enumerate(const gk_nfa* m, int maxlen) {
  if (m == nullptr || maxlen < 0) return nullptr;
  auto words =
      gnfakit::enumerate_nfa_language(m->value, static_cast<std::size_t>(maxlen));
  return copy_string(words_to_json(words).dump());
}

void gk_nfa_free(gk_nfa* m) { delete m; }

gk_status gk_regexp_to_nfa(const gk_regexp* r, gk_nfa** nfa_out, gk_trace** trace_out) {
  if (auto st = require(r != nullptr, "r must be non-NULL")) return st;
  return guarded([&] {
    gnfakit::R2nResult result = gnfakit::regexp_to_ndfa(r->value);
    if (nfa_out != nullptr) *nfa_out = new gk_nfa{std::move(result.nfa)};
    if (trace_out != nullptr) {
      *trace_out = new gk_trace{
          std::make_shared<const gnfakit::Trace>(std::move(result.trace))};
    }
    return GK_OK;
  });
}

gk_status gk_nfa_to_regexp(const gk_nfa* m, gk_regexp** regexp_out,
                           gk_trace** trace_out) {
  if (auto st = require(m != nullptr, "m must be non-NULL")) return st;
  return guarded([&] {
    gnfakit::N2rResult result = gnfakit::ndfa_to_regexp(m->value);
    if (regexp_out != nullptr) *regexp_out = new gk_regexp{std::move(result.regexp)};
    if (trace_out != nullptr) {
      *trace_out = new gk_trace{
          std::make_shared<const gnfakit::Trace>(std::move(result.trace))};
    }
    return GK_OK;
  });
}

gk_status gk_nfa_to_regexp_equations(const gk_nfa* m, gk_regexp** regexp_out) {
  if (auto st = require(m && regexp_out, "m and regexp_out must be non-NULL"))
    return st;
  return guarded([&] {
    *regexp_out = new gk_regexp{gnfakit::r_equations(m->value)};
    return GK_OK;
  });
}

size_t gk_trace_frame_count(const gk_trace* t) {
  return t == nullptr ? 0 : t->value->frames.size();
}

char* gk_trace_frame_message(const gk_trace* t, size_t index) {
  if (t == nullptr || index >= t->value->frames.size()) return nullptr;
  return copy_string(t->value->frames[index].message);
}

char* gk_trace_frame_highlights(const gk_trace* t, size_t index) {
  if (t == nullptr || index >= t->value->frames.size()) return nullptr;
  const auto& highlights = t->value->frames[index].highlights;
  gnfakit::ordered_json arr = gnfakit::ordered_json::array();
  for (const auto& h : highlights) arr.push_back(h);
  return copy_string(arr.dump());
}

char* gk_trace_frame_dot(const gk_trace* t, size_t index) {
  if (t == nullptr || index >= t->value->frames.size()) return nullptr;
  return copy_string(gnfakit::frame_to_dot(t->value->frames[index]));
}

char* gk_trace_to_json(const gk_trace* t) {
  if (t == nullptr) return nullptr;
  return copy_string(gnfakit::dump_json(gnfakit::trace_to_json(*t->value)));
}

gk_status gk_trace_from_json(const char* json_text, gk_trace** out) {
  if (auto st = require(json_text && out, "json_text and out must be non-NULL"))
    return st;
  return guarded([&] {
    auto trace = std::make_shared<const gnfakit::Trace>(
        gnfakit::trace_from_json(gnfakit::parse_json(json_text)));
    *out = new gk_trace{std::move(trace)};
    return GK_OK;
  });
}

void gk_trace_free(gk_trace* t) { delete t; }

gk_status gk_cursor_new(const gk_trace* t, gk_cursor** out) {
  if (auto st = require(t && out, "t and out must be non-NULL")) return st;
  return guarded([&] {
    *out = new gk_cursor{gnfakit::VizCursor(t->value)};
    return GK_OK;
  });
}

size_t gk_cursor_index(const gk_cursor* c) {
  return c == nullptr ? 0 : c->value.processed_count();
}

int gk_cursor_next(gk_cursor* c) {
  if (c == nullptr) return 0;
  gnfakit::VizCursor moved = c->value.next();
  bool changed = !(moved == c->value);
  c->value = std::move(moved);
  return changed ? 1 : 0;
}

int gk_cursor_prev(gk_cursor* c) {
  if (c == nullptr) return 0;
  gnfakit::VizCursor moved = c->value.prev();
  bool changed = !(moved == c->value);
  c->value = std::move(moved);
  return changed ? 1 : 0;
}

int gk_cursor_end(gk_cursor* c) {
  if (c == nullptr) return 0;
  gnfakit::VizCursor moved = c->value.to_end();
  bool changed = !(moved == c->value);
  c->value = std::move(moved);
  return changed ? 1 : 0;
}

int gk_cursor_start(gk_cursor* c) {
  if (c == nullptr) return 0;
  gnfakit::VizCursor moved = c->value.to_start();
  bool changed = !(moved == c->value);
  c->value = std::move(moved);
  return changed ? 1 : 0;
}

void gk_cursor_free(gk_cursor* c) { delete c; }

gk_status gk_check_nfa_json(const char* machine_json, int maxlen,
                            char** counterexample_out) {
  if (auto st = require(machine_json != nullptr && maxlen >= 0,
                        "machine_json must be non-NULL, maxlen >= 0"))
    return st;
  return guarded([&] {
    gnfakit::Nfa m = gnfakit::nfa_from_json(gnfakit::parse_json(machine_json));
    return run_check(gnfakit::check_machine(m, static_cast<std::size_t>(maxlen)),
                     counterexample_out);
  });
}

gk_status gk_check_regexp(const char* text, const char* sigma, int maxlen,
                          char** counterexample_out) {
  if (auto st = require(text != nullptr && sigma != nullptr && maxlen >= 0,
                        "text and sigma must be non-NULL, maxlen >= 0"))
    return st;
  return guarded([&] {
    gnfakit::Regexp r = gnfakit::parse_regexp(text, sigma);
    return run_check(
        gnfakit::check_regexp(r, sigma, static_cast<std::size_t>(maxlen)),
        counterexample_out);
  });
}

gk_status gk_check_trace_json(const char* trace_json, int maxlen,
                              char** counterexample_out) {
  if (auto st = require(trace_json != nullptr && maxlen >= 0,
                        "trace_json must be non-NULL, maxlen >= 0"))
    return st;
  return guarded([&] {
    gnfakit::Trace t = gnfakit::trace_from_json(gnfakit::parse_json(trace_json));
    return run_check(gnfakit::check_trace(t, static_cast<std::size_t>(maxlen)),
                     counterexample_out);
  });
}

}  // extern "C"
