/* gnfakit -- finite automata / regular expression transformation toolkit.
 *
 * C interface over the C++ core: opaque handles, integer status codes, and
 * UTF-8 strings. Every char* returned by the library is heap-allocated and
 * must be released with gk_string_free(); handles are released with their
 * matching *_free(). gk_last_error() describes the most recent failure on
 * the calling thread.
 *
 * Words are passed as NUL-terminated strings with one character per symbol;
 * "" is the empty word. Alphabets are strings of unique symbols.
 */

#ifndef GNFAKIT_H
#define GNFAKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_ERR_PARSE = 1,            /* regexp text syntax error */
  GK_ERR_SYMBOL = 2,           /* symbol outside the alphabet */
  GK_ERR_VALIDATION = 3,       /* machine/graph invariant violations */
  GK_ERR_EMPTY_LANGUAGE = 4,   /* word generation from an empty language */
  GK_ERR_NON_ATOMIC_LABEL = 5, /* GNFA->NFA with a compound label */
  GK_ERR_UNKNOWN_STATE = 6,
  GK_ERR_RIP_ENDPOINT = 7, /* ripping the start or final state */
  GK_ERR_EMPTY_TRACE = 8,
  GK_ERR_JSON = 9,
  GK_ERR_CHECK_FAILED = 10, /* differential check found a counterexample */
  GK_ERR_BAD_ARGUMENT = 11,
  GK_ERR_INTERNAL = 12
} gk_status;

typedef struct gk_regexp gk_regexp;
typedef struct gk_nfa gk_nfa;
typedef struct gk_trace gk_trace;
typedef struct gk_cursor gk_cursor;

const char* gk_version(void);

/* Message for the most recent failure on this thread; valid until the next
 * failing call on the same thread. Never NULL. */
const char* gk_last_error(void);

void gk_string_free(char* s);

/* ---- regular expressions ---- */

gk_status gk_regexp_parse(const char* text, const char* sigma, gk_regexp** out);
gk_status gk_regexp_from_json(const char* json_text, gk_regexp** out);
char* gk_regexp_render(const gk_regexp* r);
char* gk_regexp_to_json(const gk_regexp* r);
gk_status gk_regexp_simplify(const gk_regexp* r, gk_regexp** out);

/* 1 when the word is in the language, 0 otherwise. */
int gk_regexp_matches(const gk_regexp* r, const char* word);

/* JSON array of every word of length <= maxlen over sigma in the language. */
char* gk_regexp_enumerate(const gk_regexp* r, int maxlen, const char* sigma);

gk_status gk_regexp_gen_word(const gk_regexp* r, unsigned seed, int max_star_reps,
                             char** word_out);
void gk_regexp_free(gk_regexp* r);

/* ---- machines ---- */

gk_status gk_nfa_from_json(const char* json_text, gk_nfa** out);
char* gk_nfa_to_json(const gk_nfa* m);

/* *accept_out becomes 1 for accept, 0 for reject. */
gk_status gk_nfa_apply(const gk_nfa* m, const char* word, int* accept_out);

/* JSON array of every accepted word of length <= maxlen. */
char* gk_nfa_enumerate(const gk_nfa* m, int maxlen);
void gk_nfa_free(gk_nfa* m);

/* ---- transformations ---- */

/* Regexp to NFA with the step-by-step trace. Either out pointer may be NULL
 * when the caller does not need it. */
gk_status gk_regexp_to_nfa(const gk_regexp* r, gk_nfa** nfa_out, gk_trace** trace_out);

/* NFA to regexp by state ripping; the returned regexp is the raw ripping
 * result (simplify separately if wanted). */
gk_status gk_nfa_to_regexp(const gk_nfa* m, gk_regexp** regexp_out,
                           gk_trace** trace_out);

/* Independent route via the recursive equations; simplified. */
gk_status gk_nfa_to_regexp_equations(const gk_nfa* m, gk_regexp** regexp_out);

/* ---- traces ---- */

size_t gk_trace_frame_count(const gk_trace* t);
char* gk_trace_frame_message(const gk_trace* t, size_t index);
char* gk_trace_frame_highlights(const gk_trace* t, size_t index); /* JSON array */
char* gk_trace_frame_dot(const gk_trace* t, size_t index);
char* gk_trace_to_json(const gk_trace* t);
gk_status gk_trace_from_json(const char* json_text, gk_trace** out);
void gk_trace_free(gk_trace* t);

/* ---- trace navigation ---- */

gk_status gk_cursor_new(const gk_trace* t, gk_cursor** out);
size_t gk_cursor_index(const gk_cursor* c);

/* Each returns 1 when the cursor moved, 0 when saturated at a boundary. */
int gk_cursor_next(gk_cursor* c);
int gk_cursor_prev(gk_cursor* c);
int gk_cursor_end(gk_cursor* c);
int gk_cursor_start(gk_cursor* c);
void gk_cursor_free(gk_cursor* c);

/* ---- differential checks ----
 *
 * GK_OK means all routes agree on every word of length <= maxlen. On
 * GK_ERR_CHECK_FAILED, *counterexample_out (when non-NULL) receives the
 * shortest disagreement word and gk_last_error() describes the routes. */

gk_status gk_check_nfa_json(const char* machine_json, int maxlen,
                            char** counterexample_out);
gk_status gk_check_regexp(const char* text, const char* sigma, int maxlen,
                          char** counterexample_out);
gk_status gk_check_trace_json(const char* trace_json, int maxlen,
                              char** counterexample_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GNFAKIT_H */
