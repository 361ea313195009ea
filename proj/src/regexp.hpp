#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

namespace gnfakit {

// A word is one character per symbol; "" is the empty word.
using Word = std::string;

enum class RegexpKind { Null, Empty, Singleton, Union, Concat, Star };

// Immutable regular expression tree. Copies share structure, so copying is
// cheap and values are safe to hand across threads.
class Regexp {
public:
  Regexp();  // the null regexp (empty language)

  static Regexp null();
  static Regexp empty();
  static Regexp singleton(char symbol);
  static Regexp union_of(Regexp r1, Regexp r2);
  static Regexp concat(Regexp r1, Regexp r2);
  static Regexp star(Regexp r1);

  RegexpKind kind() const;
  char symbol() const;  // Singleton only
  Regexp r1() const;    // Union, Concat, Star
  Regexp r2() const;    // Union, Concat

  // Identity of the underlying node, stable while any copy is alive.
  // Distinct ids may still denote structurally equal trees.
  const void* id() const;

  friend bool operator==(const Regexp& a, const Regexp& b);
  friend bool operator!=(const Regexp& a, const Regexp& b) { return !(a == b); }

private:
  struct Node;
  explicit Regexp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Regexp::Node {
  RegexpKind kind;
  char symbol;
  std::shared_ptr<const Node> r1;
  std::shared_ptr<const Node> r2;
};

inline RegexpKind Regexp::kind() const { return node_->kind; }
inline const void* Regexp::id() const { return node_.get(); }

// Text syntax: `U` or `|` for union (lowest precedence, left-associative),
// juxtaposition for concatenation, postfix `*`, `!` for the empty word,
// `~` for the null regexp, parentheses for grouping. Singletons are single
// alphanumeric characters drawn from sigma. Whitespace separates tokens.
Regexp parse_regexp(std::string_view text, std::string_view sigma);

// Inverse of parse_regexp: emits parentheses only where precedence requires,
// so parse_regexp(render_regexp(r), sigma) is structurally equal to r.
std::string render_regexp(const Regexp& r);

// Rewrites bottom-up to a fixpoint: r U ~ -> r, ~ U r -> r, r ~ -> ~,
// ~ r -> ~, r ! -> r, ! r -> r, ~* -> !, !* -> !, (r*)* -> r*.
// The result contains Null only when the language is empty, and is then
// exactly Null.
Regexp simplify(const Regexp& r);

// Membership oracle by symbol derivatives and a nullability predicate.
// Symbols outside the regexp's alphabet simply never match.
bool matches(const Regexp& r, const Word& w);

// True iff L(r) is the empty language (equivalently, simplify(r) is Null).
bool is_empty_language(const Regexp& r);

// Exactly { w : |w| <= maxlen and matches(r, w) } over sigma.
std::set<Word> enumerate_regexp_language(const Regexp& r, std::size_t maxlen,
                                         std::string_view sigma);

// A word of L(r). Star repetition counts are drawn uniformly from
// [0, max_star_reps] and union branches uniformly; the stream is fully
// determined by seed. Throws Error(EmptyLanguage) when L(r) is empty.
Word gen_word(const Regexp& r, std::uint32_t seed, unsigned max_star_reps = 20);

// Singleton symbols of r in first-occurrence order.
std::string regexp_alphabet(const Regexp& r);

// Memoizes matches() results across calls; one cache per bulk query keeps
// repeated segment tests on shared labels cheap.
class MatchCache {
public:
  bool matches(const Regexp& r, const Word& w);

private:
  struct Key {
    const void* id;
    Word word;
    bool operator==(const Key& o) const { return id == o.id && word == o.word; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const void*>()(k.id) ^ (std::hash<Word>()(k.word) * 31);
    }
  };
  std::unordered_map<Key, bool, KeyHash> cache_;
};

}  // namespace gnfakit
