#include "regexp.hpp"

#include <cassert>
#include <random>
#include <vector>

#include "errors.hpp"

namespace gnfakit {

Regexp::Regexp() : Regexp(null()) {}

Regexp Regexp::null() {
  return Regexp(std::make_shared<Node>(Node{RegexpKind::Null, '\0', nullptr, nullptr}));
}

Regexp Regexp::empty() {
  return Regexp(std::make_shared<Node>(Node{RegexpKind::Empty, '\0', nullptr, nullptr}));
}

Regexp Regexp::singleton(char symbol) {
  return Regexp(std::make_shared<Node>(Node{RegexpKind::Singleton, symbol, nullptr, nullptr}));
}

Regexp Regexp::union_of(Regexp r1, Regexp r2) {
  return Regexp(std::make_shared<Node>(
      Node{RegexpKind::Union, '\0', std::move(r1.node_), std::move(r2.node_)}));
}

Regexp Regexp::concat(Regexp r1, Regexp r2) {
  return Regexp(std::make_shared<Node>(
      Node{RegexpKind::Concat, '\0', std::move(r1.node_), std::move(r2.node_)}));
}

Regexp Regexp::star(Regexp r1) {
  return Regexp(std::make_shared<Node>(
      Node{RegexpKind::Star, '\0', std::move(r1.node_), nullptr}));
}

char Regexp::symbol() const {
  assert(kind() == RegexpKind::Singleton);
  return node_->symbol;
}

Regexp Regexp::r1() const {
  assert(node_->r1 != nullptr);
  return Regexp(node_->r1);
}

Regexp Regexp::r2() const {
  assert(node_->r2 != nullptr);
  return Regexp(node_->r2);
}

bool operator==(const Regexp& a, const Regexp& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RegexpKind::Null:
    case RegexpKind::Empty:
      return true;
    case RegexpKind::Singleton:
      return a.symbol() == b.symbol();
    case RegexpKind::Star:
      return a.r1() == b.r1();
    case RegexpKind::Union:
    case RegexpKind::Concat:
      return a.r1() == b.r1() && a.r2() == b.r2();
  }
  return false;
}

namespace {

Regexp simplify_rec(const Regexp& r, std::unordered_map<const void*, Regexp>& memo) {
  auto it = memo.find(r.id());
  if (it != memo.end()) return it->second;

  Regexp out = r;
  switch (r.kind()) {
    case RegexpKind::Null:
    case RegexpKind::Empty:
    case RegexpKind::Singleton:
      break;
    case RegexpKind::Union: {
      Regexp a = simplify_rec(r.r1(), memo);
      Regexp b = simplify_rec(r.r2(), memo);
      if (a.kind() == RegexpKind::Null) {
        out = b;
      } else if (b.kind() == RegexpKind::Null) {
        out = a;
      } else if (a.id() != r.r1().id() || b.id() != r.r2().id()) {
        out = Regexp::union_of(a, b);
      }
      break;
    }
    case RegexpKind::Concat: {
      Regexp a = simplify_rec(r.r1(), memo);
      Regexp b = simplify_rec(r.r2(), memo);
      if (a.kind() == RegexpKind::Null || b.kind() == RegexpKind::Null) {
        out = Regexp::null();
      } else if (a.kind() == RegexpKind::Empty) {
        out = b;
      } else if (b.kind() == RegexpKind::Empty) {
        out = a;
      } else if (a.id() != r.r1().id() || b.id() != r.r2().id()) {
        out = Regexp::concat(a, b);
      }
      break;
    }
    case RegexpKind::Star: {
      Regexp a = simplify_rec(r.r1(), memo);
      if (a.kind() == RegexpKind::Null || a.kind() == RegexpKind::Empty) {
        out = Regexp::empty();
      } else if (a.kind() == RegexpKind::Star) {
        out = a;
      } else if (a.id() != r.r1().id()) {
        out = Regexp::star(a);
      }
      break;
    }
  }
  memo.emplace(r.id(), out);
  return out;
}

bool nullable_rec(const Regexp& r, std::unordered_map<const void*, bool>& memo) {
  auto it = memo.find(r.id());
  if (it != memo.end()) return it->second;
  bool out = false;
  switch (r.kind()) {
    case RegexpKind::Null:
    case RegexpKind::Singleton:
      out = false;
      break;
    case RegexpKind::Empty:
    case RegexpKind::Star:
      out = true;
      break;
    case RegexpKind::Union:
      out = nullable_rec(r.r1(), memo) || nullable_rec(r.r2(), memo);
      break;
    case RegexpKind::Concat:
      out = nullable_rec(r.r1(), memo) && nullable_rec(r.r2(), memo);
      break;
  }
  memo.emplace(r.id(), out);
  return out;
}

// Pruning constructors keep derivative terms from accumulating dead branches.
Regexp d_union(Regexp a, Regexp b) {
  if (a.kind() == RegexpKind::Null) return b;
  if (b.kind() == RegexpKind::Null) return a;
  return Regexp::union_of(std::move(a), std::move(b));
}

Regexp d_concat(Regexp a, Regexp b) {
  if (a.kind() == RegexpKind::Null || b.kind() == RegexpKind::Null) {
    return Regexp::null();
  }
  if (a.kind() == RegexpKind::Empty) return b;
  if (b.kind() == RegexpKind::Empty) return a;
  return Regexp::concat(std::move(a), std::move(b));
}

struct DerivCtx {
  std::unordered_map<const void*, bool> nullable;
  std::unordered_map<const void*, Regexp> step;  // cleared per input symbol
};

Regexp deriv_rec(const Regexp& r, char c, DerivCtx& ctx) {
  auto it = ctx.step.find(r.id());
  if (it != ctx.step.end()) return it->second;
  Regexp out = Regexp::null();
  switch (r.kind()) {
    case RegexpKind::Null:
    case RegexpKind::Empty:
      break;
    case RegexpKind::Singleton:
      out = (r.symbol() == c) ? Regexp::empty() : Regexp::null();
      break;
    case RegexpKind::Union:
      out = d_union(deriv_rec(r.r1(), c, ctx), deriv_rec(r.r2(), c, ctx));
      break;
    case RegexpKind::Concat: {
      Regexp head = d_concat(deriv_rec(r.r1(), c, ctx), r.r2());
      if (nullable_rec(r.r1(), ctx.nullable)) {
        out = d_union(std::move(head), deriv_rec(r.r2(), c, ctx));
      } else {
        out = std::move(head);
      }
      break;
    }
    case RegexpKind::Star:
      out = d_concat(deriv_rec(r.r1(), c, ctx), r);
      break;
  }
  ctx.step.emplace(r.id(), out);
  return out;
}

Regexp derivative(const Regexp& r, char c, DerivCtx& ctx) {
  ctx.step.clear();
  return deriv_rec(r, c, ctx);
}

}  // namespace

Regexp simplify(const Regexp& r) {
  std::unordered_map<const void*, Regexp> memo;
  return simplify_rec(r, memo);
}

bool matches(const Regexp& r, const Word& w) {
  DerivCtx ctx;
  Regexp t = r;
  for (char c : w) {
    t = derivative(t, c, ctx);
    if (t.kind() == RegexpKind::Null) return false;
  }
  return nullable_rec(t, ctx.nullable);
}

bool is_empty_language(const Regexp& r) {
  switch (r.kind()) {
    case RegexpKind::Null:
      return true;
    case RegexpKind::Empty:
    case RegexpKind::Singleton:
    case RegexpKind::Star:
      return false;
    case RegexpKind::Union:
      return is_empty_language(r.r1()) && is_empty_language(r.r2());
    case RegexpKind::Concat:
      return is_empty_language(r.r1()) || is_empty_language(r.r2());
  }
  return false;
}

namespace {

void enumerate_rec(const Regexp& t, Word& prefix, std::size_t maxlen,
                   std::string_view sigma, DerivCtx& ctx, std::set<Word>& out) {
  if (nullable_rec(t, ctx.nullable)) out.insert(prefix);
  if (prefix.size() == maxlen) return;
  for (char c : sigma) {
    Regexp next = derivative(t, c, ctx);
    if (next.kind() == RegexpKind::Null) continue;
    prefix.push_back(c);
    enumerate_rec(next, prefix, maxlen, sigma, ctx, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> enumerate_regexp_language(const Regexp& r, std::size_t maxlen,
                                         std::string_view sigma) {
  // Walks the prefix tree of sigma^<=maxlen, carrying the derivative, which
  // is exactly "test every word with matches" with shared prefixes.
  std::set<Word> out;
  DerivCtx ctx;
  Word prefix;
  enumerate_rec(r, prefix, maxlen, sigma, ctx, out);
  return out;
}

namespace {

void gen_rec(const Regexp& r, std::mt19937& rng, unsigned max_star_reps, Word& out) {
  switch (r.kind()) {
    case RegexpKind::Null:
      assert(false && "gen_rec on an empty-language branch");
      break;
    case RegexpKind::Empty:
      break;
    case RegexpKind::Singleton:
      out.push_back(r.symbol());
      break;
    case RegexpKind::Union: {
      bool left_dead = is_empty_language(r.r1());
      bool right_dead = is_empty_language(r.r2());
      if (left_dead) {
        gen_rec(r.r2(), rng, max_star_reps, out);
      } else if (right_dead) {
        gen_rec(r.r1(), rng, max_star_reps, out);
      } else if (rng() % 2 == 0) {
        gen_rec(r.r1(), rng, max_star_reps, out);
      } else {
        gen_rec(r.r2(), rng, max_star_reps, out);
      }
      break;
    }
    case RegexpKind::Concat:
      gen_rec(r.r1(), rng, max_star_reps, out);
      gen_rec(r.r2(), rng, max_star_reps, out);
      break;
    case RegexpKind::Star: {
      if (is_empty_language(r.r1())) break;  // only the empty word is reachable
      unsigned reps = rng() % (max_star_reps + 1);
      for (unsigned i = 0; i < reps; ++i) {
        gen_rec(r.r1(), rng, max_star_reps, out);
      }
      break;
    }
  }
}

}  // namespace

Word gen_word(const Regexp& r, std::uint32_t seed, unsigned max_star_reps) {
  if (is_empty_language(r)) {
    throw Error(ErrorCode::EmptyLanguage,
                "cannot generate a word: the language is empty");
  }
  // rng() % n instead of a distribution keeps the stream identical across
  // standard library implementations.
  std::mt19937 rng(seed);
  Word out;
  gen_rec(r, rng, max_star_reps, out);
  return out;
}

namespace {

void alphabet_rec(const Regexp& r, std::string& out) {
  switch (r.kind()) {
    case RegexpKind::Null:
    case RegexpKind::Empty:
      break;
    case RegexpKind::Singleton:
      if (out.find(r.symbol()) == std::string::npos) out.push_back(r.symbol());
      break;
    case RegexpKind::Star:
      alphabet_rec(r.r1(), out);
      break;
    case RegexpKind::Union:
    case RegexpKind::Concat:
      alphabet_rec(r.r1(), out);
      alphabet_rec(r.r2(), out);
      break;
  }
}

}  // namespace

std::string regexp_alphabet(const Regexp& r) {
  std::string out;
  alphabet_rec(r, out);
  return out;
}

bool MatchCache::matches(const Regexp& r, const Word& w) {
  Key key{r.id(), w};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  bool out = gnfakit::matches(r, w);
  cache_.emplace(std::move(key), out);
  return out;
}

namespace {

int precedence(RegexpKind kind) {
  switch (kind) {
    case RegexpKind::Union:
      return 0;
    case RegexpKind::Concat:
      return 1;
    case RegexpKind::Star:
      return 2;
    default:
      return 3;
  }
}

void render_rec(const Regexp& r, int min_prec, std::string& out) {
  bool parens = precedence(r.kind()) < min_prec;
  if (parens) out.push_back('(');
  switch (r.kind()) {
    case RegexpKind::Null:
      out.push_back('~');
      break;
    case RegexpKind::Empty:
      out.push_back('!');
      break;
    case RegexpKind::Singleton:
      out.push_back(r.symbol());
      break;
    case RegexpKind::Union:
      render_rec(r.r1(), 0, out);
      out += " U ";
      render_rec(r.r2(), 1, out);  // right operand parenthesized: left-assoc
      break;
    case RegexpKind::Concat:
      render_rec(r.r1(), 1, out);
      render_rec(r.r2(), 2, out);
      break;
    case RegexpKind::Star:
      render_rec(r.r1(), 2, out);
      out.push_back('*');
      break;
  }
  if (parens) out.push_back(')');
}

}  // namespace

std::string render_regexp(const Regexp& r) {
  std::string out;
  render_rec(r, 0, out);
  return out;
}

}  // namespace gnfakit
