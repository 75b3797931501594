#include "omegat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "omegat/error.hpp"

namespace omegat::expr {

bool RegExpr::nullable() const {
  switch (kind()) {
    case RegKind::empty:
    case RegKind::symbol:
      return false;
    case RegKind::concat:
      return left().nullable() && right().nullable();
    case RegKind::alt:
      return left().nullable() || right().nullable();
    case RegKind::star:
      return true;
  }
  return false;
}

std::size_t TExpr::depth() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < arity(); ++i)
    d = std::max(d, (i == 0 ? left() : right()).depth());
  return d + 1;
}

OmegaTExpr OmegaTExpr::alt(OmegaTExpr l, OmegaTExpr r) {
  OmegaTExpr e;
  e.node_ = std::make_shared<const Node>(
      Node{OmegaKind::alt, {std::move(l), std::move(r)}, {}, {}});
  return e;
}

OmegaTExpr OmegaTExpr::prefix(RegExpr r, OmegaTExpr rest) {
  OmegaTExpr e;
  e.node_ = std::make_shared<const Node>(
      Node{OmegaKind::prefix, {std::move(rest)}, {std::move(r)}, {}});
  return e;
}

OmegaTExpr OmegaTExpr::omega(TExpr body) {
  OmegaTExpr e;
  e.node_ = std::make_shared<const Node>(
      Node{OmegaKind::omega, {}, {}, {std::move(body)}});
  return e;
}

std::size_t OmegaTExpr::size() const {
  switch (kind()) {
    case OmegaKind::alt:
      return 1 + left().size() + right().size();
    case OmegaKind::prefix:
      return 1 + regular().size() + rest().size();
    case OmegaKind::omega:
      return 1 + body().size();
  }
  return 0;
}

bool operator==(const OmegaTExpr& a, const OmegaTExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case OmegaKind::alt:
      return a.left() == b.left() && a.right() == b.right();
    case OmegaKind::prefix:
      return a.regular() == b.regular() && a.rest() == b.rest();
    case OmegaKind::omega:
      return a.body() == b.body();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parsing. The text is first read into an untyped syntax tree and then typed
// into the three expression layers, so that misplaced `^T`/`^w` can be
// reported with the position of the offending operator.

namespace {

enum class SynKind { empty, symbol, concat, plus, star, t, omega };

struct Syn {
  SynKind kind;
  std::size_t pos;
  char letter = 0;
  std::vector<Syn> kids;
};

class Reader {
 public:
  Reader(std::string_view text, const Alphabet* alphabet)
      : text_(text), alphabet_(alphabet) {}

  Syn read() {
    Syn s = sum();
    skip_ws();
    if (at_ < text_.size()) fail("unexpected character '" + std::string(1, text_[at_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, at_); }

  void skip_ws() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
  }

  std::optional<char> peek() {
    skip_ws();
    if (at_ >= text_.size()) return std::nullopt;
    return text_[at_];
  }

  bool starts_primary() {
    auto c = peek();
    return c && (*c == '(' || *c == '0' || std::islower(static_cast<unsigned char>(*c)));
  }

  Syn sum() {
    Syn l = concat();
    while (peek() == '+') {
      std::size_t pos = at_++;
      Syn r = concat();
      l = Syn{SynKind::plus, pos, 0, {std::move(l), std::move(r)}};
    }
    return l;
  }

  Syn concat() {
    Syn l = postfix();
    for (;;) {
      std::size_t pos = at_;
      if (peek() == '.') {
        ++at_;
      } else if (!starts_primary()) {
        break;
      }
      Syn r = postfix();
      l = Syn{SynKind::concat, pos, 0, {std::move(l), std::move(r)}};
    }
    return l;
  }

  Syn postfix() {
    Syn s = primary();
    for (;;) {
      auto c = peek();
      if (c == '*') {
        s = Syn{SynKind::star, at_++, 0, {std::move(s)}};
      } else if (c == '^') {
        std::size_t pos = at_++;
        auto op = peek();
        if (op == 'T') {
          ++at_;
          s = Syn{SynKind::t, pos, 0, {std::move(s)}};
        } else if (op == 'w') {
          ++at_;
          s = Syn{SynKind::omega, pos, 0, {std::move(s)}};
        } else {
          fail("expected 'T' or 'w' after '^'");
        }
      } else {
        return s;
      }
    }
  }

  Syn primary() {
    auto c = peek();
    if (!c) fail("unexpected end of expression");
    std::size_t pos = at_;
    if (*c == '(') {
      ++at_;
      Syn inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++at_;
      return inner;
    }
    if (*c == '0') {
      ++at_;
      return Syn{SynKind::empty, pos, 0, {}};
    }
    if (std::islower(static_cast<unsigned char>(*c))) {
      if (alphabet_ && !alphabet_->contains(*c))
        fail("letter '" + std::string(1, *c) + "' is not in the alphabet");
      ++at_;
      return Syn{SynKind::symbol, pos, *c, {}};
    }
    fail("unexpected character '" + std::string(1, *c) + "'");
  }

  std::string_view text_;
  const Alphabet* alphabet_;
  std::size_t at_ = 0;
};

// Layer of a syntax tree: plain regular, T-regular (has ^T, no ^w), or
// omega level.
enum class Layer { regular, t, omega };

// Position of the first ^T node, if any.
std::optional<std::size_t> first_t(const Syn& s) {
  if (s.kind == SynKind::t) return s.pos;
  for (const auto& k : s.kids)
    if (auto p = first_t(k)) return p;
  return std::nullopt;
}

Layer layer_of(const Syn& s) {
  switch (s.kind) {
    case SynKind::empty:
    case SynKind::symbol:
      return Layer::regular;
    case SynKind::star:
    case SynKind::t: {
      Layer c = layer_of(s.kids[0]);
      if (c == Layer::omega)
        throw ParseError("'^w' may only appear at the top level, not under a postfix operator", s.pos);
      return s.kind == SynKind::t ? Layer::t : c;
    }
    case SynKind::omega: {
      if (layer_of(s.kids[0]) == Layer::omega)
        throw ParseError("nested '^w'", s.pos);
      return Layer::omega;
    }
    case SynKind::concat: {
      Layer l = layer_of(s.kids[0]);
      Layer r = layer_of(s.kids[1]);
      if (l == Layer::omega)
        throw ParseError("an omega expression must come last in a concatenation", s.pos);
      if (r == Layer::omega) {
        if (l == Layer::t)
          throw ParseError("'^T' is only allowed inside an omega scope",
                           *first_t(s.kids[0]));
        return Layer::omega;
      }
      return std::max(l, r);
    }
    case SynKind::plus: {
      Layer l = layer_of(s.kids[0]);
      Layer r = layer_of(s.kids[1]);
      if ((l == Layer::omega) != (r == Layer::omega))
        throw ParseError("cannot sum an omega expression with a finite one", s.pos);
      return std::max(l, r);
    }
  }
  return Layer::regular;
}

RegExpr to_reg(const Syn& s) {
  switch (s.kind) {
    case SynKind::empty:
      return RegExpr::empty();
    case SynKind::symbol:
      return RegExpr::symbol(s.letter);
    case SynKind::concat:
      return RegExpr::concat(to_reg(s.kids[0]), to_reg(s.kids[1]));
    case SynKind::plus:
      return RegExpr::alt(to_reg(s.kids[0]), to_reg(s.kids[1]));
    case SynKind::star:
      return RegExpr::star(to_reg(s.kids[0]));
    case SynKind::t:
      throw ParseError("'^T' is only allowed inside an omega scope", s.pos);
    case SynKind::omega:
      throw ParseError("unexpected '^w'", s.pos);
  }
  throw ParseError("unreachable", s.pos);
}

TExpr to_t(const Syn& s) {
  switch (s.kind) {
    case SynKind::empty:
      return TExpr::empty();
    case SynKind::symbol:
      return TExpr::symbol(s.letter);
    case SynKind::concat:
      return TExpr::concat(to_t(s.kids[0]), to_t(s.kids[1]));
    case SynKind::plus:
      return TExpr::sum(to_t(s.kids[0]), to_t(s.kids[1]));
    case SynKind::star:
      return TExpr::star(to_t(s.kids[0]));
    case SynKind::t:
      return TExpr::t(to_t(s.kids[0]));
    case SynKind::omega:
      throw ParseError("unexpected '^w'", s.pos);
  }
  throw ParseError("unreachable", s.pos);
}

OmegaTExpr to_omega(const Syn& s) {
  switch (s.kind) {
    case SynKind::omega:
      return OmegaTExpr::omega(to_t(s.kids[0]));
    case SynKind::plus:
      return OmegaTExpr::alt(to_omega(s.kids[0]), to_omega(s.kids[1]));
    case SynKind::concat:
      return OmegaTExpr::prefix(to_reg(s.kids[0]), to_omega(s.kids[1]));
    default:
      throw ParseError("expected an omega expression", s.pos);
  }
}

}  // namespace

OmegaTExpr parse_omega_t(std::string_view text, const Alphabet& alphabet) {
  Syn s = Reader(text, &alphabet).read();
  switch (layer_of(s)) {
    case Layer::omega:
      return to_omega(s);
    case Layer::t:
    case Layer::regular:
      throw ParseError("missing omega-closure '^w'", text.size());
  }
  throw ParseError("unreachable", 0);
}

OmegaTExpr parse_omega_t(std::string_view text) {
  return parse_omega_t(text, letters_of(text));
}

TExpr parse_t(std::string_view text) {
  Syn s = Reader(text, nullptr).read();
  if (layer_of(s) == Layer::omega) throw ParseError("unexpected '^w'", 0);
  return to_t(s);
}

RegExpr parse_regular(std::string_view text) {
  Syn s = Reader(text, nullptr).read();
  layer_of(s);
  return to_reg(s);
}

Alphabet letters_of(std::string_view text) {
  Alphabet out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    // `w` directly after `^` is the omega operator, not a letter.
    if (c == 'w' && i > 0) {
      std::size_t j = i;
      while (j > 0 && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
      if (j > 0 && text[j - 1] == '^') continue;
    }
    if (std::islower(static_cast<unsigned char>(c))) out.insert(c);
  }
  return out;
}

namespace {

template <typename Tree>
void collect_letters(const Tree& e, Alphabet& out) {
  if (e.kind() == Tree::Kind::symbol) out.insert(e.letter());
  for (std::size_t i = 0; i < e.arity(); ++i)
    collect_letters(i == 0 ? e.left() : e.right(), out);
}

void collect_letters(const OmegaTExpr& e, Alphabet& out) {
  switch (e.kind()) {
    case OmegaKind::alt:
      collect_letters(e.left(), out);
      collect_letters(e.right(), out);
      break;
    case OmegaKind::prefix:
      collect_letters(e.regular(), out);
      collect_letters(e.rest(), out);
      break;
    case OmegaKind::omega:
      collect_letters(e.body(), out);
      break;
  }
}

}  // namespace

Alphabet letters_of(const OmegaTExpr& e) {
  Alphabet out;
  collect_letters(e, out);
  return out;
}

Alphabet letters_of(const TExpr& e) {
  Alphabet out;
  collect_letters(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing. Binding strength: sum 1 < concat 2 < postfix 3 < atom 4. Both
// binary operators associate to the left, so a right operand of equal
// strength is parenthesised; this keeps parse(to_string(e)) == e.

namespace {

constexpr int kSum = 1;
constexpr int kConcat = 2;
constexpr int kPostfix = 3;
constexpr int kAtom = 4;

std::string wrap_if(bool cond, std::string s) {
  return cond ? "(" + s + ")" : s;
}

template <typename Tree>
int strength(const Tree& e) {
  using K = typename Tree::Kind;
  switch (e.kind()) {
    case K::empty:
    case K::symbol:
      return kAtom;
    case K::concat:
      return kConcat;
    default:
      break;
  }
  if (e.arity() == 2) return kSum;
  return kPostfix;
}

template <typename Tree>
std::string print(const Tree& e, int min_strength) {
  using K = typename Tree::Kind;
  std::string out;
  switch (e.kind()) {
    case K::empty:
      out = "0";
      break;
    case K::symbol:
      out = std::string(1, e.letter());
      break;
    case K::concat:
      out = print(e.left(), kConcat) + print(e.right(), kPostfix);
      break;
    default:
      if (e.arity() == 2) {
        out = print(e.left(), kSum) + "+" + print(e.right(), kConcat);
      } else {
        const bool is_star = e.kind() == K::star;
        out = print(e.child(), kPostfix) + (is_star ? "*" : "^T");
      }
      break;
  }
  return wrap_if(strength(e) < min_strength, out);
}

int strength(const OmegaTExpr& e) {
  switch (e.kind()) {
    case OmegaKind::alt:
      return kSum;
    case OmegaKind::prefix:
      return kConcat;
    case OmegaKind::omega:
      return kPostfix;
  }
  return kAtom;
}

std::string print(const OmegaTExpr& e, int min_strength) {
  std::string out;
  switch (e.kind()) {
    case OmegaKind::alt:
      out = print(e.left(), kSum) + " + " + print(e.right(), kConcat);
      break;
    case OmegaKind::prefix:
      out = print(e.regular(), kConcat) + print(e.rest(), kPostfix);
      break;
    case OmegaKind::omega:
      out = print(e.body(), kPostfix) + "^w";
      break;
  }
  return wrap_if(strength(e) < min_strength, out);
}

}  // namespace

std::string to_string(const RegExpr& e) { return print(e, kSum); }
std::string to_string(const TExpr& e) { return print(e, kSum); }
std::string to_string(const OmegaTExpr& e) { return print(e, kSum); }

TExpr substitute_t_with_star(const TExpr& e) {
  switch (e.kind()) {
    case TKind::empty:
    case TKind::symbol:
      return e;
    case TKind::concat:
      return TExpr::concat(substitute_t_with_star(e.left()), substitute_t_with_star(e.right()));
    case TKind::sum:
      return TExpr::sum(substitute_t_with_star(e.left()), substitute_t_with_star(e.right()));
    case TKind::star:
    case TKind::t:
      return TExpr::star(substitute_t_with_star(e.child()));
  }
  return e;
}

OmegaTExpr substitute_t_with_star(const OmegaTExpr& e) {
  switch (e.kind()) {
    case OmegaKind::alt:
      return OmegaTExpr::alt(substitute_t_with_star(e.left()), substitute_t_with_star(e.right()));
    case OmegaKind::prefix:
      return OmegaTExpr::prefix(e.regular(), substitute_t_with_star(e.rest()));
    case OmegaKind::omega:
      return OmegaTExpr::omega(substitute_t_with_star(e.body()));
  }
  return e;
}

RegExpr to_regular(const TExpr& e) {
  switch (e.kind()) {
    case TKind::empty:
      return RegExpr::empty();
    case TKind::symbol:
      return RegExpr::symbol(e.letter());
    case TKind::concat:
      return RegExpr::concat(to_regular(e.left()), to_regular(e.right()));
    case TKind::sum:
      return RegExpr::alt(to_regular(e.left()), to_regular(e.right()));
    case TKind::star:
      return RegExpr::star(to_regular(e.child()));
    case TKind::t:
      throw PreconditionError("to_regular: expression contains a T node");
  }
  throw PreconditionError("to_regular: unknown node");
}

bool contains_t(const TExpr& e) {
  if (e.kind() == TKind::t) return true;
  for (std::size_t i = 0; i < e.arity(); ++i)
    if (contains_t(i == 0 ? e.left() : e.right())) return true;
  return false;
}

bool contains_t(const OmegaTExpr& e) {
  switch (e.kind()) {
    case OmegaKind::alt:
      return contains_t(e.left()) || contains_t(e.right());
    case OmegaKind::prefix:
      return contains_t(e.rest());
    case OmegaKind::omega:
      return contains_t(e.body());
  }
  return false;
}

namespace {

void collect_t_args(const TExpr& e, std::vector<TExpr>& out) {
  if (e.kind() == TKind::t) out.push_back(e.child());
  for (std::size_t i = 0; i < e.arity(); ++i) collect_t_args(i == 0 ? e.left() : e.right(), out);
}

void collect_t_args(const OmegaTExpr& e, std::vector<TExpr>& out) {
  switch (e.kind()) {
    case OmegaKind::alt:
      collect_t_args(e.left(), out);
      collect_t_args(e.right(), out);
      break;
    case OmegaKind::prefix:
      collect_t_args(e.rest(), out);
      break;
    case OmegaKind::omega:
      collect_t_args(e.body(), out);
      break;
  }
}

}  // namespace

std::vector<TExpr> t_arguments(const OmegaTExpr& e) {
  std::vector<TExpr> out;
  collect_t_args(e, out);
  return out;
}

}  // namespace omegat::expr
