#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace omegat::expr {

using Alphabet = std::set<char>;

/// Immutable binary tree over letters, shared between RegExpr and TExpr.
/// Nodes are reference counted so copies are cheap and sub-trees may be
/// shared by several parents.
template <typename KindT>
class LetterTree {
 public:
  using Kind = KindT;

  Kind kind() const { return node_->kind; }
  char letter() const { return node_->letter; }
  const LetterTree& left() const { return node_->kids.at(0); }
  const LetterTree& right() const { return node_->kids.at(1); }
  const LetterTree& child() const { return node_->kids.at(0); }
  std::size_t arity() const { return node_->kids.size(); }

  /// Number of nodes in the tree.
  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& k : node_->kids) n += k.size();
    return n;
  }

  friend bool operator==(const LetterTree& a, const LetterTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.letter() != b.letter() ||
        a.node_->kids.size() != b.node_->kids.size())
      return false;
    for (std::size_t i = 0; i < a.node_->kids.size(); ++i)
      if (!(a.node_->kids[i] == b.node_->kids[i])) return false;
    return true;
  }

 protected:
  struct Node {
    Kind kind;
    char letter = 0;
    std::vector<LetterTree> kids;
  };

  static LetterTree make(Kind k, char letter, std::vector<LetterTree> kids) {
    LetterTree t;
    t.node_ = std::make_shared<const Node>(Node{k, letter, std::move(kids)});
    return t;
  }

 private:
  std::shared_ptr<const Node> node_;
};

enum class RegKind { empty, symbol, concat, alt, star };

/// Plain regular expression: 0 | a | R.R | R+R | R*.
class RegExpr : public LetterTree<RegKind> {
 public:
  static RegExpr empty() { return wrap(make(RegKind::empty, 0, {})); }
  static RegExpr symbol(char a) { return wrap(make(RegKind::symbol, a, {})); }
  static RegExpr concat(RegExpr l, RegExpr r) {
    return wrap(make(RegKind::concat, 0, {std::move(l), std::move(r)}));
  }
  static RegExpr alt(RegExpr l, RegExpr r) {
    return wrap(make(RegKind::alt, 0, {std::move(l), std::move(r)}));
  }
  static RegExpr star(RegExpr c) {
    return wrap(make(RegKind::star, 0, {std::move(c)}));
  }

  RegExpr left() const { return RegExpr(LetterTree::left()); }
  RegExpr right() const { return RegExpr(LetterTree::right()); }
  RegExpr child() const { return RegExpr(LetterTree::child()); }

  /// True when the empty word belongs to the language.
  bool nullable() const;

 private:
  RegExpr() = default;
  explicit RegExpr(LetterTree t) : LetterTree(std::move(t)) {}
  static RegExpr wrap(LetterTree t) { return RegExpr(std::move(t)); }
};

enum class TKind { empty, symbol, concat, sum, star, t };

/// T-regular expression over word sequences. `sum` is the shuffling `+` on
/// sequences and is never identified with language union.
class TExpr : public LetterTree<TKind> {
 public:
  static TExpr empty() { return wrap(make(TKind::empty, 0, {})); }
  static TExpr symbol(char a) { return wrap(make(TKind::symbol, a, {})); }
  static TExpr concat(TExpr l, TExpr r) {
    return wrap(make(TKind::concat, 0, {std::move(l), std::move(r)}));
  }
  static TExpr sum(TExpr l, TExpr r) {
    return wrap(make(TKind::sum, 0, {std::move(l), std::move(r)}));
  }
  static TExpr star(TExpr c) { return wrap(make(TKind::star, 0, {std::move(c)})); }
  static TExpr t(TExpr c) { return wrap(make(TKind::t, 0, {std::move(c)})); }

  TExpr left() const { return TExpr(LetterTree::left()); }
  TExpr right() const { return TExpr(LetterTree::right()); }
  TExpr child() const { return TExpr(LetterTree::child()); }

  /// Tree depth; a leaf has depth 1.
  std::size_t depth() const;

 private:
  TExpr() = default;
  explicit TExpr(LetterTree t) : LetterTree(std::move(t)) {}
  static TExpr wrap(LetterTree t) { return TExpr(std::move(t)); }
};

enum class OmegaKind { alt, prefix, omega };

/// omegaT-regular expression: E + E | R . E | e^w.
class OmegaTExpr {
 public:
  static OmegaTExpr alt(OmegaTExpr l, OmegaTExpr r);
  static OmegaTExpr prefix(RegExpr r, OmegaTExpr e);
  static OmegaTExpr omega(TExpr e);

  OmegaKind kind() const { return node_->kind; }
  const OmegaTExpr& left() const { return node_->kids.at(0); }
  const OmegaTExpr& right() const { return node_->kids.at(1); }
  /// Continuation of a prefix node.
  const OmegaTExpr& rest() const { return node_->kids.at(0); }
  const RegExpr& regular() const { return node_->regular.at(0); }
  const TExpr& body() const { return node_->body.at(0); }

  std::size_t size() const;

  friend bool operator==(const OmegaTExpr& a, const OmegaTExpr& b);

 private:
  struct Node {
    OmegaKind kind;
    std::vector<OmegaTExpr> kids;
    std::vector<RegExpr> regular;  // prefix only
    std::vector<TExpr> body;       // omega only
  };
  OmegaTExpr() = default;
  std::shared_ptr<const Node> node_;
};

/// Parses the ASCII grammar: `0`, lowercase letters, juxtaposition or `.`,
/// `+`, postfix `*`, `^T` and `^w`, parentheses. Letters must belong to
/// `alphabet`. Throws ParseError.
OmegaTExpr parse_omega_t(std::string_view text, const Alphabet& alphabet);

/// As above, with the alphabet taken to be the letters occurring in `text`.
OmegaTExpr parse_omega_t(std::string_view text);

/// Parses a T-expression (no `^w`). Used by tests and tooling.
TExpr parse_t(std::string_view text);

/// Parses a plain regular expression (no `^T`, no `^w`).
RegExpr parse_regular(std::string_view text);

/// Letters occurring in an expression.
Alphabet letters_of(std::string_view text);
Alphabet letters_of(const OmegaTExpr& e);
Alphabet letters_of(const TExpr& e);

std::string to_string(const RegExpr& e);
std::string to_string(const TExpr& e);
std::string to_string(const OmegaTExpr& e);

/// Replaces every T node by a star node.
TExpr substitute_t_with_star(const TExpr& e);
OmegaTExpr substitute_t_with_star(const OmegaTExpr& e);

/// Converts a T-free T-expression to a regular expression (sum -> union).
/// Throws PreconditionError when a T node is present.
RegExpr to_regular(const TExpr& e);

bool contains_t(const TExpr& e);
bool contains_t(const OmegaTExpr& e);

/// Every sub-expression `e1` occurring as `e1^T`, in pre-order.
std::vector<TExpr> t_arguments(const OmegaTExpr& e);

}  // namespace omegat::expr
