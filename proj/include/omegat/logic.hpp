#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "omegat/expr.hpp"

namespace omegat::logic {

/// s^succ(var)
struct Term {
  std::string var;
  unsigned succ = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

inline Term var(std::string name) { return Term{std::move(name), 0}; }
inline Term succ(Term t) {
  ++t.succ;
  return t;
}

enum class Kind {
  // S1S+U core and derived connectives
  in_pred,       // t in P_a
  in_set,        // t in X
  negation,
  disjunction,
  conjunction,
  implication,
  exists1,
  forall1,
  exists2,
  forall2,
  unbounding,
  bounding,
  exists_fin,
  exists_omega,
  // macros
  truth,
  falsity,
  equal,            // t1 = t2
  less,             // t1 < t2
  greater,          // t1 > t2
  leq,              // t1 <= t2
  first,            // t is the first position
  subset,           // X sub Y
  proper_subset,    // X psub Y
  in_interval,      // t in {t1..t2}
  subset_interval,  // X sub {t1..t2}
  bounded_by,       // X sub {1..t}
  min_greater,      // min X > t
  in_diff,          // t in Z \ Y
  is_regex,         // isE_e(t1, t2)
  begins,           // beginsE_e(t)
  block,            // block_e(X)
  blockset,         // blockset_e(Y)
};

bool is_macro(Kind k);

class Formula {
 public:
  static Formula in_pred(Term t, char letter);
  static Formula in_set(Term t, std::string set);
  static Formula negation(Formula f);
  static Formula disjunction(Formula l, Formula r);
  static Formula conjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula exists1(std::string v, Formula body);
  static Formula forall1(std::string v, Formula body);
  static Formula exists2(std::string v, Formula body);
  static Formula forall2(std::string v, Formula body);
  static Formula unbounding(std::string v, Formula body);
  static Formula bounding(std::string v, Formula body);
  static Formula exists_fin(std::string v, Formula body);
  static Formula exists_omega(std::string v, Formula body);

  static Formula truth();
  static Formula falsity();
  static Formula equal(Term a, Term b);
  static Formula less(Term a, Term b);
  static Formula greater(Term a, Term b);
  static Formula leq(Term a, Term b);
  static Formula first(Term t);
  static Formula subset(std::string x, std::string y);
  static Formula proper_subset(std::string x, std::string y);
  static Formula in_interval(Term t, Term lo, Term hi);
  static Formula subset_interval(std::string x, Term lo, Term hi);
  static Formula bounded_by(std::string x, Term hi);
  static Formula min_greater(std::string x, Term t);
  static Formula in_diff(Term t, std::string z, std::string y);
  static Formula is_regex(expr::RegExpr e, Term from, Term to);
  static Formula begins(expr::RegExpr e, Term t);
  static Formula block(expr::RegExpr e, std::string x);
  static Formula blockset(expr::RegExpr e, std::string y);

  Kind kind() const { return node_->kind; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::vector<std::string>& sets() const { return node_->sets; }
  /// Bound variable of a quantifier.
  const std::string& bound() const { return node_->bound; }
  char letter() const { return node_->letter; }
  const expr::RegExpr& regex() const { return node_->regex.at(0); }
  const std::vector<Formula>& kids() const { return node_->kids; }

  /// Number of AST nodes; macros count as one.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::vector<Term> terms;
    std::vector<std::string> sets;
    std::string bound;
    char letter = 0;
    std::vector<expr::RegExpr> regex;
    std::vector<Formula> kids;
  };
  static Formula make(Node n);
  static Formula binary(Kind k, Formula l, Formula r);
  static Formula binder(Kind k, std::string v, Formula body);
  Formula() = default;
  std::shared_ptr<const Node> node_;
};

struct FreeVars {
  std::set<std::string> first_order;
  std::set<std::string> second_order;
  std::set<char> predicates;  // letters a with P_a occurring

  /// Closed modulo the letter predicates.
  bool closed() const { return first_order.empty() && second_order.empty(); }
};

FreeVars free_vars(const Formula& f);

/// Count of nodes of kind `k`, not looking inside folded macros.
std::size_t count_kind(const Formula& f, Kind k);

/// Replaces a macro root by its definition, one level deep. Fresh bound
/// variables avoid every name occurring in `f`. Non-macros are returned
/// unchanged.
Formula unfold(const Formula& f);
/// Unfolds every macro until only core nodes and derived connectives remain.
Formula expand_macros(const Formula& f);

struct PrintOptions {
  bool ascii = false;
  bool expand = false;
};

std::string to_string(const Formula& f, PrintOptions options = {});

/// isE_e(x, y): the factor from x to y (inclusive) belongs to L(e). Bound
/// variables avoid `x`, `y` and every name in `avoid`.
Formula is_regexp_formula(const expr::RegExpr& e, Term x, Term y,
                          const std::set<std::string>& avoid = {});

Formula block_formula(const expr::RegExpr& e, const std::string& x);
Formula blockset_formula(const expr::RegExpr& e, const std::string& y);
Formula t_condition(const expr::RegExpr& e);

/// Conjunction of the S1S encoding of E with T replaced by star and one
/// Tcondition per T argument (pre-order). A schema: the composition is not
/// claimed to be language equivalent to E.
Formula emit_phi(const expr::OmegaTExpr& e);

/// emit_phi printed under a header comment that marks it as a schema.
std::string emit_phi_text(const expr::OmegaTExpr& e, PrintOptions options = {});

}  // namespace omegat::logic
