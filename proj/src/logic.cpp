#include "omegat/logic.hpp"

#include <functional>

#include "omegat/error.hpp"

namespace omegat::logic {

using expr::RegExpr;
using expr::RegKind;

bool is_macro(Kind k) { return k == Kind::bounding || k == Kind::exists_fin ||
                               k == Kind::exists_omega || k >= Kind::truth; }

Formula Formula::make(Node n) {
  Formula f;
  f.node_ = std::make_shared<const Node>(std::move(n));
  return f;
}

Formula Formula::in_pred(Term t, char letter) {
  return make({Kind::in_pred, {std::move(t)}, {}, {}, letter, {}, {}});
}
Formula Formula::in_set(Term t, std::string set) {
  return make({Kind::in_set, {std::move(t)}, {std::move(set)}, {}, 0, {}, {}});
}
Formula Formula::negation(Formula f) { return make({Kind::negation, {}, {}, {}, 0, {}, {std::move(f)}}); }

Formula Formula::disjunction(Formula l, Formula r) { return binary(Kind::disjunction, l, r); }
Formula Formula::conjunction(Formula l, Formula r) { return binary(Kind::conjunction, l, r); }
Formula Formula::implication(Formula l, Formula r) { return binary(Kind::implication, l, r); }
Formula Formula::exists1(std::string v, Formula b) { return binder(Kind::exists1, v, b); }
Formula Formula::forall1(std::string v, Formula b) { return binder(Kind::forall1, v, b); }
Formula Formula::exists2(std::string v, Formula b) { return binder(Kind::exists2, v, b); }
Formula Formula::forall2(std::string v, Formula b) { return binder(Kind::forall2, v, b); }
Formula Formula::unbounding(std::string v, Formula b) { return binder(Kind::unbounding, v, b); }
Formula Formula::bounding(std::string v, Formula b) { return binder(Kind::bounding, v, b); }
Formula Formula::exists_fin(std::string v, Formula b) { return binder(Kind::exists_fin, v, b); }
Formula Formula::exists_omega(std::string v, Formula b) { return binder(Kind::exists_omega, v, b); }

Formula Formula::truth() { return make({Kind::truth, {}, {}, {}, 0, {}, {}}); }
Formula Formula::falsity() { return make({Kind::falsity, {}, {}, {}, 0, {}, {}}); }

Formula Formula::equal(Term a, Term b) {
  // s(a) = s(b) iff a = b
  const unsigned common = std::min(a.succ, b.succ);
  a.succ -= common;
  b.succ -= common;
  return make({Kind::equal, {std::move(a), std::move(b)}, {}, {}, 0, {}, {}});
}
Formula Formula::less(Term a, Term b) { return make({Kind::less, {a, b}, {}, {}, 0, {}, {}}); }
Formula Formula::greater(Term a, Term b) { return make({Kind::greater, {a, b}, {}, {}, 0, {}, {}}); }
Formula Formula::leq(Term a, Term b) { return make({Kind::leq, {a, b}, {}, {}, 0, {}, {}}); }
Formula Formula::first(Term t) { return make({Kind::first, {t}, {}, {}, 0, {}, {}}); }
Formula Formula::subset(std::string x, std::string y) {
  return make({Kind::subset, {}, {std::move(x), std::move(y)}, {}, 0, {}, {}});
}
Formula Formula::proper_subset(std::string x, std::string y) {
  return make({Kind::proper_subset, {}, {std::move(x), std::move(y)}, {}, 0, {}, {}});
}
Formula Formula::in_interval(Term t, Term lo, Term hi) {
  return make({Kind::in_interval, {t, lo, hi}, {}, {}, 0, {}, {}});
}
Formula Formula::subset_interval(std::string x, Term lo, Term hi) {
  return make({Kind::subset_interval, {lo, hi}, {std::move(x)}, {}, 0, {}, {}});
}
Formula Formula::bounded_by(std::string x, Term hi) {
  return make({Kind::bounded_by, {hi}, {std::move(x)}, {}, 0, {}, {}});
}
Formula Formula::min_greater(std::string x, Term t) {
  return make({Kind::min_greater, {t}, {std::move(x)}, {}, 0, {}, {}});
}
Formula Formula::in_diff(Term t, std::string z, std::string y) {
  return make({Kind::in_diff, {t}, {std::move(z), std::move(y)}, {}, 0, {}, {}});
}
Formula Formula::is_regex(RegExpr e, Term from, Term to) {
  return make({Kind::is_regex, {from, to}, {}, {}, 0, {std::move(e)}, {}});
}
Formula Formula::begins(RegExpr e, Term t) {
  return make({Kind::begins, {t}, {}, {}, 0, {std::move(e)}, {}});
}
Formula Formula::block(RegExpr e, std::string x) {
  return make({Kind::block, {}, {std::move(x)}, {}, 0, {std::move(e)}, {}});
}
Formula Formula::blockset(RegExpr e, std::string y) {
  return make({Kind::blockset, {}, {std::move(y)}, {}, 0, {std::move(e)}, {}});
}

Formula Formula::binary(Kind k, Formula l, Formula r) {
  return make({k, {}, {}, {}, 0, {}, {std::move(l), std::move(r)}});
}

Formula Formula::binder(Kind k, std::string v, Formula body) {
  if (v.empty()) throw PreconditionError("quantified variable needs a name");
  return make({k, {}, {}, std::move(v), 0, {}, {std::move(body)}});
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& k : kids()) n += k.size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.terms() != b.terms() || a.sets() != b.sets() ||
      a.bound() != b.bound() || a.letter() != b.letter() || a.node_->regex != b.node_->regex)
    return false;
  return a.kids() == b.kids();
}

// ---------------------------------------------------------------------------

namespace {

bool binds_first_order(Kind k) {
  return k == Kind::exists1 || k == Kind::forall1 || k == Kind::exists_omega;
}

bool binds_second_order(Kind k) {
  return k == Kind::exists2 || k == Kind::forall2 || k == Kind::unbounding ||
         k == Kind::bounding || k == Kind::exists_fin;
}

bool is_binder(Kind k) { return binds_first_order(k) || binds_second_order(k); }

bool is_binary(Kind k) {
  return k == Kind::disjunction || k == Kind::conjunction || k == Kind::implication;
}

void collect_free(const Formula& f, std::set<std::string>& bound1, std::set<std::string>& bound2,
                  FreeVars& out) {
  for (const auto& t : f.terms())
    if (!bound1.contains(t.var)) out.first_order.insert(t.var);
  for (const auto& s : f.sets())
    if (!bound2.contains(s)) out.second_order.insert(s);
  if (f.kind() == Kind::in_pred) out.predicates.insert(f.letter());
  if (is_binder(f.kind())) {
    auto& scope = binds_first_order(f.kind()) ? bound1 : bound2;
    const bool fresh = scope.insert(f.bound()).second;
    collect_free(f.kids()[0], bound1, bound2, out);
    if (fresh) scope.erase(f.bound());
    return;
  }
  for (const auto& k : f.kids()) collect_free(k, bound1, bound2, out);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) out.insert(t.var);
  for (const auto& s : f.sets()) out.insert(s);
  if (!f.bound().empty()) out.insert(f.bound());
  for (const auto& k : f.kids()) collect_names(k, out);
}

}  // namespace

FreeVars free_vars(const Formula& f) {
  FreeVars out;
  std::set<std::string> b1, b2;
  collect_free(f, b1, b2, out);
  return out;
}

std::size_t count_kind(const Formula& f, Kind k) {
  std::size_t n = f.kind() == k ? 1 : 0;
  for (const auto& c : f.kids()) n += count_kind(c, k);
  return n;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

/// Hands out variable names not in `taken`, preferring the given base name.
class Names {
 public:
  explicit Names(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (unsigned i = 1; taken_.contains(name); ++i) name = base + std::to_string(i);
    taken_.insert(name);
    return name;
  }

 private:
  std::set<std::string> taken_;
};

using F = Formula;

F conj(std::initializer_list<F> fs) {
  auto it = fs.begin();
  F out = *it++;
  for (; it != fs.end(); ++it) out = F::conjunction(out, *it);
  return out;
}

// For u < v consecutive in X, the factor [u, v) matches e.
F consecutive_factors(const std::string& x, const std::function<F(Term, Term)>& factor,
                      Names& names) {
  const std::string u = names.fresh("u"), v = names.fresh("v"), w = names.fresh("w");
  const F between = F::exists1(
      w, conj({F::in_set(var(w), x), F::less(var(u), var(w)), F::less(var(w), var(v))}));
  return F::forall1(
      u, F::forall1(v, F::implication(conj({F::in_set(var(u), x), F::in_set(var(v), x),
                                            F::less(var(u), var(v)), F::negation(between)}),
                                      factor(var(u), var(v)))));
}

// The factor [a, b) (half open) belongs to L(e).
F factor_formula(const RegExpr& e, const Term& a, const Term& b, Names& names) {
  switch (e.kind()) {
    case RegKind::empty:
      return F::falsity();
    case RegKind::symbol:
      return F::conjunction(F::in_pred(a, e.letter()), F::equal(succ(a), b));
    case RegKind::concat: {
      const std::string z = names.fresh("z");
      return F::exists1(z, conj({F::leq(a, var(z)), F::leq(var(z), b),
                                 factor_formula(e.left(), a, var(z), names),
                                 factor_formula(e.right(), var(z), b, names)}));
    }
    case RegKind::alt:
      return F::disjunction(factor_formula(e.left(), a, b, names),
                            factor_formula(e.right(), a, b, names));
    case RegKind::star: {
      const std::string x = names.fresh("X");
      const RegExpr body = e.child();
      const F chain = consecutive_factors(
          x, [&](Term u, Term v) { return factor_formula(body, u, v, names); }, names);
      return F::disjunction(
          F::equal(a, b),
          F::exists2(x, conj({F::in_set(a, x), F::in_set(b, x), F::subset_interval(x, a, b),
                              chain})));
    }
  }
  throw InternalError("unknown regular expression node");
}

std::set<std::string> with(std::set<std::string> s, std::initializer_list<std::string> more) {
  s.insert(more.begin(), more.end());
  return s;
}

F block_with(const RegExpr& e, const std::string& x, Names& names) {
  const std::string y = names.fresh("y"), z = names.fresh("z"), p = names.fresh("x");
  const F members = F::forall1(
      p, F::implication(F::conjunction(F::in_interval(var(p), var(y), var(z)), F::begins(e, var(p))),
                        F::in_set(var(p), x)));
  return F::exists1(
      y, F::exists1(z, conj({F::is_regex(RegExpr::star(e), var(y), var(z)),
                             F::subset_interval(x, var(y), var(z)), members})));
}

F blockset_with(const RegExpr& e, const std::string& y, Names& names) {
  const std::string p = names.fresh("y"), x = names.fresh("X");
  const F covered = F::forall1(
      p, F::implication(F::in_set(var(p), y),
                        F::exists_fin(x, conj({F::block(e, x), F::subset(x, y),
                                               F::in_set(var(p), x)}))));
  const F infinitely = F::forall1(
      p, F::exists_fin(x, conj({F::block(e, x), F::subset(x, y), F::min_greater(x, var(p))})));
  const F bounded = F::bounding(x, F::conjunction(F::subset(x, y), F::block(e, x)));
  return conj({covered, infinitely, bounded});
}

}  // namespace

Formula is_regexp_formula(const RegExpr& e, Term x, Term y, const std::set<std::string>& avoid) {
  if (x == y) throw PreconditionError("is_regexp_formula needs two distinct positions");
  Names names(with(avoid, {x.var, y.var}));
  return factor_formula(e, x, succ(y), names);
}

Formula block_formula(const RegExpr& e, const std::string& x) {
  Names names({x});
  return block_with(e, x, names);
}

Formula blockset_formula(const RegExpr& e, const std::string& y) {
  Names names({y});
  return blockset_with(e, y, names);
}

Formula t_condition(const RegExpr& e) {
  const std::string y = "Y", z = "Z", x = "x";
  return F::forall2(
      y, F::implication(F::blockset(e, y),
                        F::exists2(z, conj({F::blockset(e, z), F::proper_subset(y, z),
                                            F::exists_omega(x, F::in_diff(var(x), z, y))}))));
}

// ---------------------------------------------------------------------------

namespace {

// The suffix starting at `at` belongs to L(e), e omega-regular.
F suffix_formula(const expr::OmegaTExpr& e, const Term& at, Names& names) {
  using expr::OmegaKind;
  switch (e.kind()) {
    case OmegaKind::alt:
      return F::disjunction(suffix_formula(e.left(), at, names),
                            suffix_formula(e.right(), at, names));
    case OmegaKind::prefix: {
      const std::string y = names.fresh("y");
      return F::exists1(y, conj({F::leq(at, var(y)), factor_formula(e.regular(), at, var(y), names),
                                 suffix_formula(e.rest(), var(y), names)}));
    }
    case OmegaKind::omega: {
      const RegExpr body = expr::to_regular(e.body());
      const std::string x = names.fresh("X"), y = names.fresh("y"), z = names.fresh("z");
      const F starts_here = F::forall1(y, F::implication(F::in_set(var(y), x), F::leq(at, var(y))));
      const F infinite = F::exists_omega(z, F::in_set(var(z), x));
      const F chain = consecutive_factors(
          x, [&](Term u, Term v) { return factor_formula(body, u, v, names); }, names);
      return F::exists2(x, conj({F::in_set(at, x), starts_here, infinite, chain}));
    }
  }
  throw InternalError("unknown omega expression node");
}

}  // namespace

Formula emit_phi(const expr::OmegaTExpr& e) {
  const expr::OmegaTExpr starred = expr::substitute_t_with_star(e);
  Names names({});
  const std::string x = names.fresh("x");
  F phi = F::exists1(x, F::conjunction(F::first(var(x)), suffix_formula(starred, var(x), names)));
  for (const auto& arg : expr::t_arguments(e))
    phi = F::conjunction(phi, t_condition(expr::to_regular(expr::substitute_t_with_star(arg))));
  return phi;
}

std::string emit_phi_text(const expr::OmegaTExpr& e, PrintOptions options) {
  const auto args = expr::t_arguments(e);
  std::string out = "# schema: S1S encoding of " + expr::to_string(expr::substitute_t_with_star(e)) +
                    " conjoined with " + std::to_string(args.size()) +
                    " Tcondition formula(s); not asserted equivalent to " + expr::to_string(e) +
                    "\n";
  return out + to_string(emit_phi(e), options) + "\n";
}

// ---------------------------------------------------------------------------
// Macro unfolding

Formula unfold(const Formula& f) {
  if (!is_macro(f.kind())) return f;
  std::set<std::string> taken;
  collect_names(f, taken);
  Names names(taken);
  const auto& t = f.terms();
  const auto& s = f.sets();
  auto all_members = [&](const std::string& x, const std::function<F(Term)>& then) {
    const std::string w = names.fresh("w");
    return F::forall1(w, F::implication(F::in_set(var(w), x), then(var(w))));
  };
  switch (f.kind()) {
    case Kind::bounding:
      return F::negation(F::unbounding(f.bound(), f.kids()[0]));
    case Kind::exists_fin: {
      const std::string y = names.fresh("y");
      return F::exists2(f.bound(), F::conjunction(f.kids()[0],
                                                  F::exists1(y, F::bounded_by(f.bound(), var(y)))));
    }
    case Kind::exists_omega: {
      const std::string y = names.fresh("y");
      return F::forall1(y, F::exists1(f.bound(), F::conjunction(F::greater(var(f.bound()), var(y)),
                                                                f.kids()[0])));
    }
    case Kind::truth: {
      const std::string x = names.fresh("X"), w = names.fresh("w");
      return F::forall2(x, F::forall1(w, F::disjunction(F::in_set(var(w), x),
                                                        F::negation(F::in_set(var(w), x)))));
    }
    case Kind::falsity:
      return F::negation(F::truth());
    case Kind::equal: {
      const std::string x = names.fresh("X");
      return F::forall2(x, F::implication(F::in_set(t[0], x), F::in_set(t[1], x)));
    }
    case Kind::less: {
      const std::string x = names.fresh("X"), w = names.fresh("w");
      const F closed = F::forall1(w, F::implication(F::in_set(var(w), x), F::in_set(succ(var(w)), x)));
      return F::forall2(
          x, F::implication(F::conjunction(F::in_set(succ(t[0]), x), closed), F::in_set(t[1], x)));
    }
    case Kind::greater:
      return F::less(t[1], t[0]);
    case Kind::leq:
      return F::disjunction(F::less(t[0], t[1]), F::equal(t[0], t[1]));
    case Kind::first: {
      const std::string w = names.fresh("w");
      return F::forall1(w, F::leq(t[0], var(w)));
    }
    case Kind::subset:
      return all_members(s[0], [&](Term w) { return F::in_set(w, s[1]); });
    case Kind::proper_subset: {
      const std::string w = names.fresh("w");
      return F::conjunction(
          F::subset(s[0], s[1]),
          F::exists1(w, F::conjunction(F::in_set(var(w), s[1]), F::negation(F::in_set(var(w), s[0])))));
    }
    case Kind::in_interval:
      return F::conjunction(F::leq(t[1], t[0]), F::leq(t[0], t[2]));
    case Kind::subset_interval:
      return all_members(s[0], [&](Term w) { return F::in_interval(w, t[0], t[1]); });
    case Kind::bounded_by:
      return all_members(s[0], [&](Term w) { return F::leq(w, t[0]); });
    case Kind::min_greater:
      return all_members(s[0], [&](Term w) { return F::greater(w, t[0]); });
    case Kind::in_diff:
      return F::conjunction(F::in_set(t[0], s[0]), F::negation(F::in_set(t[0], s[1])));
    case Kind::is_regex:
      return factor_formula(f.regex(), t[0], succ(t[1]), names);
    case Kind::begins: {
      const std::string y = names.fresh("y");
      return F::exists1(y, F::is_regex(f.regex(), t[0], var(y)));
    }
    case Kind::block:
      return block_with(f.regex(), s[0], names);
    case Kind::blockset:
      return blockset_with(f.regex(), s[0], names);
    default:
      return f;
  }
}

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
  switch (f.kind()) {
    case Kind::negation:
      return F::negation(kids[0]);
    case Kind::disjunction:
      return F::disjunction(kids[0], kids[1]);
    case Kind::conjunction:
      return F::conjunction(kids[0], kids[1]);
    case Kind::implication:
      return F::implication(kids[0], kids[1]);
    case Kind::exists1:
      return F::exists1(f.bound(), kids[0]);
    case Kind::forall1:
      return F::forall1(f.bound(), kids[0]);
    case Kind::exists2:
      return F::exists2(f.bound(), kids[0]);
    case Kind::forall2:
      return F::forall2(f.bound(), kids[0]);
    case Kind::unbounding:
      return F::unbounding(f.bound(), kids[0]);
    default:
      return f;
  }
}

}  // namespace

Formula expand_macros(const Formula& f) {
  if (is_macro(f.kind())) return expand_macros(unfold(f));
  if (f.kids().empty()) return f;
  std::vector<Formula> kids;
  for (const auto& k : f.kids()) kids.push_back(expand_macros(k));
  return rebuild(f, std::move(kids));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

struct Glyphs {
  const char *in, *neg, *conj, *disj, *impl, *ex, *all, *ex_fin, *ex_omega, *sub, *psub, *minus,
      *le, *dots, *top, *bot;
};

constexpr Glyphs kUtf8{"∈", "¬", "∧", "∨", "→", "∃", "∀", "∃_fin ", "∃^ω ", "⊆", "⊊", "∖", "≤",
                       ", …, ", "⊤", "⊥"};
constexpr Glyphs kAscii{"in", "~", "&", "|", "->", "E ", "A ", "E_fin ", "E^w ", "sub", "psub", "\\",
                        "<=", "..", "true", "false"};

class Printer {
 public:
  explicit Printer(bool ascii) : g_(ascii ? kAscii : kUtf8) {}

  std::string print(const Formula& f) {
    const auto& t = f.terms();
    const auto& s = f.sets();
    const std::string in = std::string(" ") + g_.in + " ";
    switch (f.kind()) {
      case Kind::in_pred:
        return term(t[0]) + in + "P_" + f.letter();
      case Kind::in_set:
        return term(t[0]) + in + s[0];
      case Kind::negation:
        return g_.neg + operand_of_negation(f.kids()[0]);
      case Kind::disjunction:
      case Kind::conjunction:
      case Kind::implication:
        return chain(f);
      case Kind::exists1:
      case Kind::exists2:
        return quant(std::string(g_.ex), f);
      case Kind::forall1:
      case Kind::forall2:
        return quant(std::string(g_.all), f);
      case Kind::unbounding:
        return quant("U ", f);
      case Kind::bounding:
        return quant("B ", f);
      case Kind::exists_fin:
        return quant(g_.ex_fin, f);
      case Kind::exists_omega:
        return quant(g_.ex_omega, f);
      case Kind::truth:
        return g_.top;
      case Kind::falsity:
        return g_.bot;
      case Kind::equal:
        return term(t[0]) + " = " + term(t[1]);
      case Kind::less:
        return term(t[0]) + " < " + term(t[1]);
      case Kind::greater:
        return term(t[0]) + " > " + term(t[1]);
      case Kind::leq:
        return term(t[0]) + " " + g_.le + " " + term(t[1]);
      case Kind::first:
        return "first(" + term(t[0]) + ")";
      case Kind::subset:
        return s[0] + " " + g_.sub + " " + s[1];
      case Kind::proper_subset:
        return s[0] + " " + g_.psub + " " + s[1];
      case Kind::in_interval:
        return term(t[0]) + in + interval(term(t[1]), term(t[2]));
      case Kind::subset_interval:
        return s[0] + " " + g_.sub + " " + interval(term(t[0]), term(t[1]));
      case Kind::bounded_by:
        return s[0] + " " + g_.sub + " " + interval("1", term(t[0]));
      case Kind::min_greater:
        return "min " + s[0] + " > " + term(t[0]);
      case Kind::in_diff:
        return term(t[0]) + in + s[0] + g_.minus + s[1];
      case Kind::is_regex:
        return "isE_{" + expr::to_string(f.regex()) + "}(" + term(t[0]) + ", " + term(t[1]) + ")";
      case Kind::begins:
        return "beginsE_{" + expr::to_string(f.regex()) + "}(" + term(t[0]) + ")";
      case Kind::block:
        return "block_{" + expr::to_string(f.regex()) + "}(" + s[0] + ")";
      case Kind::blockset:
        return "blockset_{" + expr::to_string(f.regex()) + "}(" + s[0] + ")";
    }
    return "?";
  }

 private:
  static std::string term(const Term& t) {
    std::string out = t.var;
    for (unsigned i = 0; i < t.succ; ++i) out = "s(" + out + ")";
    return out;
  }

  std::string interval(const std::string& lo, const std::string& hi) const {
    return "{" + lo + g_.dots + hi + "}";
  }

  static bool self_delimited(Kind k) {
    return k == Kind::negation || k == Kind::truth || k == Kind::falsity || k == Kind::first ||
           k == Kind::is_regex || k == Kind::begins || k == Kind::block || k == Kind::blockset;
  }

  std::string operand_of_negation(const Formula& f) {
    const std::string body = print(f);
    return self_delimited(f.kind()) ? body : "(" + body + ")";
  }

  std::string quant(const std::string& q, const Formula& f) {
    const Formula& body = f.kids()[0];
    const std::string b = print(body);
    return q + f.bound() + ". " + (is_binary(body.kind()) ? "(" + b + ")" : b);
  }

  // Operands of the same associative connective are printed flat.
  void flatten(const Formula& f, Kind k, std::vector<Formula>& out) {
    if (f.kind() == k && k != Kind::implication) {
      for (const auto& c : f.kids()) flatten(c, k, out);
    } else {
      out.push_back(f);
    }
  }

  std::string chain(const Formula& f) {
    const char* op = f.kind() == Kind::conjunction   ? g_.conj
                     : f.kind() == Kind::disjunction ? g_.disj
                                                     : g_.impl;
    std::vector<Formula> parts;
    if (f.kind() == Kind::implication)
      parts = f.kids();
    else
      flatten(f, f.kind(), parts);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += std::string(" ") + op + " ";
      const std::string p = print(parts[i]);
      const Kind k = parts[i].kind();
      out += (is_binary(k) || is_binder(k)) ? "(" + p + ")" : p;
    }
    return out;
  }

  Glyphs g_;
};

}  // namespace

std::string to_string(const Formula& f, PrintOptions options) {
  return Printer(options.ascii).print(options.expand ? expand_macros(f) : f);
}

}  // namespace omegat::logic
