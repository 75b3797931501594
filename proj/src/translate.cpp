#include "omegat/translate.hpp"

#include <algorithm>
#include <map>

#include "omegat/error.hpp"

namespace omegat::translate {

using cca::CCA;
using cca::kEpsilon;
using cca::Op;
using cca::StateId;

// ---------------------------------------------------------------------------
// Thompson construction

namespace {

struct Fragment {
  nfa::StateId start, accept;
};

Fragment build(nfa::Nfa& m, const expr::RegExpr& r, const std::map<char, nfa::Symbol>& sym) {
  using expr::RegKind;
  switch (r.kind()) {
    case RegKind::empty: {
      const auto s = m.add_state(), f = m.add_state();
      return {s, f};
    }
    case RegKind::symbol: {
      const auto it = sym.find(r.letter());
      if (it == sym.end())
        throw PreconditionError(std::string("letter '") + r.letter() + "' is not in the alphabet");
      const auto s = m.add_state(), f = m.add_state();
      m.add_edge(s, nfa::Guard::only(it->second), f);
      return {s, f};
    }
    case RegKind::concat: {
      const Fragment a = build(m, r.left(), sym);
      const Fragment b = build(m, r.right(), sym);
      m.add_epsilon(a.accept, b.start);
      return {a.start, b.accept};
    }
    case RegKind::alt: {
      const auto s = m.add_state();
      const Fragment a = build(m, r.left(), sym);
      const Fragment b = build(m, r.right(), sym);
      const auto f = m.add_state();
      m.add_epsilon(s, a.start);
      m.add_epsilon(s, b.start);
      m.add_epsilon(a.accept, f);
      m.add_epsilon(b.accept, f);
      return {s, f};
    }
    case RegKind::star: {
      const auto s = m.add_state();
      const Fragment a = build(m, r.child(), sym);
      const auto f = m.add_state();
      m.add_epsilon(s, a.start);
      m.add_epsilon(s, f);
      m.add_epsilon(a.accept, a.start);
      m.add_epsilon(a.accept, f);
      return {s, f};
    }
  }
  throw InternalError("unknown regular expression node");
}

}  // namespace

nfa::Nfa thompson(const expr::RegExpr& r, const cca::Alphabet& alphabet) {
  std::vector<std::string> names;
  std::map<char, nfa::Symbol> sym;
  for (char c : alphabet) {
    sym[c] = static_cast<nfa::Symbol>(names.size());
    names.emplace_back(1, c);
  }
  nfa::Nfa m(names);
  const Fragment f = build(m, r, sym);
  m.set_initial(f.start);
  m.set_final(f.accept);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Copies the states of `src` into `out` (under names drawn from `fresh`) and
// its transitions with inc/check counters moved up by `by`.
template <typename Fresh>
std::vector<StateId> embed(CCA& out, const CCA& src, std::uint32_t by, Fresh&& fresh) {
  std::vector<StateId> map(src.num_states());
  for (StateId s = 0; s < src.num_states(); ++s) map[s] = out.add_state(fresh());
  for (cca::Transition t : src.transitions()) {
    t.from = map[t.from];
    t.to = map[t.to];
    if (t.op != Op::no_op) t.counter += by;
    out.add_transition(t);
  }
  return map;
}

StateId final_of(const CCA& a) {
  if (!a.final_state()) throw PreconditionError("automaton has no final state");
  return *a.final_state();
}

}  // namespace

Compiler::Compiler(cca::Alphabet alphabet, bool record)
    : alphabet_(std::move(alphabet)), record_(record) {}

std::string Compiler::fresh() { return "q" + std::to_string(next_++); }

AutomatonSet Compiler::note(AutomatonSet s) {
  if (record_) log_.push_back(s);
  return s;
}

CCA Compiler::base(bool with_letter, char letter) {
  CCA a(alphabet_, 1);
  const StateId s0 = a.add_state(fresh());
  const StateId sf = a.add_state(fresh());
  a.set_initial(s0);
  a.set_final(sf);
  if (with_letter) {
    a.add_transition(s0, letter, sf, 1, Op::no_op);
    a.add_transition(sf, kEpsilon, sf, 1, Op::inc);
  }
  return a;
}

CCA Compiler::concat(const CCA& a, const CCA& b) {
  const std::uint32_t n = a.counters(), n2 = b.counters();
  CCA out(alphabet_, n + n2 + 1);
  auto f = [this] { return fresh(); };
  const auto ma = embed(out, a, 1, f);
  const auto mb = embed(out, b, n + 1, f);
  const StateId sf2 = out.add_state(fresh());
  out.set_initial(ma[a.initial()]);
  out.set_final(sf2);
  out.add_transition(ma[final_of(a)], kEpsilon, mb[b.initial()], 2, Op::check);
  out.add_transition(mb[final_of(b)], kEpsilon, sf2, n + 2, Op::check);
  out.add_transition(sf2, kEpsilon, sf2, 1, Op::inc);
  return out;
}

std::vector<CCA> Compiler::sum(const CCA& a, const CCA& b) {
  const std::uint32_t n = a.counters(), n2 = b.counters();
  std::vector<CCA> out;
  for (int variant = 1; variant <= 3; ++variant) {
    CCA m(alphabet_, n + n2 + 1);
    auto f = [this] { return fresh(); };
    const auto ma = embed(m, a, 1, f);
    const auto mb = embed(m, b, n + 1, f);
    const StateId s0 = m.add_state(fresh());
    const StateId sf = m.add_state(fresh());
    const StateId fa = ma[final_of(a)], fb = mb[final_of(b)];
    m.set_initial(s0);
    m.set_final(sf);
    m.add_transition(s0, kEpsilon, ma[a.initial()], 1, Op::no_op);
    m.add_transition(s0, kEpsilon, mb[b.initial()], 1, Op::no_op);
    m.add_transition(fa, kEpsilon, sf, 2, Op::check);
    m.add_transition(fb, kEpsilon, sf, n + 2, Op::check);
    m.add_transition(sf, kEpsilon, sf, 1, Op::inc);
    auto pump = [&](StateId at, std::uint32_t lo, std::uint32_t hi) {
      for (std::uint32_t k = lo; k <= hi; ++k) {
        m.add_transition(at, kEpsilon, at, k, Op::inc);
        m.add_transition(at, kEpsilon, at, k, Op::check);
      }
    };
    if (variant == 1) pump(fa, n + 2, n + n2 + 1);
    if (variant == 2) pump(fb, 2, n + 1);
    if (variant == 3) {
      pump(fa, 2, n + 1);
      pump(fb, n + 2, n + n2 + 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

CCA Compiler::star(const CCA& a) {
  CCA out(alphabet_, a.counters() + 1);
  const auto m = embed(out, a, 1, [this] { return fresh(); });
  const StateId sf2 = out.add_state(fresh());
  const StateId fa = m[final_of(a)];
  out.set_initial(m[a.initial()]);
  out.set_final(sf2);
  out.add_transition(fa, kEpsilon, m[a.initial()], 1, Op::no_op);
  out.add_transition(fa, kEpsilon, sf2, 2, Op::check);
  out.add_transition(sf2, kEpsilon, sf2, 1, Op::inc);
  return out;
}

CCA Compiler::t(const CCA& a) {
  CCA out(alphabet_, a.counters() + 2);
  const auto m = embed(out, a, 2, [this] { return fresh(); });
  const StateId sf2 = out.add_state(fresh());
  const StateId fa = m[final_of(a)];
  out.set_initial(m[a.initial()]);
  out.set_final(sf2);
  out.add_transition(fa, kEpsilon, m[a.initial()], 2, Op::inc);
  out.add_transition(fa, kEpsilon, sf2, 2, Op::check);
  out.add_transition(fa, kEpsilon, fa, 3, Op::check);
  out.add_transition(sf2, kEpsilon, sf2, 1, Op::inc);
  return out;
}

CCA Compiler::prefix(const expr::RegExpr& r, const CCA& a) {
  const nfa::Nfa tn = thompson(r, alphabet_);
  CCA out(alphabet_, a.counters());
  const auto m = embed(out, a, 0, [this] { return fresh(); });
  std::vector<StateId> rm(tn.num_states());
  for (nfa::StateId s = 0; s < tn.num_states(); ++s) rm[s] = out.add_state(fresh());
  for (const auto& e : tn.edges()) {
    const cca::Label label =
        e.epsilon ? kEpsilon : cca::Label(tn.alphabet()[e.guard.symbols.front()][0]);
    out.add_transition(rm[e.from], label, rm[e.to], 1, Op::no_op);
  }
  for (nfa::StateId s = 0; s < tn.num_states(); ++s)
    if (tn.is_final(s)) out.add_transition(rm[s], kEpsilon, m[a.initial()], 1, Op::no_op);
  out.set_initial(rm[tn.initial()]);
  out.set_final(a.final_state() ? std::optional<StateId>(m[*a.final_state()]) : std::nullopt);
  return out;
}

AutomatonSet Compiler::compile_t(const expr::TExpr& e) {
  using expr::TKind;
  AutomatonSet out{expr::to_string(e), {}};
  switch (e.kind()) {
    case TKind::empty:
      out.automata.push_back(base(false, 0));
      break;
    case TKind::symbol:
      if (!alphabet_.contains(e.letter()))
        throw PreconditionError(std::string("letter '") + e.letter() + "' is not in the alphabet");
      out.automata.push_back(base(true, e.letter()));
      break;
    case TKind::concat:
    case TKind::sum: {
      const AutomatonSet l = compile_t(e.left());
      const AutomatonSet r = compile_t(e.right());
      for (const auto& a : l.automata)
        for (const auto& b : r.automata) {
          if (e.kind() == TKind::concat) {
            out.automata.push_back(concat(a, b));
          } else {
            for (auto& m : sum(a, b)) out.automata.push_back(std::move(m));
          }
        }
      break;
    }
    case TKind::star:
      for (const auto& a : compile_t(e.child()).automata) out.automata.push_back(star(a));
      break;
    case TKind::t:
      for (const auto& a : compile_t(e.child()).automata) out.automata.push_back(t(a));
      break;
  }
  return note(std::move(out));
}

AutomatonSet Compiler::compile_omega(const expr::OmegaTExpr& e) {
  using expr::OmegaKind;
  AutomatonSet out{expr::to_string(e), {}};
  switch (e.kind()) {
    case OmegaKind::alt: {
      out.automata = compile_omega(e.left()).automata;
      for (auto& a : compile_omega(e.right()).automata) out.automata.push_back(std::move(a));
      break;
    }
    case OmegaKind::prefix:
      for (const auto& a : compile_omega(e.rest()).automata)
        out.automata.push_back(prefix(e.regular(), a));
      break;
    case OmegaKind::omega:
      for (const auto& a : compile_t(e.body()).automata) out.automata.push_back(cca::hat(a));
      break;
  }
  return note(std::move(out));
}

CCA Compiler::merge(const AutomatonSet& set) {
  if (set.automata.empty()) throw PreconditionError("merge of an empty automaton set");
  std::uint32_t n_max = 0;
  for (const auto& a : set.automata) n_max = std::max(n_max, a.counters());
  CCA out(alphabet_, n_max);
  const StateId s0 = out.add_state(fresh());
  out.set_initial(s0);
  for (const auto& a : set.automata) {
    const auto m = embed(out, a, 0, [this] { return fresh(); });
    const StateId init = m[a.initial()];
    for (std::uint32_t k = a.counters() + 1; k <= n_max; ++k) {
      out.add_transition(init, kEpsilon, init, k, Op::inc);
      out.add_transition(init, kEpsilon, init, k, Op::check);
    }
    out.add_transition(s0, kEpsilon, init, 1, Op::no_op);
  }
  return out;
}

CCA Compiler::compile(const expr::OmegaTExpr& e) { return merge(compile_omega(e)); }

AutomatonSet compile_t(const expr::TExpr& e) { return Compiler(expr::letters_of(e)).compile_t(e); }

AutomatonSet compile_omega(const expr::OmegaTExpr& e) {
  return Compiler(expr::letters_of(e)).compile_omega(e);
}

CCA compile(const expr::OmegaTExpr& e) { return Compiler(expr::letters_of(e)).compile(e); }

}  // namespace omegat::translate
