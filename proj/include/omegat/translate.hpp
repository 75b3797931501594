#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omegat/cca.hpp"
#include "omegat/expr.hpp"
#include "omegat/nfa.hpp"

namespace omegat::translate {

/// The automata compiled for one sub-expression. Members are pairwise
/// state disjoint.
struct AutomatonSet {
  std::string expression;
  std::vector<cca::CCA> automata;
};

/// Thompson automaton for `r`; symbols index the sorted `alphabet`.
nfa::Nfa thompson(const expr::RegExpr& r, const cca::Alphabet& alphabet);

/// Compositional compiler. All states it creates are named q0, q1, ... from
/// one monotone counter, so every automaton of a compilation is state
/// disjoint from every other and output is reproducible.
class Compiler {
 public:
  explicit Compiler(cca::Alphabet alphabet, bool record = false);

  AutomatonSet compile_t(const expr::TExpr& e);
  AutomatonSet compile_omega(const expr::OmegaTExpr& e);
  cca::CCA merge(const AutomatonSet& set);
  cca::CCA compile(const expr::OmegaTExpr& e);

  /// Every set produced so far, innermost first (only when recording).
  const std::vector<AutomatonSet>& intermediate() const { return log_; }

 private:
  std::string fresh();
  cca::CCA base(bool with_letter, char letter);
  cca::CCA concat(const cca::CCA& a, const cca::CCA& b);
  std::vector<cca::CCA> sum(const cca::CCA& a, const cca::CCA& b);
  cca::CCA star(const cca::CCA& a);
  cca::CCA t(const cca::CCA& a);
  cca::CCA prefix(const expr::RegExpr& r, const cca::CCA& a);
  AutomatonSet note(AutomatonSet s);

  cca::Alphabet alphabet_;
  bool record_;
  std::uint64_t next_ = 0;
  std::vector<AutomatonSet> log_;
};

/// Convenience entry points over the expression's own letters.
AutomatonSet compile_t(const expr::TExpr& e);
AutomatonSet compile_omega(const expr::OmegaTExpr& e);
cca::CCA compile(const expr::OmegaTExpr& e);

}  // namespace omegat::translate
