#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omegat::cca {

using StateId = std::uint32_t;
using Alphabet = std::set<char>;

/// Transition label: a letter, or nullopt for epsilon.
using Label = std::optional<char>;
inline constexpr Label kEpsilon = std::nullopt;

enum class Op { no_op, inc, check };

std::string_view to_string(Op op);

struct Transition {
  StateId from = 0;
  Label label;
  StateId to = 0;
  std::uint32_t counter = 1;  // 1-based
  Op op = Op::no_op;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Counter-check automaton (S, Sigma, s0, N, Delta) with an optional
/// distinguished final state. States are dense ids with unique names; the
/// transition relation has set semantics.
class CCA {
 public:
  CCA(Alphabet alphabet, std::uint32_t counters);

  StateId add_state(std::string name);
  /// Adds `t` unless already present; returns whether it was new.
  /// Throws PreconditionError when `t` breaks the model's constraints
  /// (no_op only on counter 1, counter in 1..N, letter in the alphabet).
  bool add_transition(const Transition& t);
  bool add_transition(StateId from, Label label, StateId to, std::uint32_t counter, Op op) {
    return add_transition(Transition{from, label, to, counter, op});
  }

  void set_initial(StateId s);
  void set_final(std::optional<StateId> s);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t counters() const { return counters_; }
  StateId initial() const { return initial_; }
  std::optional<StateId> final_state() const { return final_; }

  std::size_t num_states() const { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<StateId> find(std::string_view name) const;

  /// Transitions in insertion order.
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// Indexes into transitions() of the transitions leaving `s`.
  const std::vector<std::size_t>& outgoing(StateId s) const { return out_.at(s); }
  bool has_transition(const Transition& t) const { return index_.contains(t); }

  /// Structural equality by state names, independent of state ids.
  friend bool operator==(const CCA& a, const CCA& b);

 private:
  Alphabet alphabet_;
  std::uint32_t counters_;
  std::vector<std::string> names_;
  StateId initial_ = 0;
  std::optional<StateId> final_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> out_;
  std::set<Transition> index_;
};

struct Configuration {
  StateId state = 0;
  std::vector<std::uint64_t> counters;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration initial_configuration(const CCA& a);

/// Fires `t` from `c`. Throws PreconditionError when `t` is not a transition
/// of `a` leaving `c.state`, InternalError on counter overflow. Never
/// blocks on counter values.
Configuration step(const CCA& a, const Configuration& c, const Transition& t);

/// A finite prefix of a computation: configurations[i] --transitions[i]-->
/// configurations[i+1].
struct PrefixComputation {
  std::vector<Configuration> configurations;
  std::vector<Transition> transitions;

  std::vector<StateId> states() const;
};

bool is_simple(const CCA& a);

/// Splits every state that fires more than one transition (and is not a
/// pure epsilon/no_op choice state) into a choice state with one fresh
/// successor per original transition. Simple automata are returned as is.
CCA simplify(const CCA& a);

struct StateKind {
  enum class Tag { check, inc, sym, choice, stuck };
  Tag tag = Tag::stuck;
  std::uint32_t counter = 0;  // for check/inc

  friend bool operator==(const StateKind&, const StateKind&) = default;
};

/// Requires is_simple(a); throws PreconditionError otherwise.
StateKind classify_state(const CCA& a, StateId s);

/// Per-state kinds of a simple automaton.
std::vector<StateKind> classify_states(const CCA& a);

/// Default number of epsilon steps allowed between consecutive letters.
std::size_t default_eps_budget(const CCA& a);

/// Searches for a prefix computation from the initial configuration reading
/// exactly `word`, with at most `eps_budget` epsilon steps before each
/// letter. Acceptance is not evaluated.
std::optional<PrefixComputation> has_run_prefix(const CCA& a, std::string_view word,
                                                std::optional<std::size_t> eps_budget = {});

/// Adds the loop-back check (s_f, eps, s0, (1, check)).
CCA hat(const CCA& a);

/// Adds `by` to the counter of every inc/check transition; no_op stays on 1.
CCA shift(const CCA& a, std::uint32_t by);

/// Every transition leaving the final state is (s_f, eps, s_f, (1, inc)).
bool satisfies_final_contract(const CCA& a);

/// Cuts the letters read along `p` into blocks delimited by checks of
/// counter 1. A letter read by the delimiting transition opens the next
/// block; letters after the last delimiter are dropped.
std::vector<std::string> split_by_checks(const CCA& a, const PrefixComputation& p);

/// Verifies that `p` is a prefix computation of `a` from the initial
/// configuration. Throws PreconditionError describing the first defect.
void validate_computation(const CCA& a, const PrefixComputation& p);

enum class Format { json, dot };

/// Deterministic serialization; states and transitions sorted by name.
std::string export_automaton(const CCA& a, Format format);
/// Reads the JSON schema written by export_automaton. Throws FormatError.
CCA import_automaton(std::string_view json);

}  // namespace omegat::cca
