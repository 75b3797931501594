#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omegat::nfa {

using Symbol = std::uint32_t;
using StateId = std::uint32_t;

/// A set of symbols, stored either as a finite list or as the complement of
/// one. Lists are kept sorted and duplicate free.
struct Guard {
  bool complement = false;
  std::vector<Symbol> symbols;

  static Guard only(Symbol s) { return Guard{false, {s}}; }
  static Guard of(std::vector<Symbol> s);
  static Guard any() { return Guard{true, {}}; }
  static Guard except(std::vector<Symbol> s);

  bool matches(Symbol s) const;
  Guard intersect(const Guard& o) const;
  bool empty(std::size_t alphabet_size) const;
  /// Smallest member, if any.
  std::optional<Symbol> first(std::size_t alphabet_size) const;

  friend bool operator==(const Guard&, const Guard&) = default;
};

struct Edge {
  StateId from = 0;
  bool epsilon = false;
  Guard guard;  // ignored for epsilon edges
  StateId to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Nondeterministic finite automaton over a finite, named alphabet. Edges
/// carry symbol guards so that "every symbol but s" costs one edge.
class Nfa {
 public:
  explicit Nfa(std::vector<std::string> alphabet);

  StateId add_state(std::string name = {});
  void add_edge(StateId from, Guard guard, StateId to);
  void add_epsilon(StateId from, StateId to);
  void set_initial(StateId s);
  void set_final(StateId s, bool final = true);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return final_.size(); }
  StateId initial() const { return initial_; }
  bool is_final(StateId s) const { return final_.at(s); }
  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& outgoing(StateId s) const { return out_.at(s); }

  bool accepts(const std::vector<Symbol>& word) const;

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> final_;
  StateId initial_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Product automaton plus, for each product state, the pair it came from.
struct Product {
  Nfa nfa;
  std::vector<std::pair<StateId, StateId>> origin;
};

/// Full product with |Q1|*|Q2| states; state (p, q) has id p*|Q2| + q.
/// Throws PreconditionError when the alphabets differ. Rows are built in
/// parallel; the result is identical to intersect_serial.
Product intersect(const Nfa& a, const Nfa& b);
Product intersect_serial(const Nfa& a, const Nfa& b);

/// Product restricted to the pairs reachable from the initial pair. Same
/// language as intersect.
Product intersect_reachable(const Nfa& a, const Nfa& b);

struct Run {
  std::vector<Symbol> word;
  /// States visited, one more than the number of edges taken (epsilon
  /// edges included).
  std::vector<StateId> states;
};

/// Shortest accepted word, with the run that accepts it.
std::optional<Run> shortest_run(const Nfa& n);
std::optional<std::vector<Symbol>> nfa_nonempty(const Nfa& n);

}  // namespace omegat::nfa
