#include "omegat/cca.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "omegat/error.hpp"

namespace omegat::cca {

std::string_view to_string(Op op) {
  switch (op) {
    case Op::no_op:
      return "no_op";
    case Op::inc:
      return "inc";
    case Op::check:
      return "check";
  }
  return "?";
}

CCA::CCA(Alphabet alphabet, std::uint32_t counters)
    : alphabet_(std::move(alphabet)), counters_(counters) {
  if (counters_ == 0) throw PreconditionError("a CCA needs at least one counter");
}

StateId CCA::add_state(std::string name) {
  if (find(name)) throw PreconditionError("duplicate state name '" + name + "'");
  names_.push_back(std::move(name));
  out_.emplace_back();
  return static_cast<StateId>(names_.size() - 1);
}

bool CCA::add_transition(const Transition& t) {
  if (t.from >= names_.size() || t.to >= names_.size())
    throw PreconditionError("transition references an unknown state");
  if (t.counter < 1 || t.counter > counters_)
    throw PreconditionError("transition counter " + std::to_string(t.counter) + " outside 1.." +
                            std::to_string(counters_));
  if (t.op == Op::no_op && t.counter != 1)
    throw PreconditionError("no_op transitions must use counter 1");
  if (t.label && !alphabet_.contains(*t.label))
    throw PreconditionError(std::string("letter '") + *t.label + "' is not in the alphabet");
  if (!index_.insert(t).second) return false;
  out_[t.from].push_back(transitions_.size());
  transitions_.push_back(t);
  return true;
}

void CCA::set_initial(StateId s) {
  if (s >= names_.size()) throw PreconditionError("initial state out of range");
  initial_ = s;
}

void CCA::set_final(std::optional<StateId> s) {
  if (s && *s >= names_.size()) throw PreconditionError("final state out of range");
  final_ = s;
}

std::optional<StateId> CCA::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

namespace {

using NamedTransition = std::tuple<std::string, int, std::string, std::uint32_t, int>;

std::set<NamedTransition> named_transitions(const CCA& a) {
  std::set<NamedTransition> out;
  for (const auto& t : a.transitions())
    out.emplace(a.name(t.from), t.label ? int(*t.label) : -1, a.name(t.to), t.counter,
                static_cast<int>(t.op));
  return out;
}

}  // namespace

bool operator==(const CCA& a, const CCA& b) {
  if (a.alphabet_ != b.alphabet_ || a.counters_ != b.counters_) return false;
  if (a.names_.size() != b.names_.size()) return false;
  if (std::set<std::string>(a.names_.begin(), a.names_.end()) !=
      std::set<std::string>(b.names_.begin(), b.names_.end()))
    return false;
  if (a.num_states() > 0 && a.name(a.initial_) != b.name(b.initial_)) return false;
  if (a.final_.has_value() != b.final_.has_value()) return false;
  if (a.final_ && a.name(*a.final_) != b.name(*b.final_)) return false;
  return named_transitions(a) == named_transitions(b);
}

Configuration initial_configuration(const CCA& a) {
  return Configuration{a.initial(), std::vector<std::uint64_t>(a.counters(), 0)};
}

Configuration step(const CCA& a, const Configuration& c, const Transition& t) {
  if (t.from != c.state)
    throw PreconditionError("transition does not leave the configuration's state");
  if (!a.has_transition(t)) throw PreconditionError("transition is not in the automaton");
  if (c.counters.size() != a.counters())
    throw PreconditionError("counter vector has the wrong length");
  Configuration next{t.to, c.counters};
  auto& v = next.counters[t.counter - 1];
  switch (t.op) {
    case Op::no_op:
      break;
    case Op::inc:
      if (v == std::numeric_limits<std::uint64_t>::max()) throw InternalError("counter overflow");
      ++v;
      break;
    case Op::check:
      v = 0;
      break;
  }
  return next;
}

std::vector<StateId> PrefixComputation::states() const {
  std::vector<StateId> out;
  out.reserve(configurations.size());
  for (const auto& c : configurations) out.push_back(c.state);
  return out;
}

namespace {

bool is_choice_edge(const Transition& t) {
  return !t.label && t.op == Op::no_op && t.counter == 1;
}

bool state_is_simple(const CCA& a, StateId s) {
  const auto& out = a.outgoing(s);
  if (out.size() == 1) return true;
  return std::all_of(out.begin(), out.end(),
                     [&](std::size_t i) { return is_choice_edge(a.transitions()[i]); });
}

}  // namespace

bool is_simple(const CCA& a) {
  for (StateId s = 0; s < a.num_states(); ++s)
    if (!state_is_simple(a, s)) return false;
  return true;
}

CCA simplify(const CCA& a) {
  if (is_simple(a)) return a;
  CCA out(a.alphabet(), a.counters());
  for (const auto& n : a.names()) out.add_state(n);
  out.set_initial(a.initial());
  out.set_final(a.final_state());
  for (StateId s = 0; s < a.num_states(); ++s) {
    const auto& edges = a.outgoing(s);
    if (state_is_simple(a, s)) {
      for (auto i : edges) out.add_transition(a.transitions()[i]);
      continue;
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
      std::string fresh = a.name(s) + "_" + std::to_string(j);
      while (out.find(fresh)) fresh += "'";
      const StateId f = out.add_state(fresh);
      Transition t = a.transitions()[edges[j]];
      out.add_transition(s, kEpsilon, f, 1, Op::no_op);
      t.from = f;
      out.add_transition(t);
    }
  }
  return out;
}

StateKind classify_state(const CCA& a, StateId s) {
  if (!is_simple(a)) throw PreconditionError("classify_state requires a simple CCA");
  return classify_states(a).at(s);
}

std::vector<StateKind> classify_states(const CCA& a) {
  if (!is_simple(a)) throw PreconditionError("classify_states requires a simple CCA");
  std::vector<StateKind> kinds(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s) {
    const auto& out = a.outgoing(s);
    StateKind k;
    if (out.empty()) {
      k.tag = StateKind::Tag::stuck;
    } else if (out.size() > 1) {
      k.tag = StateKind::Tag::choice;
    } else {
      const Transition& t = a.transitions()[out[0]];
      switch (t.op) {
        case Op::check:
          k = {StateKind::Tag::check, t.counter};
          break;
        case Op::inc:
          k = {StateKind::Tag::inc, t.counter};
          break;
        case Op::no_op:
          k.tag = t.label ? StateKind::Tag::sym : StateKind::Tag::choice;
          break;
      }
    }
    kinds[s] = k;
  }
  return kinds;
}

std::size_t default_eps_budget(const CCA& a) { return a.num_states() * (a.counters() + 2); }

std::optional<PrefixComputation> has_run_prefix(const CCA& a, std::string_view word,
                                                std::optional<std::size_t> eps_budget) {
  if (a.num_states() == 0) return std::nullopt;
  const std::size_t budget = eps_budget.value_or(default_eps_budget(a));
  const std::size_t n = word.size();
  // Counters never disable a transition, so it suffices to search over
  // (state, letters read, epsilon steps since the last letter).
  const std::size_t layers = budget + 1;
  auto key = [&](StateId s, std::size_t pos, std::size_t eps) {
    return (static_cast<std::size_t>(s) * (n + 1) + pos) * layers + eps;
  };
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent_edge(a.num_states() * (n + 1) * layers, kUnseen);
  std::vector<std::size_t> parent_key(parent_edge.size(), kUnseen);

  struct Node {
    StateId s;
    std::size_t pos, eps;
  };
  std::queue<Node> frontier;
  const std::size_t start = key(a.initial(), 0, 0);
  parent_edge[start] = kUnseen - 1;
  frontier.push({a.initial(), 0, 0});
  std::optional<std::size_t> goal;
  while (!frontier.empty() && !goal) {
    const Node cur = frontier.front();
    frontier.pop();
    const std::size_t ck = key(cur.s, cur.pos, cur.eps);
    if (cur.pos == n) {
      goal = ck;
      break;
    }
    for (std::size_t i : a.outgoing(cur.s)) {
      const Transition& t = a.transitions()[i];
      Node nxt;
      if (!t.label) {
        if (cur.eps >= budget) continue;
        nxt = {t.to, cur.pos, cur.eps + 1};
      } else if (*t.label == word[cur.pos]) {
        nxt = {t.to, cur.pos + 1, 0};
      } else {
        continue;
      }
      const std::size_t nk = key(nxt.s, nxt.pos, nxt.eps);
      if (parent_edge[nk] != kUnseen) continue;
      parent_edge[nk] = i;
      parent_key[nk] = ck;
      frontier.push(nxt);
    }
  }
  if (!goal) return std::nullopt;

  std::vector<std::size_t> edges;
  for (std::size_t k = *goal; k != start; k = parent_key[k]) edges.push_back(parent_edge[k]);
  std::reverse(edges.begin(), edges.end());

  PrefixComputation p;
  p.configurations.push_back(initial_configuration(a));
  for (std::size_t i : edges) {
    const Transition& t = a.transitions()[i];
    p.configurations.push_back(step(a, p.configurations.back(), t));
    p.transitions.push_back(t);
  }
  return p;
}

CCA hat(const CCA& a) {
  if (!a.final_state()) throw PreconditionError("hat requires a final state");
  CCA out = a;
  out.add_transition(*a.final_state(), kEpsilon, a.initial(), 1, Op::check);
  return out;
}

CCA shift(const CCA& a, std::uint32_t by) {
  CCA out(a.alphabet(), a.counters() + by);
  for (const auto& n : a.names()) out.add_state(n);
  if (a.num_states() > 0) out.set_initial(a.initial());
  out.set_final(a.final_state());
  for (Transition t : a.transitions()) {
    if (t.op != Op::no_op) t.counter += by;
    out.add_transition(t);
  }
  return out;
}

bool satisfies_final_contract(const CCA& a) {
  if (!a.final_state()) return false;
  const StateId f = *a.final_state();
  for (std::size_t i : a.outgoing(f)) {
    const Transition& t = a.transitions()[i];
    if (t.label || t.to != f || t.counter != 1 || t.op != Op::inc) return false;
  }
  return true;
}

void validate_computation(const CCA& a, const PrefixComputation& p) {
  if (p.configurations.empty()) throw PreconditionError("empty computation");
  if (p.transitions.size() + 1 != p.configurations.size())
    throw PreconditionError("computation needs one more configuration than transitions");
  if (!(p.configurations.front() == initial_configuration(a)))
    throw PreconditionError("computation does not start in the initial configuration");
  for (std::size_t i = 0; i < p.transitions.size(); ++i) {
    const Configuration next = step(a, p.configurations[i], p.transitions[i]);
    if (!(next == p.configurations[i + 1]))
      throw PreconditionError("configuration " + std::to_string(i + 1) +
                              " does not follow from its predecessor");
  }
}

std::vector<std::string> split_by_checks(const CCA& a, const PrefixComputation& p) {
  validate_computation(a, p);
  std::vector<std::string> blocks;
  std::string current;
  for (const Transition& t : p.transitions) {
    if (t.op == Op::check && t.counter == 1) {
      blocks.push_back(std::move(current));
      current.clear();
    }
    if (t.label) current.push_back(*t.label);
  }
  return blocks;
}

}  // namespace omegat::cca
