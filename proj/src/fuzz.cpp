#include "omegat/fuzz.hpp"

#include <algorithm>

#include "omegat/emptiness.hpp"
#include "omegat/error.hpp"

namespace omegat::fuzz {

using cca::kEpsilon;
using cca::Op;
using cca::StateId;

namespace {

template <typename T>
T pick(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

enum class Kind { stuck, check, inc, sym, choice };

Kind random_kind(std::mt19937_64& rng) {
  switch (pick(rng, 0, 11)) {
    case 0: return Kind::stuck;
    case 1: case 2: case 3: return Kind::check;
    case 4: case 5: case 6: return Kind::inc;
    case 7: case 8: return Kind::sym;
    default: return Kind::choice;
  }
}

}  // namespace

CCA random_simple_cca(std::mt19937_64& rng, const Shape& shape) {
  const std::uint32_t n = pick<std::uint32_t>(rng, 1, shape.max_counters);
  const std::size_t skeleton_size = 2 + 2 * std::size_t{n};
  const bool planted = pick(rng, 0, 1) && skeleton_size <= shape.max_states;
  const std::size_t n_states =
      pick<std::size_t>(rng, planted ? skeleton_size : 1, shape.max_states);
  CCA a({'a', 'b'}, n);
  for (std::size_t i = 0; i < n_states; ++i) a.add_state("s" + std::to_string(i));
  a.set_initial(0);

  // Targets often follow a ring through all states so that cycles are
  // common. In planted mode the ring reads a letter, runs through one inc
  // state per counter into a choice state that loops back to the first inc,
  // then passes the checks: the skeleton of a witness.
  std::vector<StateId> ring(n_states), next(n_states);
  for (std::size_t i = 0; i < n_states; ++i) ring[i] = static_cast<StateId>(i);
  std::shuffle(ring.begin(), ring.end(), rng);
  for (std::size_t i = 0; i < n_states; ++i) next[ring[i]] = ring[(i + 1) % n_states];

  std::vector<Kind> kinds(n_states);
  std::vector<std::uint32_t> counter(n_states);
  std::vector<std::optional<StateId>> back(n_states);
  std::vector<bool> skeleton(n_states, false);
  for (std::size_t s = 0; s < n_states; ++s) {
    kinds[s] = random_kind(rng);
    counter[s] = pick<std::uint32_t>(rng, 1, n);
  }
  if (planted) {
    std::size_t at = pick<std::size_t>(rng, 0, n_states - 1);
    auto slot = [&] {
      const StateId s = ring[at++ % n_states];
      skeleton[s] = true;
      return s;
    };
    kinds[slot()] = Kind::sym;
    const StateId first_inc = ring[at % n_states];
    for (std::uint32_t k = 1; k <= n; ++k) {
      const StateId inc = slot();
      kinds[inc] = Kind::inc;
      counter[inc] = k;
    }
    const StateId loop = slot();
    kinds[loop] = Kind::choice;
    back[loop] = first_inc;
    for (std::uint32_t k = 1; k <= n; ++k) {
      const StateId c = slot();
      kinds[c] = Kind::check;
      counter[c] = k;
    }
  }
  auto target = [&](StateId s) {
    if (skeleton[s] || pick(rng, 0, 1)) return next[s];
    return static_cast<StateId>(pick<std::size_t>(rng, 0, n_states - 1));
  };

  std::size_t budget = shape.max_transitions;
  for (StateId s = 0; s < n_states && budget > 0; ++s) {
    switch (kinds[s]) {
      case Kind::stuck:
        break;
      case Kind::check:
      case Kind::inc:
        a.add_transition(s, kEpsilon, target(s), counter[s],
                         kinds[s] == Kind::inc ? Op::inc : Op::check);
        --budget;
        break;
      case Kind::sym:
        a.add_transition(s, pick(rng, 0, 1) ? 'a' : 'b', target(s), 1, Op::no_op);
        --budget;
        break;
      case Kind::choice: {
        std::size_t fan = std::min<std::size_t>(budget, pick<std::size_t>(rng, 2, 3));
        if (back[s] && fan > 0) {
          if (a.add_transition(s, kEpsilon, next[s], 1, Op::no_op)) --budget;
          if (budget > 0 && a.add_transition(s, kEpsilon, *back[s], 1, Op::no_op)) --budget;
          fan = 0;
        }
        for (std::size_t j = 0; j < fan; ++j)
          if (a.add_transition(s, kEpsilon, target(s), 1, Op::no_op)) --budget;
      }
    }
  }
  return a;
}

std::uint64_t case_seed(std::uint64_t master, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

CaseResult check_case(const CCA& a, std::size_t depth) {
  CaseResult r;
  emptiness::Decision d;
  try {
    d = emptiness::decide(a);
  } catch (const std::exception& e) {
    r.failure = std::string("pipeline error: ") + e.what();
    return r;
  }
  r.empty = d.empty;
  r.n1_states = d.witness_nfa_states;
  r.n1_bound = emptiness::potential_witness_bound(d.simple);
  if (r.n1_states > r.n1_bound) {
    r.failure = "potential-witness NFA has " + std::to_string(r.n1_states) +
                " states, bound is " + std::to_string(r.n1_bound);
    return r;
  }

  const auto found = emptiness::brute_force_witness(d.simple, depth);
  r.oracle_found = found.has_value();
  if (d.empty) {
    if (found) r.failure = "oracle found a witness ending at " + std::to_string(found->end) +
                           " but the pipeline answered empty";
    return r;
  }

  const auto& w = *d.witness;
  r.witness_end = w.end;
  if (auto defect = emptiness::witness_defect(d.simple, w)) {
    r.failure = "decoded witness rejected: " + *defect;
    return r;
  }
  const nfa::Nfa prefix = emptiness::build_prefix_nfa(d.simple);
  if (!prefix.accepts(emptiness::as_symbols(w.path))) {
    r.failure = "decoded witness path is not a walk from the initial state";
    return r;
  }
  if (!found && !emptiness::brute_force_witness(d.simple, std::max(depth, w.end))) {
    r.failure = "pipeline witness ends at " + std::to_string(w.end) +
                " but the oracle finds none at that depth";
  }
  return r;
}

namespace {

CCA without_transition(const CCA& a, std::size_t drop) {
  CCA out(a.alphabet(), a.counters());
  for (const auto& n : a.names()) out.add_state(n);
  out.set_initial(a.initial());
  out.set_final(a.final_state());
  for (std::size_t i = 0; i < a.transitions().size(); ++i)
    if (i != drop) out.add_transition(a.transitions()[i]);
  return out;
}

std::optional<CCA> without_state(const CCA& a, StateId drop) {
  if (drop == a.initial() || a.final_state() == drop) return std::nullopt;
  CCA out(a.alphabet(), a.counters());
  std::vector<StateId> map(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s)
    if (s != drop) map[s] = out.add_state(a.name(s));
  out.set_initial(map[a.initial()]);
  if (a.final_state()) out.set_final(map[*a.final_state()]);
  for (auto t : a.transitions()) {
    if (t.from == drop || t.to == drop) continue;
    t.from = map[t.from];
    t.to = map[t.to];
    out.add_transition(t);
  }
  return out;
}

}  // namespace

CCA minimize(const CCA& a, const std::function<bool(const CCA&)>& fails) {
  CCA cur = a;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = cur.transitions().size(); i-- > 0;) {
      CCA next = without_transition(cur, i);
      if (fails(next)) {
        cur = std::move(next);
        changed = true;
      }
    }
    for (StateId s = static_cast<StateId>(cur.num_states()); s-- > 0;) {
      auto next = without_state(cur, s);
      if (next && fails(*next)) {
        cur = std::move(*next);
        changed = true;
      }
    }
  }
  return cur;
}

namespace {

struct Outcome {
  CaseResult result;
  std::uint64_t seed = 0;
};

Outcome run_one(std::uint64_t master, std::size_t index, std::size_t depth, const Shape& shape) {
  Outcome o;
  o.seed = case_seed(master, index);
  std::mt19937_64 rng(o.seed);
  o.result = check_case(random_simple_cca(rng, shape), depth);
  return o;
}

Report collect(std::size_t depth, const Shape& shape,
               const std::vector<Outcome>& outcomes) {
  Report rep;
  rep.cases = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const CaseResult& r = outcomes[i].result;
    rep.nonempty += !r.empty;
    rep.oracle_found += r.oracle_found;
    if (r.n1_states > r.n1_bound) rep.bound_held = false;
    if (!r.failure) continue;
    std::mt19937_64 rng(outcomes[i].seed);
    Failure f;
    f.index = i;
    f.seed = outcomes[i].seed;
    f.reason = *r.failure;
    f.automaton = random_simple_cca(rng, shape);
    f.minimized = minimize(f.automaton, [depth](const CCA& c) {
      return check_case(c, depth).failure.has_value();
    });
    rep.failures.push_back(std::move(f));
  }
  return rep;
}

}  // namespace

Report run(std::uint64_t seed, std::size_t cases, std::size_t depth, const Shape& shape) {
  std::vector<Outcome> outcomes(cases);
  const auto n = static_cast<long long>(cases);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i)
    outcomes[i] = run_one(seed, static_cast<std::size_t>(i), depth, shape);
  return collect(depth, shape, outcomes);
}

Report run_serial(std::uint64_t seed, std::size_t cases, std::size_t depth, const Shape& shape) {
  std::vector<Outcome> outcomes(cases);
  for (std::size_t i = 0; i < cases; ++i) outcomes[i] = run_one(seed, i, depth, shape);
  return collect(depth, shape, outcomes);
}

}  // namespace omegat::fuzz
