#include "omegat/emptiness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <queue>
#include <tuple>

#include <json.hpp>

#include "omegat/error.hpp"

namespace omegat::emptiness {

using cca::Op;
using cca::StateId;
using cca::StateKind;
using Tag = cca::StateKind::Tag;

namespace {

void require_simple(const CCA& a, const char* who) {
  if (!cca::is_simple(a)) throw PreconditionError(std::string(who) + " requires a simple CCA");
}

bool reads_letter(const CCA& a, StateId s) {
  for (auto i : a.outgoing(s))
    if (a.transitions()[i].label) return true;
  return false;
}

bool connected(const CCA& a, StateId from, StateId to) {
  for (auto i : a.outgoing(from))
    if (a.transitions()[i].to == to) return true;
  return false;
}

bool is_kind(const StateKind& kind, Tag tag, std::uint32_t k) {
  return kind.tag == tag && kind.counter == k;
}

}  // namespace

std::optional<std::string> witness_defect(const CCA& a, const AcceptingWitness& w) {
  require_simple(a, "verify_witness");
  const auto kinds = cca::classify_states(a);
  const std::uint32_t n_counters = a.counters();
  const auto& p = w.path;
  if (p.empty()) return "empty path";
  for (auto s : p)
    if (s >= a.num_states()) return "path names an unknown state";
  if (p.front() != a.initial()) return "path does not start at the initial state";
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!connected(a, p[i], p[i + 1]))
      return "no transition between positions " + std::to_string(i) + " and " +
             std::to_string(i + 1);
  if (w.pairs.size() != n_counters || w.checks.size() != n_counters)
    return "expected " + std::to_string(n_counters) + " pairs and checks";

  std::vector<std::size_t> order{w.begin};
  for (auto [b, e] : w.pairs) {
    order.push_back(b);
    order.push_back(e);
  }
  order.push_back(w.end);
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (order[i] >= order[i + 1]) return "indexes are not strictly increasing";
  if (w.end >= p.size()) return "end lies beyond the path";
  const std::size_t last_pair_end = order[order.size() - 2];
  for (auto c : w.checks)
    if (c <= last_pair_end || c >= w.end) return "check index outside (e_N, end)";

  if (!reads_letter(a, p[w.begin])) return "no letter transition fires at begin";
  if (p[w.begin] != p[w.end]) return "states at begin and end differ";
  for (std::uint32_t k = 1; k <= n_counters; ++k) {
    const auto [b, e] = w.pairs[k - 1];
    const std::string ks = std::to_string(k);
    if (p[b] != p[e]) return "states at b" + ks + " and e" + ks + " differ";
    if (!is_kind(kinds[p[b]], Tag::inc, k)) return "b" + ks + " is not an inc state of its counter";
    for (std::size_t j = b; j <= e; ++j)
      if (is_kind(kinds[p[j]], Tag::check, k))
        return "check state of counter " + ks + " inside [b" + ks + ", e" + ks + "]";
    if (!is_kind(kinds[p[w.checks[k - 1]]], Tag::check, k))
      return "c" + ks + " is not a check state of its counter";
  }
  return std::nullopt;
}

bool verify_witness(const CCA& a, const AcceptingWitness& w) { return !witness_defect(a, w); }

bool checks_ordered(const AcceptingWitness& w) {
  return std::is_sorted(w.checks.begin(), w.checks.end()) &&
         std::adjacent_find(w.checks.begin(), w.checks.end()) == w.checks.end();
}

// ---------------------------------------------------------------------------
// Brute force: walk the transition graph breadth first while a scanner reads
// the visited states and commits to the witness indexes one at a time. The
// checks are collected in any order, as the definition allows; only the
// pipeline relies on the ordered form.

namespace {

enum class Event { none, begin, open, close, check, end };

struct Scan {
  Phase phase = Phase::start;
  std::uint32_t k = 0;
  std::uint64_t checked = 0;  // counters already checked (checks phase)
  StateId anchor = 0;
  StateId inc = 0;

  auto tie() const { return std::tie(phase, k, checked, anchor, inc); }
  friend bool operator<(const Scan& x, const Scan& y) { return x.tie() < y.tie(); }
};

struct Move {
  Scan next;
  Event event;
  std::uint32_t k;
};

// Scanner options at a position holding state `s`.
std::vector<Move> scan_moves(const Scan& sc, StateId s, const std::vector<StateKind>& kinds,
                             const std::vector<bool>& letter, std::uint32_t n) {
  std::vector<Move> out;
  switch (sc.phase) {
    case Phase::start:
      out.push_back({sc, Event::none, 0});
      if (letter[s]) out.push_back({Scan{Phase::pair_wait, 1, 0, s, 0}, Event::begin, 0});
      break;
    case Phase::pair_wait:
      out.push_back({sc, Event::none, 0});
      if (is_kind(kinds[s], Tag::inc, sc.k))
        out.push_back({Scan{Phase::pair_open, sc.k, 0, sc.anchor, s}, Event::open, sc.k});
      break;
    case Phase::pair_open:
      if (is_kind(kinds[s], Tag::check, sc.k)) break;
      out.push_back({sc, Event::none, 0});
      if (s == sc.inc) {
        const Scan next = sc.k < n ? Scan{Phase::pair_wait, sc.k + 1, 0, sc.anchor, 0}
                                   : Scan{Phase::checks, 0, 0, sc.anchor, 0};
        out.push_back({next, Event::close, sc.k});
      }
      break;
    case Phase::checks: {
      out.push_back({sc, Event::none, 0});
      const StateKind kind = kinds[s];
      const std::uint64_t bit = std::uint64_t{1} << (kind.counter - 1);
      if (kind.tag == Tag::check && !(sc.checked & bit)) {
        Scan next = sc;
        next.checked |= bit;
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        if (next.checked == all) next = Scan{Phase::closing, 0, 0, sc.anchor, 0};
        out.push_back({next, Event::check, kind.counter});
      }
      break;
    }
    case Phase::closing:
      out.push_back({sc, Event::none, 0});
      if (s == sc.anchor) out.push_back({Scan{Phase::accept, 0, 0, sc.anchor, 0}, Event::end, 0});
      break;
    case Phase::accept:
      break;
  }
  return out;
}

}  // namespace

std::optional<AcceptingWitness> brute_force_witness(const CCA& a, std::size_t depth) {
  require_simple(a, "brute_force_witness");
  if (a.counters() > 64) throw PreconditionError("brute_force_witness supports at most 64 counters");
  if (a.num_states() == 0) return std::nullopt;
  const auto kinds = cca::classify_states(a);
  std::vector<bool> letter(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s) letter[s] = reads_letter(a, s);
  const std::uint32_t n = a.counters();

  // Node = (state at position i, scanner state before reading position i),
  // plus what the scanner did at the parent's position.
  struct Node {
    StateId s;
    Scan scan;
    std::size_t parent;
    Event event;
    std::uint32_t k;
  };
  std::vector<Node> nodes{{a.initial(), Scan{}, 0, Event::none, 0}};
  std::set<std::pair<StateId, Scan>> seen{{a.initial(), Scan{}}};
  std::vector<std::size_t> layer{0};
  std::optional<std::size_t> hit;
  for (std::size_t pos = 0; pos <= depth && !layer.empty() && !hit; ++pos) {
    std::vector<std::size_t> next_layer;
    for (auto id : layer) {
      const Node cur = nodes[id];
      for (const Move& m : scan_moves(cur.scan, cur.s, kinds, letter, n)) {
        if (m.event == Event::end) {
          nodes.push_back({cur.s, m.next, id, m.event, 0});
          hit = nodes.size() - 1;
          break;
        }
        if (pos == depth) continue;
        for (auto i : a.outgoing(cur.s)) {
          const StateId to = a.transitions()[i].to;
          if (!seen.emplace(to, m.next).second) continue;
          nodes.push_back({to, m.next, id, m.event, m.k});
          next_layer.push_back(nodes.size() - 1);
        }
      }
      if (hit) break;
    }
    layer.swap(next_layer);
  }
  if (!hit) return std::nullopt;

  // Nodes from the hit back to the root; the hit node only carries `end`.
  std::vector<std::size_t> chain;
  for (std::size_t id = *hit;; id = nodes[id].parent) {
    chain.push_back(id);
    if (id == 0) break;
  }
  std::reverse(chain.begin(), chain.end());
  AcceptingWitness w;
  w.pairs.assign(n, {0, 0});
  w.checks.assign(n, 0);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    w.path.push_back(nodes[chain[i]].s);
    const Node& child = nodes[chain[i + 1]];
    switch (child.event) {
      case Event::begin:
        w.begin = i;
        break;
      case Event::open:
        w.pairs[child.k - 1].first = i;
        break;
      case Event::close:
        w.pairs[child.k - 1].second = i;
        break;
      case Event::check:
        w.checks[child.k - 1] = i;
        break;
      case Event::end:
        w.end = i;
        break;
      case Event::none:
        break;
    }
  }
  return w;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> state_alphabet(const CCA& a) { return a.names(); }

}  // namespace

std::size_t potential_witness_bound(const CCA& a) {
  const std::size_t n = a.counters(), s = a.num_states();
  return 2 + 2 * n * s + n * s * s + s;
}

PotentialWitnessNfa build_potential_witness_nfa(const CCA& a) {
  require_simple(a, "build_potential_witness_nfa");
  const auto kinds = cca::classify_states(a);
  const std::uint32_t n = a.counters();
  const StateId ns = static_cast<StateId>(a.num_states());

  std::vector<StateId> non_eps;
  for (StateId s = 0; s < ns; ++s)
    if (reads_letter(a, s)) non_eps.push_back(s);
  std::vector<std::vector<nfa::Symbol>> inc(n + 1), check(n + 1);
  for (StateId s = 0; s < ns; ++s) {
    if (kinds[s].tag == Tag::inc) inc[kinds[s].counter].push_back(s);
    if (kinds[s].tag == Tag::check) check[kinds[s].counter].push_back(s);
  }

  PotentialWitnessNfa out{nfa::Nfa(state_alphabet(a)), {}};
  auto add = [&](std::string name, PhaseInfo info) {
    out.info.push_back(info);
    return out.nfa.add_state(std::move(name));
  };
  const StateId q0 = add("q0", {Phase::start, 0, 0, 0});
  const StateId q_end = add("q_end", {Phase::accept, 0, 0, 0});
  out.nfa.set_initial(q0);
  out.nfa.set_final(q_end);

  std::map<StateId, StateId> closing;
  std::map<std::pair<std::uint32_t, StateId>, StateId> wait, hatted;
  std::map<std::tuple<std::uint32_t, StateId, StateId>, StateId> open;
  for (StateId s1 : non_eps) {
    const std::string sn = a.name(s1);
    closing[s1] = add("q_end[" + sn + "]", {Phase::closing, 0, s1, 0});
    for (std::uint32_t k = 1; k <= n; ++k) {
      const std::string ks = std::to_string(k);
      wait[{k, s1}] = add("q" + ks + "[" + sn + "]", {Phase::pair_wait, k, s1, 0});
      hatted[{k, s1}] = add("qhat" + ks + "[" + sn + "]", {Phase::checks, k, s1, 0});
      for (nfa::Symbol s2 : inc[k])
        open[{k, s1, s2}] =
            add("q" + ks + "[" + sn + "," + a.name(s2) + "]", {Phase::pair_open, k, s1, s2});
    }
  }

  auto& m = out.nfa;
  m.add_edge(q0, nfa::Guard::any(), q0);
  for (StateId s1 : non_eps) {
    m.add_edge(q0, nfa::Guard::only(s1), wait[{1, s1}]);
    for (std::uint32_t k = 1; k <= n; ++k) {
      const StateId qw = wait[{k, s1}];
      m.add_edge(qw, nfa::Guard::any(), qw);
      for (nfa::Symbol s2 : inc[k]) {
        const StateId qo = open[{k, s1, s2}];
        m.add_edge(qw, nfa::Guard::only(s2), qo);
        m.add_edge(qo, nfa::Guard::except(check[k]), qo);
        m.add_edge(qo, nfa::Guard::only(s2), k < n ? wait[{k + 1, s1}] : hatted[{1, s1}]);
      }
      const StateId qh = hatted[{k, s1}];
      m.add_edge(qh, nfa::Guard::any(), qh);
      if (!check[k].empty())
        m.add_edge(qh, nfa::Guard::of(check[k]), k < n ? hatted[{k + 1, s1}] : closing[s1]);
    }
    m.add_edge(closing[s1], nfa::Guard::except({s1}), closing[s1]);
    m.add_edge(closing[s1], nfa::Guard::only(s1), q_end);
  }
  return out;
}

nfa::Nfa build_prefix_nfa(const CCA& a) {
  nfa::Nfa m(state_alphabet(a));
  const StateId init = m.add_state("init");
  m.set_initial(init);
  for (StateId s = 0; s < a.num_states(); ++s) m.set_final(m.add_state(a.name(s)));
  if (a.num_states() == 0) return m;
  m.add_edge(init, nfa::Guard::only(a.initial()), a.initial() + 1);
  std::vector<std::vector<nfa::Symbol>> succ(a.num_states());
  for (const auto& t : a.transitions()) succ[t.from].push_back(t.to);
  for (StateId s = 0; s < a.num_states(); ++s) {
    std::sort(succ[s].begin(), succ[s].end());
    succ[s].erase(std::unique(succ[s].begin(), succ[s].end()), succ[s].end());
    for (auto t : succ[s]) m.add_edge(s + 1, nfa::Guard::only(t), t + 1);
  }
  return m;
}

std::vector<nfa::Symbol> as_symbols(const std::vector<StateId>& path) {
  return std::vector<nfa::Symbol>(path.begin(), path.end());
}

// ---------------------------------------------------------------------------

namespace {

// Every change of witness-NFA state marks the next index of the witness.
AcceptingWitness decode(const nfa::Product& prod, const nfa::Run& run) {
  AcceptingWitness w;
  w.path.assign(run.word.begin(), run.word.end());
  std::vector<std::size_t> indexes;
  for (std::size_t i = 0; i < run.word.size(); ++i) {
    const auto before = prod.origin[run.states[i]].first;
    const auto after = prod.origin[run.states[i + 1]].first;
    if (before != after) indexes.push_back(i);
  }
  const std::size_t n = indexes.size() >= 2 ? (indexes.size() - 2) / 3 : 0;
  if (indexes.size() != 3 * n + 2)
    throw InternalError("witness run has an unexpected number of phase changes");
  std::size_t c = 0;
  w.begin = indexes[c++];
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t b = indexes[c++];
    w.pairs.emplace_back(b, indexes[c++]);
  }
  for (std::size_t k = 0; k < n; ++k) w.checks.push_back(indexes[c++]);
  w.end = indexes[c++];
  return w;
}

}  // namespace

Decision decide(const CCA& a) {
  Decision d;
  d.simple = cca::simplify(a);
  const auto n1 = build_potential_witness_nfa(d.simple);
  const auto prefixes = build_prefix_nfa(d.simple);
  d.witness_nfa_states = n1.nfa.num_states();
  d.prefix_nfa_states = prefixes.num_states();
  const auto prod = nfa::intersect_reachable(n1.nfa, prefixes);
  d.product_states = prod.nfa.num_states();
  const auto run = nfa::shortest_run(prod.nfa);
  d.empty = !run.has_value();
  if (!run) return d;

  AcceptingWitness w = decode(prod, *run);
  if (auto defect = witness_defect(d.simple, w))
    throw InternalError("decoded witness fails verification: " + *defect);
  if (!checks_ordered(w)) throw InternalError("decoded witness has unordered checks");
  if (!prefixes.accepts(as_symbols(w.path)))
    throw InternalError("decoded witness path is rejected by the prefix NFA");
  d.witness = std::move(w);
  return d;
}

bool is_empty(const CCA& a) { return decide(a).empty; }

std::vector<Decision> decide_batch(const std::vector<CCA>& batch) {
  std::vector<Decision> out(batch.size());
  std::vector<std::string> errors(batch.size());
  const auto total = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      out[i] = decide(batch[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw InternalError(e);
  return out;
}

std::vector<Decision> decide_batch_serial(const std::vector<CCA>& batch) {
  std::vector<Decision> out;
  out.reserve(batch.size());
  for (const auto& a : batch) out.push_back(decide(a));
  return out;
}

// ---------------------------------------------------------------------------

std::string witness_to_json(const CCA& a, const AcceptingWitness& w) {
  nlohmann::ordered_json j;
  j["path"] = nlohmann::ordered_json::array();
  for (auto s : w.path) j["path"].push_back(a.name(s));
  j["begin"] = w.begin;
  j["pairs"] = nlohmann::ordered_json::array();
  for (auto [b, e] : w.pairs) j["pairs"].push_back({b, e});
  j["checks"] = w.checks;
  j["end"] = w.end;
  return j.dump();
}

AcceptingWitness witness_from_json(const CCA& a, std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    AcceptingWitness w;
    for (const auto& s : j.at("path")) {
      const auto name = s.get<std::string>();
      const auto id = a.find(name);
      if (!id) throw FormatError("witness names unknown state '" + name + "'");
      w.path.push_back(*id);
    }
    w.begin = j.at("begin").get<std::size_t>();
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw FormatError("pairs must be [b,e] arrays");
      w.pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    w.checks = j.at("checks").get<std::vector<std::size_t>>();
    w.end = j.at("end").get<std::size_t>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace omegat::emptiness
