#include "omegat/nfa.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <limits>
#include <unordered_map>

#include "omegat/error.hpp"

namespace omegat::nfa {

namespace {

std::vector<Symbol> normalized(std::vector<Symbol> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Symbol> set_op(const std::vector<Symbol>& a, const std::vector<Symbol>& b, char op) {
  std::vector<Symbol> out;
  switch (op) {
    case '&':
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      break;
    case '-':
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      break;
    default:
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

Guard Guard::of(std::vector<Symbol> s) { return Guard{false, normalized(std::move(s))}; }
Guard Guard::except(std::vector<Symbol> s) { return Guard{true, normalized(std::move(s))}; }

bool Guard::matches(Symbol s) const {
  return std::binary_search(symbols.begin(), symbols.end(), s) != complement;
}

Guard Guard::intersect(const Guard& o) const {
  if (!complement && !o.complement) return Guard{false, set_op(symbols, o.symbols, '&')};
  if (!complement) return Guard{false, set_op(symbols, o.symbols, '-')};
  if (!o.complement) return Guard{false, set_op(o.symbols, symbols, '-')};
  return Guard{true, set_op(symbols, o.symbols, '|')};
}

bool Guard::empty(std::size_t alphabet_size) const {
  if (!complement) return symbols.empty();
  return std::count_if(symbols.begin(), symbols.end(),
                       [&](Symbol s) { return s < alphabet_size; }) ==
         static_cast<std::ptrdiff_t>(alphabet_size);
}

std::optional<Symbol> Guard::first(std::size_t alphabet_size) const {
  if (!complement) {
    if (symbols.empty() || symbols.front() >= alphabet_size) return std::nullopt;
    return symbols.front();
  }
  for (Symbol s = 0; s < alphabet_size; ++s)
    if (!std::binary_search(symbols.begin(), symbols.end(), s)) return s;
  return std::nullopt;
}

Nfa::Nfa(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}

StateId Nfa::add_state(std::string name) {
  names_.push_back(std::move(name));
  final_.push_back(false);
  out_.emplace_back();
  return static_cast<StateId>(final_.size() - 1);
}

void Nfa::add_edge(StateId from, Guard guard, StateId to) {
  if (from >= num_states() || to >= num_states()) throw PreconditionError("edge state out of range");
  out_[from].push_back(edges_.size());
  edges_.push_back(Edge{from, false, std::move(guard), to});
}

void Nfa::add_epsilon(StateId from, StateId to) {
  if (from >= num_states() || to >= num_states()) throw PreconditionError("edge state out of range");
  out_[from].push_back(edges_.size());
  edges_.push_back(Edge{from, true, {}, to});
}

void Nfa::set_initial(StateId s) {
  if (s >= num_states()) throw PreconditionError("initial state out of range");
  initial_ = s;
}

void Nfa::set_final(StateId s, bool final) { final_.at(s) = final; }

bool Nfa::accepts(const std::vector<Symbol>& word) const {
  if (num_states() == 0) return false;
  std::vector<char> cur(num_states(), 0);
  auto close = [&](std::vector<char>& set) {
    std::vector<StateId> stack;
    for (StateId s = 0; s < set.size(); ++s)
      if (set[s]) stack.push_back(s);
    while (!stack.empty()) {
      const StateId s = stack.back();
      stack.pop_back();
      for (auto i : out_[s]) {
        const Edge& e = edges_[i];
        if (e.epsilon && !set[e.to]) {
          set[e.to] = 1;
          stack.push_back(e.to);
        }
      }
    }
  };
  cur[initial_] = 1;
  close(cur);
  for (Symbol a : word) {
    std::vector<char> next(num_states(), 0);
    for (StateId s = 0; s < cur.size(); ++s) {
      if (!cur[s]) continue;
      for (auto i : out_[s]) {
        const Edge& e = edges_[i];
        if (!e.epsilon && e.guard.matches(a)) next[e.to] = 1;
      }
    }
    close(next);
    cur.swap(next);
  }
  for (StateId s = 0; s < cur.size(); ++s)
    if (cur[s] && final_[s]) return true;
  return false;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
  if (a.alphabet() != b.alphabet()) throw PreconditionError("intersect: alphabets differ");
}

// Edges leaving product state (p, q), in a fixed order: joint symbol moves,
// then epsilon moves of the left factor, then of the right factor.
template <typename Emit>
void product_row(const Nfa& a, const Nfa& b, StateId p, StateId q, Emit&& emit) {
  const std::size_t sigma = a.alphabet().size();
  for (auto i : a.outgoing(p)) {
    const Edge& e1 = a.edges()[i];
    if (e1.epsilon) continue;
    for (auto j : b.outgoing(q)) {
      const Edge& e2 = b.edges()[j];
      if (e2.epsilon) continue;
      Guard g = e1.guard.intersect(e2.guard);
      if (!g.empty(sigma)) emit(false, std::move(g), e1.to, e2.to);
    }
  }
  for (auto i : a.outgoing(p))
    if (a.edges()[i].epsilon) emit(true, Guard{}, a.edges()[i].to, q);
  for (auto j : b.outgoing(q))
    if (b.edges()[j].epsilon) emit(true, Guard{}, p, b.edges()[j].to);
}

struct RowEdge {
  bool epsilon;
  Guard guard;
  StateId p, q;
};

Product assemble_full(const Nfa& a, const Nfa& b, const std::vector<std::vector<RowEdge>>& rows) {
  const std::size_t nb = b.num_states();
  Product out{Nfa(a.alphabet()), {}};
  out.origin.reserve(a.num_states() * nb);
  for (StateId p = 0; p < a.num_states(); ++p)
    for (StateId q = 0; q < nb; ++q) {
      const StateId id = out.nfa.add_state();
      out.nfa.set_final(id, a.is_final(p) && b.is_final(q));
      out.origin.emplace_back(p, q);
    }
  if (a.num_states() && nb) out.nfa.set_initial(a.initial() * nb + b.initial());
  for (StateId r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) {
      const StateId to = static_cast<StateId>(e.p * nb + e.q);
      if (e.epsilon)
        out.nfa.add_epsilon(r, to);
      else
        out.nfa.add_edge(r, e.guard, to);
    }
  return out;
}

std::vector<RowEdge> row_of(const Nfa& a, const Nfa& b, std::size_t r) {
  const std::size_t nb = b.num_states();
  std::vector<RowEdge> row;
  product_row(a, b, static_cast<StateId>(r / nb), static_cast<StateId>(r % nb),
              [&](bool eps, Guard g, StateId p, StateId q) {
                row.push_back(RowEdge{eps, std::move(g), p, q});
              });
  return row;
}

}  // namespace

Product intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const std::size_t n = a.num_states() * b.num_states();
  std::vector<std::vector<RowEdge>> rows(n);
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < total; ++r) rows[r] = row_of(a, b, static_cast<std::size_t>(r));
  return assemble_full(a, b, rows);
}

Product intersect_serial(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const std::size_t n = a.num_states() * b.num_states();
  std::vector<std::vector<RowEdge>> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = row_of(a, b, r);
  return assemble_full(a, b, rows);
}

Product intersect_reachable(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Product out{Nfa(a.alphabet()), {}};
  if (a.num_states() == 0 || b.num_states() == 0) return out;
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<StateId> todo;
  auto id_of = [&](StateId p, StateId q) {
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, fresh] = ids.try_emplace(key, 0);
    if (fresh) {
      it->second = out.nfa.add_state();
      out.nfa.set_final(it->second, a.is_final(p) && b.is_final(q));
      out.origin.emplace_back(p, q);
      todo.push_back(it->second);
    }
    return it->second;
  };
  out.nfa.set_initial(id_of(a.initial(), b.initial()));
  while (!todo.empty()) {
    const StateId cur = todo.front();
    todo.pop_front();
    const auto [p, q] = out.origin[cur];
    product_row(a, b, p, q, [&](bool eps, Guard g, StateId p2, StateId q2) {
      const StateId to = id_of(p2, q2);
      if (eps)
        out.nfa.add_epsilon(cur, to);
      else
        out.nfa.add_edge(cur, std::move(g), to);
    });
  }
  return out;
}

std::optional<Run> shortest_run(const Nfa& n) {
  if (n.num_states() == 0) return std::nullopt;
  // 0-1 breadth-first search: epsilon edges cost nothing, letters cost one.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n.num_states(), kInf);
  std::vector<std::size_t> via(n.num_states(), kNone);
  std::vector<char> done(n.num_states(), 0);
  std::deque<StateId> dq;
  dist[n.initial()] = 0;
  dq.push_back(n.initial());
  const std::size_t sigma = n.alphabet().size();
  std::optional<StateId> goal;
  while (!dq.empty()) {
    const StateId s = dq.front();
    dq.pop_front();
    if (done[s]) continue;
    done[s] = 1;
    if (n.is_final(s)) {
      goal = s;
      break;
    }
    for (auto i : n.outgoing(s)) {
      const Edge& e = n.edges()[i];
      if (!e.epsilon && e.guard.empty(sigma)) continue;
      const std::size_t w = e.epsilon ? 0 : 1;
      if (dist[s] + w < dist[e.to]) {
        dist[e.to] = dist[s] + w;
        via[e.to] = i;
        if (w == 0)
          dq.push_front(e.to);
        else
          dq.push_back(e.to);
      }
    }
  }
  if (!goal) return std::nullopt;
  std::vector<std::size_t> path;
  for (StateId s = *goal; via[s] != kNone; s = n.edges()[via[s]].from) path.push_back(via[s]);
  std::reverse(path.begin(), path.end());
  Run run;
  run.states.push_back(n.initial());
  for (auto i : path) {
    const Edge& e = n.edges()[i];
    if (!e.epsilon) run.word.push_back(*e.guard.first(sigma));
    run.states.push_back(e.to);
  }
  return run;
}

std::optional<std::vector<Symbol>> nfa_nonempty(const Nfa& n) {
  auto run = shortest_run(n);
  if (!run) return std::nullopt;
  return run->word;
}

}  // namespace omegat::nfa
