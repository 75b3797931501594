#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omegat/cca.hpp"
#include "omegat/nfa.hpp"

namespace omegat::emptiness {

using cca::CCA;

/// A finite state path from the initial state together with the indexes
/// begin < b1 < e1 < ... < bN < eN < end <= |path|-1 and one check index
/// c_k in (eN, end) per counter. The ordered form additionally has
/// c1 < ... < cN.
struct AcceptingWitness {
  std::vector<cca::StateId> path;
  std::size_t begin = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> checks;
  std::size_t end = 0;

  friend bool operator==(const AcceptingWitness&, const AcceptingWitness&) = default;
};

/// First violated witness condition, or nullopt when `w` is a witness.
/// Reads states only, never counter values. Requires a simple automaton.
std::optional<std::string> witness_defect(const CCA& a, const AcceptingWitness& w);
bool verify_witness(const CCA& a, const AcceptingWitness& w);
bool checks_ordered(const AcceptingWitness& w);

inline constexpr std::size_t kDefaultDepth = 40;

/// Breadth-first search over state paths of at most `depth` transitions,
/// scanning each path for an index assignment (checks in any order).
/// Returns a witness whose `end` is minimal. Independent of the NFA
/// pipeline.
std::optional<AcceptingWitness> brute_force_witness(const CCA& a,
                                                    std::size_t depth = kDefaultDepth);

/// Role of a potential-witness NFA state.
enum class Phase {
  start,      // q0: before begin
  pair_wait,  // q^k_{s'}: waiting for b_k
  pair_open,  // q^k_{s's''}: between b_k and e_k
  checks,     // hatted q^k_{s'}: waiting for c_k
  closing,    // q^end_{s'}: waiting for end
  accept,     // q_end
};

struct PhaseInfo {
  Phase phase = Phase::start;
  std::uint32_t k = 0;
  cca::StateId anchor = 0;  // s'
  cca::StateId inc = 0;     // s'' (pair_open only)
};

struct PotentialWitnessNfa {
  nfa::Nfa nfa;
  std::vector<PhaseInfo> info;
};

/// NFA over the state alphabet of `a` accepting the state sequences that
/// embed a witness with ordered checks. Requires a simple automaton.
PotentialWitnessNfa build_potential_witness_nfa(const CCA& a);

/// 2 + 2N|S| + N|S|^2 + |S|
std::size_t potential_witness_bound(const CCA& a);

/// Accepts the state sequences s0 s1 ... sn that are walks from s0.
nfa::Nfa build_prefix_nfa(const CCA& a);

/// Symbols of the state alphabet; state ids double as symbols.
std::vector<nfa::Symbol> as_symbols(const std::vector<cca::StateId>& path);

struct Decision {
  bool empty = true;
  CCA simple = CCA({}, 1);  // the automaton the witness refers to
  std::optional<AcceptingWitness> witness;
  std::size_t witness_nfa_states = 0;
  std::size_t prefix_nfa_states = 0;
  std::size_t product_states = 0;
};

/// Full pipeline: simplify, build both NFAs, intersect, search. A nonempty
/// answer always carries a witness that has passed verify_witness and the
/// prefix NFA; otherwise InternalError is thrown.
Decision decide(const CCA& a);
bool is_empty(const CCA& a);

/// Independent decisions over a batch, in parallel and serially.
std::vector<Decision> decide_batch(const std::vector<CCA>& batch);
std::vector<Decision> decide_batch_serial(const std::vector<CCA>& batch);

/// {"path":[names],"begin":i,"pairs":[[b,e],...],"checks":[...],"end":j}
std::string witness_to_json(const CCA& a, const AcceptingWitness& w);
/// Throws FormatError.
AcceptingWitness witness_from_json(const CCA& a, std::string_view text);

}  // namespace omegat::emptiness
