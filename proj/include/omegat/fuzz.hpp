#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "omegat/cca.hpp"

namespace omegat::fuzz {

using cca::CCA;

struct Shape {
  std::size_t max_states = 8;
  std::uint32_t max_counters = 2;
  std::size_t max_transitions = 14;
};

/// Random simple automaton over {a, b}. Every state is a check, inc, letter,
/// choice (epsilon fan-out) or stuck state; the total transition count stays
/// within `shape.max_transitions`.
CCA random_simple_cca(std::mt19937_64& rng, const Shape& shape = {});

/// Seed of case `index` under `master`; independent of thread scheduling.
std::uint64_t case_seed(std::uint64_t master, std::size_t index);

struct CaseResult {
  bool empty = true;
  bool oracle_found = false;     // at the base depth
  std::size_t witness_end = 0;   // pipeline witness, when nonempty
  std::size_t n1_states = 0;
  std::size_t n1_bound = 0;
  std::optional<std::string> failure;
};

/// Runs the pipeline on `a` and cross-checks it: oracle agreement in both
/// directions, the certificate, and the potential-witness NFA size bound.
CaseResult check_case(const CCA& a, std::size_t depth);

/// Greedy deletion of transitions, then of states, while `fails` holds.
CCA minimize(const CCA& a, const std::function<bool(const CCA&)>& fails);

struct Failure {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string reason;
  CCA automaton = CCA({}, 1);
  CCA minimized = CCA({}, 1);
};

struct Report {
  std::size_t cases = 0;
  std::size_t nonempty = 0;
  std::size_t oracle_found = 0;
  bool bound_held = true;
  std::vector<Failure> failures;  // by case index

  bool ok() const { return failures.empty(); }
};

Report run(std::uint64_t seed, std::size_t cases, std::size_t depth, const Shape& shape = {});
Report run_serial(std::uint64_t seed, std::size_t cases, std::size_t depth,
                  const Shape& shape = {});

}  // namespace omegat::fuzz
