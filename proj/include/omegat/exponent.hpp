#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace omegat::expr {

/// Ultimately periodic subset of the positive naturals: an explicit finite
/// part below `threshold`, and from `threshold` on a residue pattern modulo
/// `period`. Closed under union, intersection and difference, which is all
/// the generator DSL needs to describe its closed-form value sets.
class PeriodicSet {
 public:
  static PeriodicSet none();
  static PeriodicSet all();
  static PeriodicSet single(std::uint64_t v);
  static PeriodicSet of(const std::vector<std::uint64_t>& values);
  /// {start, start + step, start + 2 step, ...}
  static PeriodicSet progression(std::uint64_t start, std::uint64_t step);

  bool contains(std::uint64_t v) const;
  bool infinite() const;
  bool empty() const;
  /// Number of elements; only meaningful when !infinite().
  std::size_t finite_size() const;

  PeriodicSet unite(const PeriodicSet& o) const;
  PeriodicSet intersect(const PeriodicSet& o) const;
  PeriodicSet minus(const PeriodicSet& o) const;

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return residues_.size(); }

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  template <typename Op>
  PeriodicSet combine(const PeriodicSet& o, Op op) const;

  std::uint64_t threshold_ = 1;
  std::set<std::uint64_t> below_;  // members < threshold_
  std::vector<bool> residues_{false};  // member iff residues_[v % period]
};

/// Closed DSL of exponent sequences. Each family knows the set of values
/// that occur infinitely often (`recurring`) and finitely often (`transient`)
/// in closed form, so limit properties are decided without sampling.
class ExponentGen {
 public:
  enum class Kind { constant, ramp, staircase, periodic, interleave };

  static ExponentGen constant(std::uint64_t k);
  static ExponentGen ramp(std::uint64_t start, std::uint64_t step);
  static ExponentGen staircase();
  static ExponentGen periodic(std::vector<std::uint64_t> values);
  /// Odd indexes sample `a`, even indexes sample `b`.
  static ExponentGen interleave(ExponentGen a, ExponentGen b);

  Kind kind() const { return node_->kind; }
  const std::vector<std::uint64_t>& params() const { return node_->params; }
  const ExponentGen& first() const { return node_->kids.at(0); }
  const ExponentGen& second() const { return node_->kids.at(1); }

  /// Nesting depth; non-interleave generators have depth 1.
  std::size_t depth() const;

 private:
  struct Node {
    Kind kind;
    std::vector<std::uint64_t> params;
    std::vector<ExponentGen> kids;
  };
  ExponentGen() = default;
  std::shared_ptr<const Node> node_;
};

/// i-th exponent (i >= 1) of the generated sequence.
std::uint64_t sample(const ExponentGen& g, std::uint64_t i);

/// Values occurring infinitely often (N_i).
PeriodicSet recurring_values(const ExponentGen& g);
/// Values occurring finitely (but nonzero) many times (N_f).
PeriodicSet transient_values(const ExponentGen& g);

struct ClassFlags {
  bool bounded = false;
  bool strictly_unbounded = false;
  bool t_holds = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

ClassFlags classify(const ExponentGen& g);

/// Stream an index is routed to by the star = B + S + T decomposition.
enum class Stream { bounded, strict, t };

/// Labels indexes 1..prefix_len: S when the sampled exponent is transient,
/// otherwise B (finitely many recurring values) or T (infinitely many).
std::vector<Stream> prop1_decompose(const ExponentGen& g, std::size_t prefix_len);

/// The leaves plus every interleaving of grid members, up to `depth` levels
/// of interleave nesting (leaves have depth 1).
std::vector<ExponentGen> generator_grid(const std::vector<ExponentGen>& leaves, std::size_t depth);

/// Positions in `gens` whose decomposition of 1..prefix_len breaks the
/// decomposition contract: strict-stream values outside the transient set,
/// other values outside the recurring set, or the B/T label disagreeing with
/// the size of the recurring set. Parallel over generators.
std::vector<std::size_t> check_decompositions(const std::vector<ExponentGen>& gens,
                                              std::size_t prefix_len);
std::vector<std::size_t> check_decompositions_serial(const std::vector<ExponentGen>& gens,
                                                     std::size_t prefix_len);

/// Generator text: `staircase`, `const(k)`, `ramp(start,step)`,
/// `periodic(v1,v2,...)`, `interleave(g1,g2)`. Throws ParseError.
ExponentGen parse_generator(std::string_view text);
std::string to_string(const ExponentGen& g);
std::string to_string(const ClassFlags& f);

}  // namespace omegat::expr
