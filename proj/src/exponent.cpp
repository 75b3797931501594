#include "omegat/exponent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "omegat/error.hpp"

namespace omegat::expr {

PeriodicSet PeriodicSet::none() { return PeriodicSet{}; }

PeriodicSet PeriodicSet::all() {
  PeriodicSet s;
  s.residues_ = {true};
  return s;
}

PeriodicSet PeriodicSet::single(std::uint64_t v) { return of({v}); }

PeriodicSet PeriodicSet::of(const std::vector<std::uint64_t>& values) {
  PeriodicSet s;
  for (auto v : values) {
    if (v == 0) continue;
    s.below_.insert(v);
    s.threshold_ = std::max(s.threshold_, v + 1);
  }
  return s;
}

PeriodicSet PeriodicSet::progression(std::uint64_t start, std::uint64_t step) {
  if (start == 0 || step == 0)
    throw PreconditionError("progression: start and step must be positive");
  PeriodicSet s;
  s.threshold_ = start;
  s.residues_.assign(step, false);
  s.residues_[start % step] = true;
  return s;
}

bool PeriodicSet::contains(std::uint64_t v) const {
  if (v == 0) return false;
  if (v < threshold_) return below_.contains(v);
  return residues_[v % residues_.size()];
}

bool PeriodicSet::infinite() const {
  return std::find(residues_.begin(), residues_.end(), true) != residues_.end();
}

bool PeriodicSet::empty() const { return below_.empty() && !infinite(); }

std::size_t PeriodicSet::finite_size() const { return below_.size(); }

template <typename Op>
PeriodicSet PeriodicSet::combine(const PeriodicSet& o, Op op) const {
  PeriodicSet r;
  r.threshold_ = std::max(threshold_, o.threshold_);
  const std::uint64_t len = std::lcm(period(), o.period());
  r.residues_.assign(len, false);
  for (std::uint64_t v = r.threshold_; v < r.threshold_ + len; ++v)
    r.residues_[v % len] = op(contains(v), o.contains(v));
  for (std::uint64_t v = 1; v < r.threshold_; ++v)
    if (op(contains(v), o.contains(v))) r.below_.insert(v);
  return r;
}

PeriodicSet PeriodicSet::unite(const PeriodicSet& o) const {
  return combine(o, [](bool a, bool b) { return a || b; });
}

PeriodicSet PeriodicSet::intersect(const PeriodicSet& o) const {
  return combine(o, [](bool a, bool b) { return a && b; });
}

PeriodicSet PeriodicSet::minus(const PeriodicSet& o) const {
  return combine(o, [](bool a, bool b) { return a && !b; });
}

// ---------------------------------------------------------------------------

ExponentGen ExponentGen::constant(std::uint64_t k) {
  if (k == 0) throw PreconditionError("const: exponent must be positive");
  ExponentGen g;
  g.node_ = std::make_shared<const Node>(Node{Kind::constant, {k}, {}});
  return g;
}

ExponentGen ExponentGen::ramp(std::uint64_t start, std::uint64_t step) {
  if (start == 0 || step == 0) throw PreconditionError("ramp: start and step must be positive");
  ExponentGen g;
  g.node_ = std::make_shared<const Node>(Node{Kind::ramp, {start, step}, {}});
  return g;
}

ExponentGen ExponentGen::staircase() {
  ExponentGen g;
  g.node_ = std::make_shared<const Node>(Node{Kind::staircase, {}, {}});
  return g;
}

ExponentGen ExponentGen::periodic(std::vector<std::uint64_t> values) {
  if (values.empty()) throw PreconditionError("periodic: value list must be nonempty");
  if (std::find(values.begin(), values.end(), 0u) != values.end())
    throw PreconditionError("periodic: values must be positive");
  ExponentGen g;
  g.node_ = std::make_shared<const Node>(Node{Kind::periodic, std::move(values), {}});
  return g;
}

ExponentGen ExponentGen::interleave(ExponentGen a, ExponentGen b) {
  ExponentGen g;
  g.node_ = std::make_shared<const Node>(Node{Kind::interleave, {}, {std::move(a), std::move(b)}});
  return g;
}

std::size_t ExponentGen::depth() const {
  if (kind() != Kind::interleave) return 1;
  return 1 + std::max(first().depth(), second().depth());
}

std::uint64_t sample(const ExponentGen& g, std::uint64_t i) {
  if (i == 0) throw PreconditionError("sample: index must be >= 1");
  switch (g.kind()) {
    case ExponentGen::Kind::constant:
      return g.params()[0];
    case ExponentGen::Kind::ramp:
      return g.params()[0] + (i - 1) * g.params()[1];
    case ExponentGen::Kind::staircase: {
      // Row r holds indexes r(r-1)/2 + 1 .. r(r+1)/2 with values 1..r.
      auto r = static_cast<std::uint64_t>(
          std::ceil((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0));
      while (r * (r + 1) / 2 < i) ++r;
      while (r > 1 && (r - 1) * r / 2 >= i) --r;
      return i - r * (r - 1) / 2;
    }
    case ExponentGen::Kind::periodic:
      return g.params()[(i - 1) % g.params().size()];
    case ExponentGen::Kind::interleave:
      return i % 2 == 1 ? sample(g.first(), (i + 1) / 2) : sample(g.second(), i / 2);
  }
  return 0;
}

PeriodicSet recurring_values(const ExponentGen& g) {
  switch (g.kind()) {
    case ExponentGen::Kind::constant:
      return PeriodicSet::single(g.params()[0]);
    case ExponentGen::Kind::ramp:
      return PeriodicSet::none();
    case ExponentGen::Kind::staircase:
      return PeriodicSet::all();
    case ExponentGen::Kind::periodic:
      return PeriodicSet::of(g.params());
    case ExponentGen::Kind::interleave:
      return recurring_values(g.first()).unite(recurring_values(g.second()));
  }
  return PeriodicSet::none();
}

PeriodicSet transient_values(const ExponentGen& g) {
  switch (g.kind()) {
    case ExponentGen::Kind::ramp:
      return PeriodicSet::progression(g.params()[0], g.params()[1]);
    case ExponentGen::Kind::interleave: {
      // A value seen infinitely often on either side recurs in the merge.
      PeriodicSet seen = transient_values(g.first()).unite(transient_values(g.second()));
      return seen.minus(recurring_values(g));
    }
    default:
      return PeriodicSet::none();
  }
}

ClassFlags classify(const ExponentGen& g) {
  const PeriodicSet recurring = recurring_values(g);
  const PeriodicSet occurring = recurring.unite(transient_values(g));
  ClassFlags f;
  f.bounded = !occurring.infinite();
  f.strictly_unbounded = recurring.empty() && occurring.infinite();
  f.t_holds = recurring.infinite();
  return f;
}

std::vector<Stream> prop1_decompose(const ExponentGen& g, std::size_t prefix_len) {
  const PeriodicSet transient = transient_values(g);
  const Stream rest = recurring_values(g).infinite() ? Stream::t : Stream::bounded;
  std::vector<Stream> out(prefix_len);
  for (std::size_t j = 1; j <= prefix_len; ++j)
    out[j - 1] = transient.contains(sample(g, j)) ? Stream::strict : rest;
  return out;
}

std::vector<ExponentGen> generator_grid(const std::vector<ExponentGen>& leaves,
                                       std::size_t depth) {
  std::vector<ExponentGen> grid = leaves;
  for (std::size_t d = 2; d <= depth; ++d) {
    std::vector<ExponentGen> next = leaves;
    for (const auto& a : grid)
      for (const auto& b : grid) next.push_back(ExponentGen::interleave(a, b));
    grid = std::move(next);
  }
  return grid;
}

namespace {

bool decomposition_holds(const ExponentGen& g, std::size_t prefix_len) {
  const PeriodicSet recurring = recurring_values(g), transient = transient_values(g);
  const Stream rest = recurring.infinite() ? Stream::t : Stream::bounded;
  const auto labels = prop1_decompose(g, prefix_len);
  if (labels.size() != prefix_len) return false;
  for (std::size_t j = 1; j <= prefix_len; ++j) {
    const std::uint64_t v = sample(g, j);
    const Stream s = labels[j - 1];
    if (s == Stream::strict ? !transient.contains(v) : (s != rest || !recurring.contains(v)))
      return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> check_decompositions(const std::vector<ExponentGen>& gens,
                                              std::size_t prefix_len) {
  std::vector<char> ok(gens.size(), 0);
  const auto n = static_cast<long long>(gens.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) ok[i] = decomposition_holds(gens[i], prefix_len);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!ok[i]) bad.push_back(i);
  return bad;
}

std::vector<std::size_t> check_decompositions_serial(const std::vector<ExponentGen>& gens,
                                                     std::size_t prefix_len) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!decomposition_holds(gens[i], prefix_len)) bad.push_back(i);
  return bad;
}

// ---------------------------------------------------------------------------

namespace {

class GenReader {
 public:
  explicit GenReader(std::string_view text) : text_(text) {}

  ExponentGen read() {
    ExponentGen g = gen();
    skip_ws();
    if (at_ != text_.size()) throw ParseError("trailing characters in generator", at_);
    return g;
  }

 private:
  void skip_ws() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
  }

  void expect(char c) {
    skip_ws();
    if (at_ >= text_.size() || text_[at_] != c)
      throw ParseError(std::string("expected '") + c + "'", at_);
    ++at_;
  }

  bool accept(char c) {
    skip_ws();
    if (at_ < text_.size() && text_[at_] == c) {
      ++at_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    std::size_t b = at_;
    while (at_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_')) ++at_;
    return std::string(text_.substr(b, at_ - b));
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t b = at_;
    while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) ++at_;
    if (b == at_) throw ParseError("expected a number", at_);
    const std::uint64_t v = std::stoull(std::string(text_.substr(b, at_ - b)));
    if (v == 0) throw ParseError("exponents must be positive", b);
    return v;
  }

  ExponentGen gen() {
    const std::size_t pos = at_;
    const std::string name = word();
    if (name == "staircase") return ExponentGen::staircase();
    if (name == "const" || name == "constant") {
      expect('(');
      auto k = number();
      expect(')');
      return ExponentGen::constant(k);
    }
    if (name == "ramp") {
      expect('(');
      auto start = number();
      expect(',');
      auto step = number();
      expect(')');
      return ExponentGen::ramp(start, step);
    }
    if (name == "periodic") {
      expect('(');
      std::vector<std::uint64_t> vs{number()};
      while (accept(',')) vs.push_back(number());
      expect(')');
      return ExponentGen::periodic(std::move(vs));
    }
    if (name == "interleave") {
      expect('(');
      ExponentGen a = gen();
      expect(',');
      ExponentGen b = gen();
      expect(')');
      return ExponentGen::interleave(std::move(a), std::move(b));
    }
    throw ParseError("unknown generator '" + name + "'", pos);
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

}  // namespace

ExponentGen parse_generator(std::string_view text) { return GenReader(text).read(); }

std::string to_string(const ExponentGen& g) {
  const auto& p = g.params();
  switch (g.kind()) {
    case ExponentGen::Kind::constant:
      return "const(" + std::to_string(p[0]) + ")";
    case ExponentGen::Kind::ramp:
      return "ramp(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
    case ExponentGen::Kind::staircase:
      return "staircase";
    case ExponentGen::Kind::periodic: {
      std::string s = "periodic(";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
      return s + ")";
    }
    case ExponentGen::Kind::interleave:
      return "interleave(" + to_string(g.first()) + "," + to_string(g.second()) + ")";
  }
  return {};
}

std::string to_string(const ClassFlags& f) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::string("bounded=") + b(f.bounded) + " strictly_unbounded=" + b(f.strictly_unbounded) +
         " T=" + b(f.t_holds);
}

}  // namespace omegat::expr
