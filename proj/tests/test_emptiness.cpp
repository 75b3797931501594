#include <gtest/gtest.h>

#include "omegat/cca.hpp"
#include "omegat/emptiness.hpp"
#include "omegat/error.hpp"
#include "omegat/fuzz.hpp"
#include "omegat/translate.hpp"
#include "oracles.hpp"

using namespace omegat;
using namespace omegat::emptiness;
using cca::kEpsilon;
using cca::Op;

namespace {

// hat of the base automaton for `a`: s0 -a-> sf, sf inc-loop, sf check-back.
CCA hat_a() {
  CCA a({'a'}, 1);
  const auto s0 = a.add_state("s0"), sf = a.add_state("sf");
  a.set_initial(s0);
  a.set_final(sf);
  a.add_transition(s0, 'a', sf, 1, Op::no_op);
  a.add_transition(sf, kEpsilon, sf, 1, Op::inc);
  return cca::hat(a);
}

CCA simple_hat_a() { return cca::simplify(hat_a()); }

// Hand-built witness on the simplified hat_a: sf is a choice state with
// successors sf_0 (inc loop) and sf_1 (check back to s0).
AcceptingWitness hand_witness(const CCA& a) {
  auto id = [&](const char* n) { return *a.find(n); };
  AcceptingWitness w;
  w.path = {id("s0"), id("sf"), id("sf_0"), id("sf"), id("sf_0"), id("sf"), id("sf_1"), id("s0")};
  w.begin = 0;
  w.pairs = {{2, 4}};
  w.checks = {6};
  w.end = 7;
  return w;
}

}  // namespace

TEST(Verify, HandBuiltWitness) {
  const CCA a = simple_hat_a();
  ASSERT_TRUE(a.find("sf_0") && a.find("sf_1"));
  ASSERT_EQ(a.transitions()[a.outgoing(*a.find("sf_0")).front()].op, Op::inc);
  const auto w = hand_witness(a);
  EXPECT_TRUE(verify_witness(a, w)) << witness_defect(a, w).value_or("");
  EXPECT_TRUE(oracle::path_has_witness(a, w.path));

  auto same = w;
  same.pairs = {{2, 2}};
  EXPECT_FALSE(verify_witness(a, same));

  auto through_check = w;
  through_check.path = {w.path[0], w.path[1], w.path[2], w.path[3], w.path[6], w.path[7]};
  through_check.pairs = {{2, 4}};
  through_check.checks = {4};
  through_check.end = 5;
  EXPECT_FALSE(verify_witness(a, through_check));

  auto bad_walk = w;
  bad_walk.path[3] = w.path[0];
  EXPECT_FALSE(verify_witness(a, bad_walk));

  EXPECT_THROW(verify_witness(hat_a(), w), PreconditionError);
}

TEST(BruteForce, Examples) {
  CCA empty({'a'}, 1);
  empty.set_initial(empty.add_state("s0"));
  empty.set_final(empty.add_state("sf"));
  EXPECT_FALSE(brute_force_witness(cca::hat(empty), 30));

  const auto w = brute_force_witness(simple_hat_a(), 10);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(simple_hat_a(), *w));
  EXPECT_LE(w->end, 10u);

  CCA no_check2({'a'}, 2);
  const auto s = no_check2.add_state("s"), t = no_check2.add_state("t"),
             u = no_check2.add_state("u"), v = no_check2.add_state("v");
  no_check2.add_transition(s, 'a', t, 1, Op::no_op);
  no_check2.add_transition(t, kEpsilon, u, 1, Op::inc);
  no_check2.add_transition(u, kEpsilon, v, 2, Op::inc);
  no_check2.add_transition(v, kEpsilon, s, 1, Op::check);
  for (std::size_t d : {5u, 20u, 60u}) EXPECT_FALSE(brute_force_witness(no_check2, d));
  EXPECT_TRUE(is_empty(no_check2));
}

TEST(Property, BruteForceMatchesExhaustivePaths) {
  // The brute force is itself an oracle; check it against plain enumeration
  // of paths and index assignments on tiny automata.
  oracle::Rng rng(31);
  fuzz::Shape shape{4, 1, 7};
  for (int i = 0; i < 150; ++i) {
    const CCA a = fuzz::random_simple_cca(rng, shape);
    for (std::size_t depth : {6u, 9u}) {
      const auto w = brute_force_witness(a, depth);
      ASSERT_EQ(w.has_value(), oracle::has_witness_within(a, depth)) << i;
      if (w) EXPECT_TRUE(verify_witness(a, *w));
    }
  }
}

TEST(PotentialNfa, BoundAndShape) {
  const CCA a = simple_hat_a();
  const auto n1 = build_potential_witness_nfa(a);
  EXPECT_LE(n1.nfa.num_states(), potential_witness_bound(a));
  EXPECT_TRUE(nfa::nfa_nonempty(n1.nfa));

  CCA eps_only({'a'}, 1);
  const auto s = eps_only.add_state("s");
  eps_only.add_transition(s, kEpsilon, s, 1, Op::inc);
  const auto trivial = build_potential_witness_nfa(eps_only);
  EXPECT_EQ(trivial.nfa.num_states(), 2u);
  EXPECT_FALSE(nfa::nfa_nonempty(trivial.nfa));
}

TEST(PrefixNfa, Walks) {
  const CCA a = simple_hat_a();
  const auto p = build_prefix_nfa(a);
  auto id = [&](const char* n) { return *a.find(n); };
  EXPECT_TRUE(p.accepts(as_symbols({id("s0")})));
  EXPECT_TRUE(p.accepts(as_symbols({id("s0"), id("sf"), id("sf_0"), id("sf"), id("sf_1"), id("s0")})));
  EXPECT_FALSE(p.accepts(as_symbols({id("s0"), id("sf_1")})));
  EXPECT_FALSE(p.accepts(as_symbols({id("sf")})));
  EXPECT_FALSE(p.accepts({}));
}

TEST(Decide, Examples) {
  CCA empty({'a'}, 1);
  empty.set_initial(empty.add_state("s0"));
  empty.set_final(empty.add_state("sf"));
  EXPECT_TRUE(is_empty(cca::hat(empty)));

  const auto d = decide(hat_a());
  ASSERT_FALSE(d.empty);
  EXPECT_TRUE(verify_witness(d.simple, *d.witness));
  EXPECT_TRUE(checks_ordered(*d.witness));
}

TEST(Decide, BatchMatchesSerial) {
  oracle::Rng rng(41);
  std::vector<CCA> batch;
  for (int i = 0; i < 40; ++i) batch.push_back(fuzz::random_simple_cca(rng));
  const auto par = decide_batch(batch), ser = decide_batch_serial(batch);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].empty, ser[i].empty);
    EXPECT_EQ(par[i].witness, ser[i].witness);
  }
}

TEST(Property, OracleAgreement) {
  // The fuzz harness runs the same check; here every case is also required
  // to keep the certificate and the size bound.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto report = fuzz::run(seed, 200, kDefaultDepth);
    EXPECT_TRUE(report.ok()) << (report.ok() ? "" : report.failures.front().reason);
    EXPECT_TRUE(report.bound_held);
    EXPECT_GT(report.nonempty, 20u);
    EXPECT_GT(report.cases - report.nonempty, 20u);
  }
}

TEST(Property, AddingTransitionsKeepsNonemptiness) {
  oracle::Rng rng(51);
  int flips_checked = 0;
  for (int i = 0; i < 200; ++i) {
    const CCA a = fuzz::random_simple_cca(rng);
    if (is_empty(a)) continue;
    CCA b = a;
    for (int j = oracle::roll(rng, 1, 4); j > 0; --j) {
      const auto from = static_cast<cca::StateId>(oracle::roll(rng, 0, static_cast<int>(b.num_states()) - 1));
      const auto to = static_cast<cca::StateId>(oracle::roll(rng, 0, static_cast<int>(b.num_states()) - 1));
      const auto k = static_cast<std::uint32_t>(oracle::roll(rng, 1, static_cast<int>(b.counters())));
      switch (oracle::roll(rng, 0, 2)) {
        case 0: b.add_transition(from, 'a', to, 1, Op::no_op); break;
        case 1: b.add_transition(from, kEpsilon, to, k, Op::inc); break;
        default: b.add_transition(from, kEpsilon, to, k, Op::check);
      }
    }
    EXPECT_FALSE(is_empty(b)) << cca::export_automaton(b, cca::Format::json);
    ++flips_checked;
  }
  EXPECT_GT(flips_checked, 30);
}

TEST(WitnessJson, RoundTrip) {
  const auto d = decide(hat_a());
  const std::string text = witness_to_json(d.simple, *d.witness);
  EXPECT_EQ(witness_from_json(d.simple, text), *d.witness);
  EXPECT_THROW(witness_from_json(d.simple, "{\"path\":[\"nope\"]}"), FormatError);
  EXPECT_THROW(witness_from_json(d.simple, "[1,2"), FormatError);
}

TEST(Compiled, ShortestOracleWitnessForTStar) {
  const CCA a = cca::simplify(translate::compile(expr::parse_omega_t("(a^T b)^w")));
  const auto w = brute_force_witness(a, 60);
  ASSERT_TRUE(w);
  EXPECT_LE(w->end, 60u);
  EXPECT_FALSE(brute_force_witness(a, w->end - 1));
}
