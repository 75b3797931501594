#include <gtest/gtest.h>

#include "omegat/error.hpp"
#include "omegat/nfa.hpp"
#include "oracles.hpp"

using namespace omegat;
using namespace omegat::nfa;

namespace {

Nfa random_nfa(oracle::Rng& rng, int states, std::size_t alphabet) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alphabet; ++i) names.push_back(std::string(1, char('x' + i)));
  Nfa n(names);
  for (int i = 0; i < states; ++i) n.add_state();
  n.set_initial(0);
  for (int i = 0; i < states; ++i)
    if (oracle::roll(rng, 0, 2) == 0) n.set_final(i);
  for (int i = oracle::roll(rng, 0, 3 * states); i > 0; --i) {
    const auto from = static_cast<StateId>(oracle::roll(rng, 0, states - 1));
    const auto to = static_cast<StateId>(oracle::roll(rng, 0, states - 1));
    const auto sym = static_cast<Symbol>(oracle::roll(rng, 0, static_cast<int>(alphabet) - 1));
    switch (oracle::roll(rng, 0, 4)) {
      case 0: n.add_epsilon(from, to); break;
      case 1: n.add_edge(from, Guard::except({sym}), to); break;
      case 2: n.add_edge(from, Guard::any(), to); break;
      default: n.add_edge(from, Guard::only(sym), to);
    }
  }
  return n;
}

Nfa universal(std::size_t alphabet) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alphabet; ++i) names.push_back(std::string(1, char('x' + i)));
  Nfa n(names);
  n.set_initial(n.add_state());
  n.set_final(0);
  n.add_edge(0, Guard::any(), 0);
  return n;
}

}  // namespace

TEST(Guard, SetOperations) {
  const Guard g = Guard::except({1, 3});
  EXPECT_TRUE(g.matches(0));
  EXPECT_FALSE(g.matches(3));
  EXPECT_EQ(g.intersect(Guard::of({3, 2, 2})), Guard::only(2));
  EXPECT_TRUE(Guard::except({0, 1}).empty(2));
  EXPECT_FALSE(Guard::except({0, 1}).empty(3));
  EXPECT_EQ(Guard::except({0, 1}).first(3), Symbol{2});
  EXPECT_EQ(Guard::of({}).first(3), std::nullopt);
  EXPECT_EQ(Guard::except({1}).intersect(Guard::except({2})), Guard::except({1, 2}));
}

TEST(Accepts, AgreesWithSubsetSimulation) {
  oracle::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Nfa n = random_nfa(rng, 4, 2);
    for (const auto& w : oracle::all_words(2, 4)) ASSERT_EQ(n.accepts(w), oracle::nfa_member(n, w));
  }
}

TEST(Intersect, SmallProductsByMembership) {
  oracle::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Nfa a = random_nfa(rng, 2, 2), b = random_nfa(rng, 2, 2);
    const Product p = intersect(a, b);
    EXPECT_EQ(p.nfa.num_states(), 4u);
    for (const auto& w : oracle::all_words(2, 4))
      ASSERT_EQ(oracle::nfa_member(p.nfa, w), oracle::nfa_member(a, w) && oracle::nfa_member(b, w));
  }
}

TEST(Intersect, ParallelMatchesSerialAndReachable) {
  oracle::Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Nfa a = random_nfa(rng, 6, 3), b = random_nfa(rng, 5, 3);
    const Product par = intersect(a, b), ser = intersect_serial(a, b);
    EXPECT_EQ(par.nfa, ser.nfa);
    EXPECT_EQ(par.origin, ser.origin);
    const Product reach = intersect_reachable(a, b);
    EXPECT_LE(reach.nfa.num_states(), par.nfa.num_states());
    for (const auto& w : oracle::all_words(3, 3))
      ASSERT_EQ(oracle::nfa_member(reach.nfa, w), oracle::nfa_member(par.nfa, w));
  }
}

TEST(Intersect, UniversalIsIdentity) {
  oracle::Rng rng(4);
  const Nfa n = random_nfa(rng, 5, 2);
  const Product p = intersect(n, universal(2));
  for (int i = 0; i < 50; ++i) {
    std::vector<Symbol> w(oracle::roll(rng, 0, 8));
    for (auto& s : w) s = oracle::roll(rng, 0, 1);
    EXPECT_EQ(p.nfa.accepts(w), n.accepts(w));
  }
}

TEST(Intersect, EmptyAnnihilates) {
  oracle::Rng rng(5);
  Nfa none({"x", "y"});
  none.set_initial(none.add_state());
  const Nfa n = random_nfa(rng, 5, 2);
  EXPECT_FALSE(nfa_nonempty(intersect(n, none).nfa));
  EXPECT_FALSE(nfa_nonempty(intersect_reachable(n, none).nfa));
}

TEST(Intersect, AlphabetMismatch) {
  EXPECT_THROW(intersect(universal(2), universal(3)), PreconditionError);
  EXPECT_THROW(intersect_serial(universal(2), universal(3)), PreconditionError);
  EXPECT_THROW(intersect_reachable(universal(2), universal(3)), PreconditionError);
}

TEST(Nonempty, Examples) {
  Nfa unreachable({"x"});
  unreachable.set_initial(unreachable.add_state());
  unreachable.set_final(unreachable.add_state());
  EXPECT_FALSE(nfa_nonempty(unreachable));
  EXPECT_EQ(nfa_nonempty(universal(1)), std::vector<Symbol>{});
}

TEST(Nonempty, ShortestWordIsShortest) {
  oracle::Rng rng(6);
  const auto words = oracle::all_words(2, 5);
  for (int i = 0; i < 100; ++i) {
    const Nfa n = random_nfa(rng, 5, 2);
    const auto run = shortest_run(n);
    std::optional<std::size_t> best;
    for (const auto& w : words)
      if (!best && oracle::nfa_member(n, w)) best = w.size();
    if (!run) {
      EXPECT_FALSE(best) << i;
      continue;
    }
    EXPECT_TRUE(oracle::nfa_member(n, run->word));
    if (best) EXPECT_EQ(run->word.size(), *best);
    EXPECT_EQ(run->states.front(), n.initial());
    EXPECT_TRUE(n.is_final(run->states.back()));
  }
}
