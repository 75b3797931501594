#include <gtest/gtest.h>

#include <set>

#include "omegat/cca.hpp"
#include "omegat/emptiness.hpp"
#include "omegat/error.hpp"
#include "omegat/translate.hpp"
#include "oracles.hpp"

using namespace omegat;
using namespace omegat::translate;
using cca::kEpsilon;
using cca::Op;
using cca::Transition;

namespace {

const cca::Alphabet kAb{'a', 'b'};

std::size_t count_if(const cca::CCA& a, auto pred) {
  std::size_t n = 0;
  for (const auto& t : a.transitions()) n += pred(t);
  return n;
}

}  // namespace

TEST(Thompson, MatchesRegexMembership) {
  oracle::Rng rng(1);
  const auto words = oracle::all_words(2, 5);
  for (int i = 0; i < 100; ++i) {
    const auto r = oracle::random_regex(rng, 5);
    const auto n = thompson(r, kAb);
    for (const auto& w : words) {
      std::string s;
      for (auto c : w) s.push_back("ab"[c]);
      ASSERT_EQ(n.accepts(w), oracle::regex_matches(r, s)) << expr::to_string(r) << " " << s;
    }
  }
}

TEST(CompileT, BaseCases) {
  const auto e = compile_t(expr::parse_t("0"));
  ASSERT_EQ(e.automata.size(), 1u);
  EXPECT_EQ(e.automata[0].num_states(), 2u);
  EXPECT_EQ(e.automata[0].transitions().size(), 0u);
  EXPECT_EQ(e.automata[0].counters(), 1u);

  const auto a = compile_t(expr::parse_t("a")).automata.at(0);
  EXPECT_EQ(a.num_states(), 2u);
  ASSERT_EQ(a.transitions().size(), 2u);
  const auto s0 = a.initial(), sf = *a.final_state();
  EXPECT_TRUE(a.has_transition(Transition{s0, 'a', sf, 1, Op::no_op}));
  EXPECT_TRUE(a.has_transition(Transition{sf, kEpsilon, sf, 1, Op::inc}));
}

TEST(CompileT, ConcatSumT) {
  const auto ab = compile_t(expr::parse_t("a b"));
  ASSERT_EQ(ab.automata.size(), 1u);
  EXPECT_EQ(ab.automata[0].counters(), 3u);
  EXPECT_EQ(ab.automata[0].num_states(), 5u);

  const auto sum = compile_t(expr::parse_t("a + b"));
  ASSERT_EQ(sum.automata.size(), 3u);
  for (const auto& m : sum.automata) EXPECT_EQ(m.counters(), 3u);

  const auto t = compile_t(expr::parse_t("a^T")).automata.at(0);
  EXPECT_EQ(t.counters(), 3u);
  const auto sf2 = *t.final_state();
  // Inner final state: the one reading nothing but epsilon besides sf2.
  std::optional<cca::StateId> fa;
  for (const auto& x : t.transitions())
    if (x.to == sf2 && x.from != sf2) fa = x.from;
  ASSERT_TRUE(fa);
  EXPECT_TRUE(t.has_transition(Transition{*fa, kEpsilon, t.initial(), 2, Op::inc}));
  EXPECT_TRUE(t.has_transition(Transition{*fa, kEpsilon, sf2, 2, Op::check}));
  EXPECT_TRUE(t.has_transition(Transition{*fa, kEpsilon, *fa, 3, Op::check}));
}

TEST(CompileT, SumPumpingLoops) {
  // a and b have N=1: A+1 pumps the left final on counter 3, A+2 the right
  // final on counter 2, A+3 the left on 2 and the right on 3.
  const auto sum = compile_t(expr::parse_t("a + b"));
  for (std::size_t v = 0; v < 3; ++v) {
    const auto& m = sum.automata[v];
    const auto sf = *m.final_state();
    std::optional<cca::StateId> fa, fb;
    for (const auto& t : m.transitions()) {
      if (t.to != sf || t.op != Op::check) continue;
      (t.counter == 2 ? fa : fb) = t.from;
    }
    ASSERT_TRUE(fa && fb);
    auto check_loop = [&](cca::StateId s, std::uint32_t k) {
      return m.has_transition(Transition{s, kEpsilon, s, k, Op::check});
    };
    auto inc_loop = [&](cca::StateId s, std::uint32_t k) {
      return m.has_transition(Transition{s, kEpsilon, s, k, Op::inc});
    };
    EXPECT_EQ(check_loop(*fa, 3), v == 0) << v;
    EXPECT_EQ(inc_loop(*fa, 3), v == 0) << v;
    EXPECT_EQ(check_loop(*fb, 2), v == 1) << v;
    EXPECT_EQ(inc_loop(*fb, 2), v == 1) << v;
    EXPECT_EQ(check_loop(*fa, 2), v == 2) << v;
    EXPECT_EQ(check_loop(*fb, 3), v == 2) << v;
    // The members' own inc loops, shifted, are always there.
    EXPECT_TRUE(inc_loop(*fa, 2));
    EXPECT_TRUE(inc_loop(*fb, 3));
  }
}

TEST(CompileT, FinalContractOnEveryMember) {
  oracle::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    Compiler c(kAb, true);
    c.compile_t(oracle::random_texpr(rng, 4));
    for (const auto& set : c.intermediate())
      for (const auto& m : set.automata) ASSERT_TRUE(cca::satisfies_final_contract(m)) << set.expression;
  }
}

TEST(Property, CounterArithmetic) {
  oracle::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto e = oracle::random_texpr(rng, 5);
    const auto set = Compiler(kAb).compile_t(e);
    ASSERT_EQ(set.automata.size(), oracle::predicted_members(e));
    for (const auto& m : set.automata)
      ASSERT_EQ(m.counters(), oracle::predicted_counters(e)) << expr::to_string(e);
  }
}

TEST(Property, StateNamesDisjoint) {
  oracle::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto e = oracle::random_omega(rng, 4);
    Compiler c(kAb, true);
    const auto merged = c.compile(e);
    std::set<std::string> names(merged.names().begin(), merged.names().end());
    EXPECT_EQ(names.size(), merged.num_states());
    const auto top = c.intermediate().back();
    std::set<std::string> seen;
    for (const auto& m : top.automata)
      for (const auto& n : m.names()) ASSERT_TRUE(seen.insert(n).second) << n;
  }
}

TEST(CompileOmega, Rules) {
  const auto set = compile_omega(expr::parse_omega_t("(a^T b)^w"));
  ASSERT_EQ(set.automata.size(), 1u);
  const auto member = Compiler(kAb).compile_t(expr::parse_t("a^T b")).automata.at(0);
  EXPECT_EQ(set.automata[0], cca::hat(member));

  const auto e1 = expr::parse_omega_t("(a+b)^w"), e2 = expr::parse_omega_t("(a b)^w");
  const auto both = compile_omega(expr::OmegaTExpr::alt(e1, e2));
  EXPECT_EQ(both.automata.size(), compile_omega(e1).automata.size() + compile_omega(e2).automata.size());

  const auto plain = compile_omega(expr::parse_omega_t("(a^T b)^w"));
  const auto prefixed = compile_omega(expr::parse_omega_t("b (a^T b)^w"));
  ASSERT_EQ(prefixed.automata.size(), plain.automata.size());
  const auto nfa_states = thompson(expr::parse_regular("b"), kAb).num_states();
  EXPECT_EQ(prefixed.automata[0].num_states(), plain.automata[0].num_states() + nfa_states);
}

TEST(Merge, Padding) {
  Compiler c(kAb);
  const auto single = c.compile_omega(expr::parse_omega_t("(a)^w"));
  const auto merged = c.merge(single);
  EXPECT_EQ(merged.num_states(), single.automata[0].num_states() + 1);
  EXPECT_EQ(merged.transitions().size(), single.automata[0].transitions().size() + 1);
  EXPECT_FALSE(merged.final_state());

  // N=3 and N=5 members.
  AutomatonSet set{"mixed", {}};
  set.automata.push_back(c.compile_omega(expr::parse_omega_t("(a b)^w")).automata.at(0));
  set.automata.push_back(c.compile_omega(expr::parse_omega_t("(a b b)^w")).automata.at(0));
  ASSERT_EQ(set.automata[0].counters(), 3u);
  ASSERT_EQ(set.automata[1].counters(), 5u);
  const auto m = c.merge(set);
  EXPECT_EQ(m.counters(), 5u);
  // Members hang off the fresh initial state in order.
  const auto init3 = m.transitions()[m.outgoing(m.initial()).front()].to;
  const auto padding = count_if(m, [&](const Transition& t) {
    return t.from == init3 && t.to == init3 && t.counter > 3;
  });
  EXPECT_EQ(padding, 4u);
  EXPECT_THROW(c.merge(AutomatonSet{"none", {}}), PreconditionError);
}

TEST(Merge, NonemptyIffSomeMember) {
  Compiler c(kAb);
  for (const char* text : {"(0)^w + (a^T b)^w", "(0)^w + (0 a)^w", "(a b)^w + (a+b)^w"}) {
    const auto set = c.compile_omega(expr::parse_omega_t(text));
    bool some = false;
    for (const auto& m : set.automata) some |= !emptiness::is_empty(m);
    EXPECT_EQ(!emptiness::is_empty(c.merge(set)), some) << text;
  }
}

TEST(Compile, Table) {
  for (const char* text : {"(a^T b)^w", "((a*b)* a^T b)^w", "(a* b)^w", "((a+b)^T b)^w"})
    EXPECT_FALSE(emptiness::is_empty(compile(expr::parse_omega_t(text)))) << text;
  for (const char* text : {"0^w", "(0 a)^w"})
    EXPECT_TRUE(emptiness::is_empty(compile(expr::parse_omega_t(text)))) << text;
}

TEST(Compile, RunPrefixes) {
  const auto a = compile(expr::parse_omega_t("(a^T b)^w"));
  for (const char* w : {"ab", "aab", "abab", "aabab"}) EXPECT_TRUE(cca::has_run_prefix(a, w)) << w;
  EXPECT_FALSE(cca::has_run_prefix(a, "ba"));
  EXPECT_FALSE(cca::has_run_prefix(a, "bb"));
}

TEST(Compile, Deterministic) {
  const auto e = expr::parse_omega_t("((a+b)^T b)^w");
  EXPECT_EQ(cca::export_automaton(compile(e), cca::Format::json),
            cca::export_automaton(compile(e), cca::Format::json));
}

TEST(Property, EmptyFreeExpressionsAreNonempty) {
  oracle::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto e = oracle::random_omega(rng, 4, "ab", false);
    EXPECT_FALSE(emptiness::is_empty(compile(e))) << expr::to_string(e);
  }
}

TEST(Property, PrefixWordsAreRunPrefixes) {
  // Prefixed expressions accept their regular prefix as a run prefix.
  oracle::Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    const auto r = oracle::random_regex(rng, 3, "ab", false);
    const auto e = expr::OmegaTExpr::prefix(r, expr::parse_omega_t("(a)^w"));
    const auto a = compile(e);
    for (const auto& w : oracle::all_strings("ab", 3))
      if (oracle::regex_matches(r, w)) EXPECT_TRUE(cca::has_run_prefix(a, w)) << expr::to_string(e) << " " << w;
  }
}

namespace {

// Turns a state path of a simple automaton into a prefix computation; in a
// simple automaton the transition between two states is unique.
cca::PrefixComputation to_computation(const cca::CCA& a, const std::vector<cca::StateId>& path) {
  cca::PrefixComputation p;
  p.configurations.push_back(cca::initial_configuration(a));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Transition* found = nullptr;
    for (auto j : a.outgoing(path[i]))
      if (a.transitions()[j].to == path[i + 1]) found = &a.transitions()[j];
    p.transitions.push_back(*found);
    p.configurations.push_back(cca::step(a, p.configurations.back(), *found));
  }
  return p;
}

}  // namespace

TEST(Probe, WitnessBlocksMatchExpression) {
  for (const char* text : {"a", "a b", "a + b", "a*", "a^T"}) {
    const auto e = expr::parse_t(text);
    const auto shape = expr::to_regular(expr::substitute_t_with_star(e));
    for (const auto& m : compile_t(e).automata) {
      const auto a = cca::simplify(cca::hat(m));
      const auto w = emptiness::brute_force_witness(a, 80);
      ASSERT_TRUE(w) << text;
      const auto blocks = cca::split_by_checks(a, to_computation(a, w->path));
      EXPECT_FALSE(blocks.empty()) << text;
      for (const auto& b : blocks) EXPECT_TRUE(oracle::regex_matches(shape, b)) << text << " block " << b;
    }
  }
}
