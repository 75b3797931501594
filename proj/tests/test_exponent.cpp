#include <gtest/gtest.h>

#include <algorithm>

#include "omegat/error.hpp"
#include "omegat/exponent.hpp"
#include "oracles.hpp"

using namespace omegat;
using namespace omegat::expr;

namespace {

std::vector<std::uint64_t> prefix(const ExponentGen& g, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(sample(g, i));
  return out;
}

}  // namespace

TEST(Sample, Staircase) {
  EXPECT_EQ(prefix(ExponentGen::staircase(), 10),
            (std::vector<std::uint64_t>{1, 1, 2, 1, 2, 3, 1, 2, 3, 4}));
}

TEST(Sample, RampIsIdentity) {
  const auto g = ExponentGen::ramp(1, 1);
  for (std::uint64_t k = 1; k < 50; ++k) EXPECT_EQ(sample(g, k), k);
}

TEST(Sample, InterleaveOfConstantAndRamp) {
  const auto g = ExponentGen::interleave(ExponentGen::constant(1), ExponentGen::ramp(2, 1));
  EXPECT_EQ(prefix(g, 4), (std::vector<std::uint64_t>{1, 2, 1, 3}));
}

TEST(Sample, Periodic) {
  EXPECT_EQ(prefix(ExponentGen::periodic({2, 5}), 5), (std::vector<std::uint64_t>{2, 5, 2, 5, 2}));
}

TEST(Sample, IndexZeroRejected) {
  EXPECT_THROW(sample(ExponentGen::staircase(), 0), PreconditionError);
}

TEST(Classify, Table) {
  EXPECT_EQ(classify(ExponentGen::staircase()), (ClassFlags{false, false, true}));
  EXPECT_EQ(classify(ExponentGen::interleave(ExponentGen::constant(1), ExponentGen::ramp(2, 1))),
            (ClassFlags{false, false, false}));
  EXPECT_EQ(classify(ExponentGen::constant(5)), (ClassFlags{true, false, false}));
  EXPECT_EQ(classify(ExponentGen::ramp(1, 1)), (ClassFlags{false, true, false}));
}

TEST(Classify, Printing) {
  EXPECT_EQ(to_string(classify(ExponentGen::staircase())),
            "bounded=false strictly_unbounded=false T=true");
}

TEST(Decompose, Examples) {
  for (auto s : prop1_decompose(ExponentGen::constant(3), 20)) EXPECT_EQ(s, Stream::bounded);
  for (auto s : prop1_decompose(ExponentGen::ramp(1, 1), 20)) EXPECT_EQ(s, Stream::strict);
  const auto g = ExponentGen::interleave(ExponentGen::constant(1), ExponentGen::ramp(2, 1));
  EXPECT_EQ(prop1_decompose(g, 6),
            (std::vector<Stream>{Stream::bounded, Stream::strict, Stream::bounded, Stream::strict,
                                 Stream::bounded, Stream::strict}));
  for (auto s : prop1_decompose(ExponentGen::staircase(), 30)) EXPECT_EQ(s, Stream::t);
}

TEST(Generator, ParsePrintRoundTrip) {
  oracle::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_generator(rng, 3);
    EXPECT_EQ(to_string(parse_generator(to_string(g))), to_string(g));
  }
  EXPECT_EQ(to_string(parse_generator(" interleave( const(1) , ramp(2,1) ) ")),
            "interleave(const(1),ramp(2,1))");
  EXPECT_THROW(parse_generator("ramp(1)"), ParseError);
  EXPECT_THROW(parse_generator("const(0)"), ParseError);
  EXPECT_THROW(parse_generator("staircase x"), ParseError);
}

TEST(Property, FlagsAgreeWithSampling) {
  oracle::Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_generator(rng, 3);
    const auto f = classify(g);
    const auto c = oracle::sampled_class(g);
    EXPECT_FALSE(f.bounded && f.strictly_unbounded) << to_string(g);
    if (f.t_holds) EXPECT_FALSE(f.bounded || f.strictly_unbounded) << to_string(g);
    EXPECT_EQ(f.bounded, c.occurring_finite) << to_string(g);
    EXPECT_EQ(f.t_holds, !c.recurring_finite) << to_string(g);
    const bool none = std::find(c.recurring.begin(), c.recurring.end(), true) == c.recurring.end();
    EXPECT_EQ(f.strictly_unbounded, none && !c.occurring_finite) << to_string(g);
  }
}

TEST(Property, DecompositionStreams) {
  oracle::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_generator(rng, 3);
    const auto c = oracle::sampled_class(g);
    const std::size_t n = 200;
    const auto labels = prop1_decompose(g, n);
    ASSERT_EQ(labels.size(), n);
    // Recombine the two streams by index order.
    std::vector<std::pair<std::size_t, std::uint64_t>> strict, rest;
    for (std::size_t j = 1; j <= n; ++j)
      (labels[j - 1] == Stream::strict ? strict : rest).push_back({j, sample(g, j)});
    std::vector<std::uint64_t> merged;
    std::size_t p = 0, q = 0;
    while (p < strict.size() || q < rest.size()) {
      if (q == rest.size() || (p < strict.size() && strict[p].first < rest[q].first))
        merged.push_back(strict[p++].second);
      else
        merged.push_back(rest[q++].second);
    }
    EXPECT_EQ(merged, prefix(g, n)) << to_string(g);
    for (auto [j, v] : strict) EXPECT_FALSE(c.recurs(v)) << to_string(g) << " @" << j;
    for (auto [j, v] : rest) EXPECT_TRUE(c.recurs(v)) << to_string(g) << " @" << j;
    const Stream other = c.recurring_finite ? Stream::bounded : Stream::t;
    for (auto s : labels)
      if (s != Stream::strict) EXPECT_EQ(s, other) << to_string(g);
  }
}

TEST(Grid, SizeAndKernelAgreement) {
  const std::vector<ExponentGen> leaves{ExponentGen::constant(2), ExponentGen::ramp(1, 2),
                                        ExponentGen::staircase()};
  EXPECT_EQ(generator_grid(leaves, 1).size(), 3u);
  EXPECT_EQ(generator_grid(leaves, 2).size(), 3u + 9u);
  const auto grid = generator_grid(leaves, 3);
  EXPECT_EQ(grid.size(), 3u + 144u);
  for (const auto& g : grid) EXPECT_LE(g.depth(), 3u);
  EXPECT_TRUE(check_decompositions(grid, 200).empty());
  EXPECT_EQ(check_decompositions(grid, 200), check_decompositions_serial(grid, 200));
}
