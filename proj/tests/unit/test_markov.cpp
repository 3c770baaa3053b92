#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "random_matrices.hpp"
#include "sftflow/errors.hpp"
#include "sftflow/markov.hpp"

namespace sftflow {
namespace {

const BinMatrix kThreeCycle = BinMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});

TEST(BinMatrix, RejectsBadInput) {
  EXPECT_THROW(BinMatrix(0, {}), DimensionError);
  EXPECT_THROW(BinMatrix(2, {1, 0, 1}), DimensionError);
  EXPECT_THROW(BinMatrix(1, {2}), DimensionError);
  EXPECT_THROW(BinMatrix(2, {1, 1, 1, 1}, {"a"}), DimensionError);
  EXPECT_THROW(BinMatrix::from_int_matrix(IntMatrix::from_rows({{1, 2}, {0, 1}})),
               DimensionError);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(golden_mean()));
  EXPECT_FALSE(is_irreducible(BinMatrix::from_rows({{1, 0}, {0, 1}})));
  EXPECT_TRUE(is_irreducible(kThreeCycle));
  EXPECT_TRUE(is_irreducible(BinMatrix::from_rows({{1}})));
  EXPECT_FALSE(is_irreducible(BinMatrix::from_rows({{0}})));
  EXPECT_FALSE(is_irreducible(BinMatrix::from_rows({{1, 1}, {0, 1}})));
}

TEST(Permutation, Examples) {
  EXPECT_TRUE(is_permutation(BinMatrix::from_rows({{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_permutation(golden_mean()));
  EXPECT_TRUE(is_permutation(BinMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST(Period, Examples) {
  EXPECT_EQ(period(BinMatrix::from_rows({{0, 1}, {1, 0}})), 2u);
  EXPECT_EQ(period(full_shift(2)), 1u);
  EXPECT_EQ(period(kThreeCycle), 3u);
  EXPECT_EQ(period(BinMatrix::from_rows({{1}})), 1u);
}

TEST(Period, RejectsReducible) {
  EXPECT_THROW(period(BinMatrix::from_rows({{1, 0}, {0, 1}})), PreconditionError);
  EXPECT_THROW(period(BinMatrix::from_rows({{0}})), PreconditionError);
}

// gcd of k <= 3N with trace(A^k) > 0 is the period of an irreducible matrix.
TEST(Period, MatchesTraceOracle) {
  testing::Rng rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const BinMatrix a = testing::random_irreducible(rng, 1, 6);
    const IntMatrix m = a.to_int();
    IntMatrix p = IntMatrix::identity(a.size());
    std::size_t g = 0;
    for (std::size_t k = 1; k <= 3 * a.size(); ++k) {
      p = p * m;
      Integer tr = 0;
      for (std::size_t i = 0; i < a.size(); ++i) tr += p(i, i);
      if (tr > 0) g = std::gcd(g, k);
    }
    EXPECT_EQ(period(a), g);
  }
}

TEST(AdmissibleWords, GoldenMeanPairs) {
  const auto words = admissible_words(golden_mean(), 2);
  ASSERT_EQ(words.size(), 3u);
  EXPECT_EQ(word_to_string(words[0], 2), "11");
  EXPECT_EQ(word_to_string(words[1], 2), "12");
  EXPECT_EQ(word_to_string(words[2], 2), "21");
}

TEST(AdmissibleWords, SingleSymbols) {
  const auto words = admissible_words(kThreeCycle, 1);
  ASSERT_EQ(words.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(words[i], Word{i});
}

TEST(AdmissibleWords, FullShiftCount) { EXPECT_EQ(admissible_words(full_shift(2), 3).size(), 8u); }

TEST(AdmissibleWords, MatchesEnumerationAndCountRecurrence) {
  testing::Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const BinMatrix a = testing::random_bin_matrix(rng, 1 + trial % 4, 0.5);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto words = admissible_words(a, k);
      EXPECT_EQ(words, testing::brute_force_words(a, k));
      std::size_t extensions = 0;
      for (const Word& w : words) extensions += a.out_degree(w.back());
      EXPECT_EQ(admissible_words(a, k + 1).size(), extensions);
    }
  }
}

TEST(HigherBlock, OneIsIdentity) {
  const auto hb = higher_block(golden_mean(), 1);
  EXPECT_EQ(hb.matrix, golden_mean());
  EXPECT_EQ(hb.words.size(), 2u);
}

TEST(HigherBlock, GoldenMeanTwoBlock) {
  const auto hb = higher_block(golden_mean(), 2);
  ASSERT_EQ(hb.words.size(), 3u);
  EXPECT_EQ(hb.matrix.entries(),
            BinMatrix::from_rows({{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}).entries());
  EXPECT_EQ(hb.matrix.labels(), (std::vector<std::string>{"11", "12", "21"}));
}

TEST(HigherBlock, FullShiftTwoBlock) {
  const auto hb = higher_block(full_shift(2), 2);
  ASSERT_EQ(hb.words.size(), 4u);
  for (std::size_t p = 0; p < 4; ++p) {
    EXPECT_EQ(hb.matrix.out_degree(p), 2u);
    for (std::size_t q = 0; q < 4; ++q) {
      EXPECT_EQ(hb.matrix(p, q), hb.words[p].back() == hb.words[q].front());
    }
  }
}

TEST(HigherBlock, EmptyWordSetIsAnError) {
  // Only the path 1 -> 2; no words of length 3.
  EXPECT_THROW(higher_block(BinMatrix::from_rows({{0, 1}, {0, 0}}), 3), PreconditionError);
}

TEST(HigherBlock, RowSumsAndIrreducibility) {
  testing::Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const BinMatrix a = testing::random_irreducible(rng, 1, 4);
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto hb = higher_block(a, k);
      for (std::size_t p = 0; p < hb.words.size(); ++p) {
        EXPECT_EQ(hb.matrix.out_degree(p), a.out_degree(hb.words[p].back()));
      }
      EXPECT_TRUE(is_irreducible(hb.matrix));
    }
  }
}

}  // namespace
}  // namespace sftflow
