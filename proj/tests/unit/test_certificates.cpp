#include <gtest/gtest.h>

#include "random_matrices.hpp"
#include "sftflow/certificates.hpp"
#include "sftflow/errors.hpp"
#include "sftflow/flow_invariants.hpp"
#include "sftflow/suspension.hpp"

namespace sftflow {
namespace {

const IntMatrix kGolden = IntMatrix::from_rows({{1, 1}, {1, 0}});
const IntMatrix kGoldenSplit = IntMatrix::from_rows({{1, 1, 0}, {0, 0, 1}, {1, 1, 0}});

// Random 0-1 R (n x m), S (m x n). RS and SR may have entries above 1.
ElementarySSE random_factorization(testing::Rng& rng, std::size_t n, std::size_t m) {
  return {testing::random_int_matrix(rng, n, m, 0, 1), testing::random_int_matrix(rng, m, n, 0, 1)};
}

TEST(VerifySE, SelfCertificate) {
  testing::Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix a = testing::random_int_matrix(rng, 1 + trial % 4, 1 + trial % 4, 0, 2);
    EXPECT_TRUE(verify_shift_equivalence(a, a, SECertificate{a, a, 2}));
  }
}

TEST(VerifySE, ElementaryPairs) {
  testing::Rng rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    const ElementarySSE e = random_factorization(rng, 1 + trial % 4, 1 + trial % 3);
    const IntMatrix a = e.r * e.s;
    const IntMatrix b = e.s * e.r;
    EXPECT_TRUE(verify_elementary_sse(a, b, e.r, e.s));
    EXPECT_TRUE(verify_shift_equivalence(a, b, to_certificate(e)));
  }
}

TEST(VerifySE, NegativeEntryFailsNonnegativity) {
  IntMatrix h = kGolden;
  h(0, 0) = -1;
  const Verdict v = verify_shift_equivalence(kGolden, kGolden, SECertificate{h, kGolden, 2});
  EXPECT_FALSE(v);
  EXPECT_NE(v.reason.find("nonnegativity"), std::string::npos);
}

TEST(VerifySE, ReportsFirstFailingRelation) {
  IntMatrix h = kGolden;
  h(1, 1) = 1;
  const Verdict v = verify_shift_equivalence(kGolden, kGolden, SECertificate{h, kGolden, 2});
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reason, "A^l ≠ HK");
  EXPECT_EQ(verify_shift_equivalence(kGolden, kGolden, SECertificate{kGolden, kGolden, 0}).reason,
            "lag must be positive");
}

TEST(VerifySE, ShapeMismatch) {
  EXPECT_THROW(verify_shift_equivalence(kGolden, kGolden,
                                        SECertificate{IntMatrix(2, 3), IntMatrix(3, 2), 1}),
               DimensionError);
  EXPECT_THROW(verify_elementary_sse(kGolden, kGolden, IntMatrix(2, 2), IntMatrix(3, 2)),
               DimensionError);
}

TEST(VerifyElementary, TrivialFactorizations) {
  const IntMatrix id = IntMatrix::identity(2);
  EXPECT_TRUE(verify_elementary_sse(kGolden, kGolden, kGolden, id));
  EXPECT_TRUE(verify_elementary_sse(kGolden, kGolden, id, kGolden));
}

TEST(VerifyElementary, GoldenMeanOutSplit) {
  const IntMatrix r = IntMatrix::from_rows({{1, 1, 0}, {0, 0, 1}});
  const IntMatrix s = IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 0}});
  EXPECT_TRUE(verify_elementary_sse(kGolden, kGoldenSplit, r, s));
  EXPECT_THROW(verify_elementary_sse(kGoldenSplit, kGolden, r, s), DimensionError);
}

TEST(VerifyElementary, FailureReasons) {
  const IntMatrix id = IntMatrix::identity(2);
  EXPECT_EQ(verify_elementary_sse(kGolden, kGolden, id, id).reason, "A ≠ RS");
  const IntMatrix p = IntMatrix::from_rows({{0, 1}, {1, 0}});
  // R = P, S = P A: RS = A but SR = P A P.
  EXPECT_EQ(verify_elementary_sse(kGolden, kGolden, p, p * kGolden).reason, "B ≠ SR");
}

TEST(KroneckerSE, SelfCertificate) {
  const BinMatrix a = golden_mean();
  const IntMatrix k = kronecker(a.to_int().transpose(), a.to_int());
  EXPECT_TRUE(verify_kronecker_se(a, a, SECertificate{k, k, 2}));
}

TEST(KroneckerSE, LiftedElementaryPairs) {
  const BinMatrix a = golden_mean();
  const Splitting sp = out_split(a, 0, {0});
  const SECertificate cert = kronecker_certificate(sp.witness);
  EXPECT_TRUE(verify_kronecker_se(a, sp.matrix, cert));

  testing::Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const BinMatrix x = testing::random_irreducible(rng, 2, 4);
    const auto moves = flow_moves(x);
    for (const FlowMove& mv : moves) {
      if (!mv.witness) continue;
      const SECertificate c = kronecker_certificate(*mv.witness);
      // Independent check by direct multiplication.
      const IntMatrix at_a = kronecker(x.to_int().transpose(), x.to_int());
      const IntMatrix bt_b = kronecker(mv.matrix.to_int().transpose(), mv.matrix.to_int());
      EXPECT_EQ(c.h * c.k, at_a);
      EXPECT_EQ(c.k * c.h, bt_b);
      EXPECT_TRUE(verify_kronecker_se(x, mv.matrix, c)) << mv.label;
    }
  }
}

TEST(KroneckerSE, FailsOnlyTheTransposeIntertwining) {
  // Q swaps states 1 and 2; it commutes with (A^t)^2 but not with A^t.
  // H = A^t Q ⊗ A, K = Q A^t ⊗ A satisfy every relation except the
  // first-factor intertwining.
  const BinMatrix a = BinMatrix::from_rows({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}});
  const IntMatrix at = a.to_int().transpose();
  const IntMatrix q = IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  ASSERT_EQ(q * at * at, at * at * q);
  ASSERT_NE(q * at, at * q);
  const SECertificate cert{kronecker(at * q, a.to_int()), kronecker(q * at, a.to_int()), 2};
  const Verdict v = verify_kronecker_se(a, a, cert);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reason, "(A^t⊗1)H ≠ H(B^t⊗1)");
}

TEST(KroneckerSE, ShapeMismatch) {
  EXPECT_THROW(verify_kronecker_se(golden_mean(), golden_mean(),
                                   SECertificate{IntMatrix(2, 2), IntMatrix(2, 2), 1}),
               DimensionError);
}

TEST(Search, SelfPair) {
  for (const IntMatrix& a : {kGolden, full_shift(2).to_int()}) {
    const auto found = search_elementary_sse(a, a, 2, 1);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(verify_elementary_sse(a, a, found->r, found->s));
  }
}

TEST(Search, GoldenMeanOutSplit) {
  const auto found = search_elementary_sse(kGolden, kGoldenSplit, 3, 1);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(verify_elementary_sse(kGolden, kGoldenSplit, found->r, found->s));
}

TEST(Search, FullTwoVersusFullThreeFindsNothing) {
  EXPECT_FALSE(search_elementary_sse(full_shift(2).to_int(), full_shift(3).to_int(), 3, 1));
}

TEST(Search, InnerDimensionBound) {
  EXPECT_FALSE(search_elementary_sse(kGolden, kGoldenSplit, 2, 1));
}

TEST(Search, RefusesHugeSpaces) {
  EXPECT_THROW(search_elementary_sse(full_shift(3).to_int(), full_shift(3).to_int(), 3, 3),
               SearchSpaceError);
}

TEST(Search, RoundTripsOnRandomPairs) {
  testing::Rng rng(104);
  for (int trial = 0; trial < 30; ++trial) {
    const ElementarySSE e = random_factorization(rng, 2, 1 + trial % 3);
    const IntMatrix a = e.r * e.s;
    const IntMatrix b = e.s * e.r;
    const auto found = search_elementary_sse(a, b, 3, 1);
    // (R, S) itself is in range, so the search must succeed.
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(verify_elementary_sse(a, b, found->r, found->s));
  }
}

TEST(Splitting, FullShiftOutSplit) {
  const Splitting sp = out_split(full_shift(2), 0, {0});
  EXPECT_EQ(sp.matrix.size(), 3u);
  EXPECT_EQ(sp.matrix.entries(),
            BinMatrix::from_rows({{1, 1, 0}, {0, 0, 1}, {1, 1, 1}}).entries());
  EXPECT_TRUE(verify_elementary_sse(full_shift(2).to_int(), sp.matrix.to_int(), sp.witness.r,
                                    sp.witness.s));
}

TEST(Splitting, InSplitWitness) {
  const Splitting sp = in_split(golden_mean(), 0, {0});
  EXPECT_EQ(sp.matrix.size(), 3u);
  EXPECT_TRUE(verify_elementary_sse(golden_mean().to_int(), sp.matrix.to_int(), sp.witness.r,
                                    sp.witness.s));
}

TEST(Splitting, Errors) {
  EXPECT_THROW(out_split(golden_mean(), 1, {0}), PreconditionError);
  EXPECT_THROW(out_split(golden_mean(), 0, {}), PreconditionError);
  EXPECT_THROW(out_split(golden_mean(), 0, {0, 1}), PreconditionError);
  EXPECT_THROW(out_split(golden_mean(), 5, {0}), DimensionError);
}

TEST(FlowMoves, GoldenMeanOrder) {
  const auto moves = flow_moves(golden_mean());
  ASSERT_EQ(moves.size(), 4u);
  EXPECT_EQ(moves[0].label, "expand 1");
  EXPECT_EQ(moves[0].matrix.entries(),
            BinMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {1, 0, 0}}).entries());
  EXPECT_EQ(moves[1].label, "expand 2");
  EXPECT_EQ(moves[2].label.rfind("out-split 1", 0), 0u);
  EXPECT_EQ(moves[3].label.rfind("in-split 1", 0), 0u);
  EXPECT_FALSE(moves[0].witness.has_value());
  EXPECT_TRUE(moves[2].witness.has_value());
}

TEST(FlowMoves, RejectsHypothesisViolations) {
  EXPECT_THROW(flow_moves(BinMatrix::from_rows({{0, 1}, {1, 0}})), PreconditionError);
  EXPECT_THROW(flow_moves(BinMatrix::from_rows({{1, 0}, {0, 1}})), PreconditionError);
}

TEST(FlowMoves, EveryMoveIsFlowEquivalent) {
  testing::Rng rng(105);
  for (int trial = 0; trial < 40; ++trial) {
    const BinMatrix a = testing::random_irreducible(rng, 1, 5);
    for (const FlowMove& mv : flow_moves(a)) {
      EXPECT_EQ(ps_determinant(mv.matrix), ps_determinant(a)) << mv.label;
      EXPECT_EQ(bowen_franks(mv.matrix), bowen_franks(a)) << mv.label;
      EXPECT_TRUE(flow_equivalent(a, mv.matrix)) << mv.label;
      if (mv.witness) {
        EXPECT_TRUE(verify_elementary_sse(a.to_int(), mv.matrix.to_int(), mv.witness->r,
                                          mv.witness->s));
        EXPECT_TRUE(same_nonzero_spectrum(a, mv.matrix));
      }
    }
  }
}

}  // namespace
}  // namespace sftflow
