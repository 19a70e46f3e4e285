#include "oracles.hpp"
#include "vpf/enumeration.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vpf;

namespace {

const StepMatrix kOneDim = StepMatrix::from_rows({{1}});
const StepMatrix kTwoOnes = StepMatrix::from_rows({{1, 1}});
const StepMatrix kBasis = StepMatrix::from_rows({{1, 0}, {0, 1}});
const StepMatrix kDelannoy = StepMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
const StepMatrix kSkew = StepMatrix::from_rows({{2, -1}, {-1, 2}});

std::vector<LatticeVector> naive(const StepMatrix& a, const ConeCertificate& cert, const LatticeVector& lambda) {
  const std::int64_t d = ell_degree(cert, lambda);
  return oracle::box_scan_solutions(a.columns(), lambda, d);
}

}  // namespace

TEST(EnumerateSolutions, Examples) {
  const auto c2 = certify_pointed(kTwoOnes);
  const auto set = enumerate_solutions(kTwoOnes, c2, LatticeVector{3});
  const std::vector<LatticeVector> expected{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  EXPECT_EQ(set.solutions, expected);
  EXPECT_EQ(set.solutions, oracle::box_scan_solutions(kTwoOnes.columns(), LatticeVector{3}, 3));

  const auto cd = certify_pointed(kDelannoy);
  const std::vector<LatticeVector> delannoy_expected{{0, 0, 1}, {1, 1, 0}};
  EXPECT_EQ(enumerate_solutions(kDelannoy, cd, LatticeVector{1, 1}).solutions, delannoy_expected);

  EXPECT_TRUE(enumerate_solutions(kOneDim, certify_pointed(kOneDim), LatticeVector{-1}).solutions.empty());
  EXPECT_THROW(enumerate_solutions(kOneDim, certify_pointed(kOneDim), LatticeVector{1, 1}), DimensionError);
}

TEST(EnumerateSolutions, AgreesWithBoxScan) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-2, 3);
  std::vector<StepMatrix> matrices{kOneDim, kTwoOnes, kBasis, kDelannoy, kSkew,
                                   StepMatrix::from_rows({{2, 3}}), StepMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})};
  for (const auto& a : matrices) {
    const auto cert = certify_pointed(a);
    for (const auto& x : orthant_points(a.cols(), 4)) {
      LatticeVector lambda = a.apply(x);
      for (int wiggle = 0; wiggle < 2; ++wiggle) {
        if (ell_degree(cert, lambda) > 6) {
          continue;
        }
        EXPECT_EQ(enumerate_solutions(a, cert, lambda).solutions, naive(a, cert, lambda)) << lambda;
        lambda[0] += 1;  // also probe points that may be outside the semigroup
      }
    }
  }
}

TEST(EnumerateSolutions, SolutionCountBound) {
  const auto cert = certify_pointed(kSkew);
  for (const auto& x : orthant_points(2, 5)) {
    const auto lambda = kSkew.apply(x);
    const auto count = enumerate_solutions(kSkew, cert, lambda).solutions.size();
    std::int64_t bound = 1;
    for (auto deg : cert.step_degrees()) {
      bound *= 1 + ell_degree(cert, lambda) / deg;
    }
    EXPECT_LE(static_cast<std::int64_t>(count), bound);
  }
}

TEST(VectorPartition, Examples) {
  EXPECT_EQ(vector_partition(kTwoOnes, certify_pointed(kTwoOnes), LatticeVector{3}), 4);
  EXPECT_EQ(vector_partition(kBasis, certify_pointed(kBasis), LatticeVector{7, 9}), 1);
  EXPECT_EQ(vector_partition(kDelannoy, certify_pointed(kDelannoy), LatticeVector{1, 1}), 2);
}

TEST(GeneralizedVp, RunningSum) {
  // φ(x1, x2) = h(x1) with h(k) = k reduces to Σ_{k=0}^{λ} h(k).
  const auto h = WeightFunction::tabulate(LatticeVector{5, 5}, [](const LatticeVector& x) { return Scalar(x[0]); });
  const auto cert = certify_pointed(kTwoOnes);
  EXPECT_EQ(generalized_vp(kTwoOnes, cert, LatticeVector{3}, h), 6);
  for (std::int64_t lambda = 0; lambda <= 5; ++lambda) {
    EXPECT_EQ(generalized_vp(kTwoOnes, cert, LatticeVector{lambda}, h), lambda * (lambda + 1) / 2);
  }
}

TEST(GeneralizedVp, ConstantOneIsClassical) {
  for (const auto& a : {kTwoOnes, kBasis, kDelannoy, kSkew}) {
    const auto cert = certify_pointed(a);
    for (const auto& x : orthant_points(a.cols(), 3)) {
      const auto lambda = a.apply(x);
      EXPECT_EQ(generalized_vp(a, cert, lambda, ConstantOne{a.cols()}), vector_partition(a, cert, lambda));
    }
  }
}

TEST(GeneralizedVp, DelannoyWithLatticePathWeights) {
  const auto cert = certify_pointed(kDelannoy);
  EXPECT_EQ(generalized_vp(kDelannoy, cert, LatticeVector{1, 1}, LatticePathCount{3}), 3);
  for (std::int64_t a = 0; a <= 3; ++a) {
    for (std::int64_t b = 0; b <= 3; ++b) {
      EXPECT_EQ(generalized_vp(kDelannoy, cert, LatticeVector{a, b}, LatticePathCount{3}), oracle::delannoy(a, b));
    }
  }
  EXPECT_THROW(generalized_vp(kDelannoy, cert, LatticeVector{1, 1}, LatticePathCount{2}), DimensionError);
}

TEST(GeneralizedVpTable, Examples) {
  const auto basis = generalized_vp_table(kBasis, certify_pointed(kBasis), ConstantOne{2}, 1);
  const GradedTable expected_basis{{{0, {0, 0}}, 1}, {{1, {0, 1}}, 1}, {{1, {1, 0}}, 1}};
  EXPECT_EQ(basis, expected_basis);

  const auto ones = generalized_vp_table(kTwoOnes, certify_pointed(kTwoOnes), ConstantOne{2}, 2);
  const GradedTable expected_ones{{{0, {0}}, 1}, {{1, {1}}, 2}, {{2, {2}}, 3}};
  EXPECT_EQ(ones, expected_ones);

  const auto del = generalized_vp_table(kDelannoy, certify_pointed(kDelannoy), LatticePathCount{3}, 2);
  const GradedTable expected_del{{{0, {0, 0}}, 1}, {{1, {0, 1}}, 1}, {{1, {1, 0}}, 1},
                                 {{2, {0, 2}}, 1}, {{2, {1, 1}}, 3}, {{2, {2, 0}}, 1}};
  EXPECT_EQ(del, expected_del);
  const auto del4 = generalized_vp_table(kDelannoy, certify_pointed(kDelannoy), LatticePathCount{3}, 4);
  EXPECT_EQ(del4.at(GradedKey{4, {2, 2}}), 13);
}

TEST(GeneralizedVpTable, ExplicitZerosForUnreachableLatticePoints) {
  // Steps 2 and 3: 1 is in the integer span but not in the semigroup.
  const auto a = StepMatrix::from_rows({{2, 3}});
  const auto table = generalized_vp_table(a, certify_pointed(a), ConstantOne{2}, 6);
  const GradedTable expected{{{0, {0}}, 1}, {{1, {1}}, 0}, {{2, {2}}, 1}, {{3, {3}}, 1},
                             {{4, {4}}, 1}, {{5, {5}}, 1}, {{6, {6}}, 2}};
  EXPECT_EQ(table, expected);
  // Only even points lie in the span of (2).
  const auto even = StepMatrix::from_rows({{2}});
  EXPECT_EQ(generalized_vp_table(even, certify_pointed(even), ConstantOne{1}, 4).size(), 3u);
}

TEST(GeneralizedVpTable, MatchesPointwiseEvaluation) {
  const auto cert = certify_pointed(kSkew);
  const WeightFunction phi(GeometricWeights{{Scalar(1, 2), Scalar(2, 3)}});
  for (const auto& [key, value] : generalized_vp_table(kSkew, cert, phi, 6)) {
    EXPECT_EQ(value, generalized_vp(kSkew, cert, key.exponent, phi)) << key.exponent;
    EXPECT_EQ(key.degree, ell_degree(cert, key.exponent));
  }
}

TEST(IntegerSpan, Membership) {
  const IntegerSpan span(2, {LatticeVector{2, 0}, LatticeVector{1, 1}});
  EXPECT_EQ(span.rank(), 2u);
  EXPECT_TRUE(span.contains(LatticeVector{3, 1}));
  EXPECT_TRUE(span.contains(LatticeVector{0, 2}));
  EXPECT_FALSE(span.contains(LatticeVector{1, 0}));
  const IntegerSpan line(2, {LatticeVector{2, 4}, LatticeVector{3, 6}});
  EXPECT_EQ(line.rank(), 1u);
  EXPECT_TRUE(line.contains(LatticeVector{1, 2}));
  EXPECT_FALSE(line.contains(LatticeVector{1, 1}));
}
